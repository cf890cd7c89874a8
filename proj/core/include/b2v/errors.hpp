#pragma once

#include <stdexcept>
#include <string>

namespace b2v {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input (rational strings, JSON polynomials, CLI values).
class ParseError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A denominator Pochhammer symbol of a hypergeometric series vanishes
/// inside the summed range.
class ZeroDenominatorTerm : public Error {
 public:
  using Error::Error;
};

class NotTerminating : public Error {
 public:
  using Error::Error;
};

class NotBalanced : public Error {
 public:
  using Error::Error;
};

class VarSetMismatch : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

class NotHomogeneous : public Error {
 public:
  using Error::Error;
};

/// kappa hits a pole of the moment formulas (a vanishing (kappa+1/2)_b or
/// (4 kappa)_N), or is one of the singular values of the intertwiner.
class SingularParameter : public Error {
 public:
  using Error::Error;
};

/// 4 kappa + n or 8 kappa + n vanishes for an even degree n.
class PoleInDegreeFactor : public Error {
 public:
  using Error::Error;
};

/// The intertwining equations have no unique solution.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

class InvalidWeight : public Error {
 public:
  using Error::Error;
};

class KappaOutOfRange : public Error {
 public:
  using Error::Error;
};

}  // namespace b2v

#pragma once

#include <string_view>

#include "b2v/rational.hpp"

namespace b2v {

/// The equal-parameter multiplicity kappa with its singularity flag.
///
/// kappa is singular iff kappa = -m/4 for a positive integer m that is not
/// a multiple of 4, i.e. kappa lies in (-1/2 - N0) u (-1/4 - N0) u (-3/4 - N0).
class Kappa {
 public:
  Kappa() : Kappa(Rational(0)) {}
  Kappa(const Rational& value);  // NOLINT: a Kappa is just a classified Rational
  template <std::integral T>
  Kappa(T value) : Kappa(Rational(value)) {}  // NOLINT

  static Kappa parse(std::string_view text) { return Kappa(Rational::parse(text)); }

  const Rational& value() const { return value_; }
  bool singular() const { return singular_; }

  friend bool operator==(const Kappa& a, const Kappa& b) { return a.value_ == b.value_; }

 private:
  Rational value_;
  bool singular_ = false;
};

bool is_singular_kappa(const Rational& k);

}  // namespace b2v

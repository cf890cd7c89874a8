#pragma once

#include <array>
#include <map>
#include <mutex>

#include "b2v/kappa.hpp"
#include "b2v/polynomial.hpp"

namespace b2v {

/// Exponent vector alpha of a q-monomial q1^a1 q2^a2 q3^a3 q4^a4.
struct MultiIndex4 {
  std::array<unsigned, 4> a{};

  MultiIndex4() = default;
  MultiIndex4(unsigned a1, unsigned a2, unsigned a3, unsigned a4) : a{a1, a2, a3, a4} {}

  unsigned operator[](int i) const { return a[i]; }
  unsigned total() const { return a[0] + a[1] + a[2] + a[3]; }
  /// All entries share one parity.
  bool parity_ok() const;
  /// b0 = (a2+a3)/2, b1 = (a1+a4)/2, b2 = (a2+a4)/2, b3 = (a3+a4)/2.
  /// Throws RangeError unless parity_ok().
  unsigned b(int i) const;

  friend auto operator<=>(const MultiIndex4&, const MultiIndex4&) = default;
};

/// Moment s(alpha) = integral of q^alpha against mu, by the double sum.
/// Zero for mixed parity. Throws SingularParameter when (4 kappa)_|alpha|
/// or some (kappa + 1/2)_b vanishes.
Rational s_double(const MultiIndex4& alpha, const Kappa& kappa);

/// The same moment by the single-sum form in terms of F.
Rational s_single(const MultiIndex4& alpha, const Kappa& kappa);

/// s(alpha) with the factor (2k)_{2b1} (2k)_{2b0} / (4k)_{2b1+2b0} removed.
/// Zero for mixed parity.
Rational s_prime(const MultiIndex4& alpha, const Kappa& kappa);

/// LHS - RHS of the three-term recurrence of s' shifting
/// (a1, a2, a3, a4) -> (a1 -+ 1, a2 +- 1, a3 +- 1, a4 -+ 1).
/// Needs parity_ok, a1 >= 1 and a4 >= 1 (RangeError otherwise).
Rational recurrence_residual(const MultiIndex4& alpha, const Kappa& kappa);

/// The invariants g0 = 2(q1+q4), g1 = q1q4 + q2q3,
/// g2 = (q1^2 - q2^2 - q3^2 + q4^2)/2, g3 = q1q4 - q2q3.
Polynomial invariant_g(int i);

/// D0 = (q1+q4)(d1+d4) - (q2-q3)(d2-d3)
Polynomial apply_D0(const Polynomial& p);
/// D3 = q1 d4 + q4 d1 - q2 d3 - q3 d2
Polynomial apply_D3(const Polynomial& p);
/// L(g1) = q1 d4 + q4 d1 + q2 d3 + q3 d2
Polynomial apply_L_g1(const Polynomial& p);
/// L(g2) = q1 d1 - q2 d2 - q3 d3 + q4 d4
Polynomial apply_L_g2(const Polynomial& p);

/// Moment functional for a fixed kappa with a thread-safe cache of s(alpha).
class MomentFunctional {
 public:
  explicit MomentFunctional(const Kappa& kappa) : kappa_(kappa) {}

  const Kappa& kappa() const { return kappa_; }

  /// s(alpha) via the single-sum route.
  Rational s(const MultiIndex4& alpha) const;

  /// Linear extension q^alpha -> s(alpha).
  Rational xi0(const Polynomial& p) const;

  /// For homogeneous p of degree n: xi0(g0 p) when n is odd, and
  /// xi0(p) + xi0(D0 p)/(4k+n) + xi0(D3 p)/(8k+n) when n is even.
  /// Throws NotHomogeneous, PoleInDegreeFactor.
  Rational xi(const Polynomial& p) const;

  /// Like xi, but the even-degree D3 term is replaced by xi0(g3 p).
  Rational xi_g3(const Polynomial& p) const;

 private:
  Rational xi_even(const Polynomial& p, bool use_g3) const;

  Kappa kappa_;
  mutable std::mutex mutex_;
  mutable std::map<MultiIndex4, Rational> cache_;
};

Rational xi0(const Polynomial& p, const Kappa& kappa);
Rational xi(const Polynomial& p, const Kappa& kappa);

/// (8k+n) xi0(g3 p) - xi0(D3 p) for p homogeneous of even degree n.
Rational d3_identity_residual(const Polynomial& p, const Kappa& kappa);

}  // namespace b2v

#include "b2v/moments.hpp"

#include "b2v/errors.hpp"
#include "b2v/hyper.hpp"

namespace b2v {

namespace {

const Rational kHalf(1, 2);

Rational checked_denominator(const Rational& value, const char* what) {
  if (value.is_zero()) throw SingularParameter(std::string("kappa is a pole of ") + what);
  return value;
}

void require_q(const Polynomial& p) {
  if (p.var_set() != VarSet::Q) throw VarSetMismatch("expected a polynomial over Q");
}

Polynomial q(int i) { return Polynomial::variable(VarSet::Q, i - 1); }
Polynomial d(const Polynomial& p, int i) { return diff(p, i - 1); }

// prod_i (1/2)_{b_i} / (k+1/2)_{b_i} over b1, b2, b3.
Rational half_ratio(const MultiIndex4& alpha, const Rational& k) {
  Rational r(1);
  for (int i : {1, 2, 3}) {
    const unsigned b = alpha.b(i);
    r *= pochhammer(kHalf, b) / checked_denominator(pochhammer(k + kHalf, b), "(kappa+1/2)_b");
  }
  return r;
}

Rational prefactor_2k_over_4k(const MultiIndex4& alpha, const Rational& k) {
  const Rational two_k = Rational(2) * k;
  return pochhammer(two_k, alpha[0] + alpha[3]) * pochhammer(two_k, alpha[1] + alpha[2]) /
         checked_denominator(pochhammer(Rational(4) * k, alpha.total()), "(4 kappa)_|alpha|");
}

Rational s_prime_unchecked(const MultiIndex4& alpha, const Rational& k) {
  const Rational v1 = Rational(static_cast<long>(alpha[0]) - static_cast<long>(alpha[3]), 2);
  return half_ratio(alpha, k) *
         eval_F(static_cast<int>(alpha[3]), k, v1, Rational(alpha.b(2)), Rational(alpha.b(3)));
}

}  // namespace

bool MultiIndex4::parity_ok() const {
  const unsigned p = a[0] & 1U;
  return (a[1] & 1U) == p && (a[2] & 1U) == p && (a[3] & 1U) == p;
}

unsigned MultiIndex4::b(int i) const {
  if (!parity_ok()) throw RangeError("b-values need all exponents of one parity");
  switch (i) {
    case 0: return (a[1] + a[2]) / 2;
    case 1: return (a[0] + a[3]) / 2;
    case 2: return (a[1] + a[3]) / 2;
    case 3: return (a[2] + a[3]) / 2;
    default: throw RangeError("b index must be 0..3");
  }
}

Rational s_double(const MultiIndex4& alpha, const Kappa& kappa) {
  if (!alpha.parity_ok()) return Rational(0);
  const Rational& k = kappa.value();
  const unsigned b0 = alpha.b(0), b1 = alpha.b(1), b3 = alpha.b(3);
  const Rational two_k = Rational(2) * k;

  Rational pre = pochhammer(two_k, 2 * b1) * pochhammer(two_k, 2 * b0) * pochhammer(kHalf, b1) *
                 pochhammer(kHalf, b0) * pochhammer(kHalf, b3);
  pre /= checked_denominator(pochhammer(Rational(4) * k, 2 * b1 + 2 * b0), "(4 kappa)_|alpha|");
  for (unsigned b : {b1, b0, b3}) pre /= checked_denominator(pochhammer(k + kHalf, b), "(kappa+1/2)_b");

  const Rational h1 = kHalf - Rational(b1);
  const Rational h0 = kHalf - Rational(b0);
  const Rational h3 = kHalf - Rational(b3);
  const long a3 = alpha[2], a4 = alpha[3];
  Rational sum(0);
  for (unsigned i = 0; i <= alpha[3] / 2; ++i) {
    const Rational ti = pochhammer(Rational(-a4), 2 * i) / (factorial(i) * pochhammer(h1, i));
    for (unsigned j = 0; j <= alpha[2] / 2; ++j) {
      Rational t = ti * pochhammer(Rational(-a3), 2 * j) * pochhammer(k, i + j) /
                   (factorial(j) * pochhammer(h0, j) * pochhammer(h3, i + j));
      mpz_class p4;
      mpz_ui_pow_ui(p4.get_mpz_t(), 4, i + j);
      sum += t / Rational(p4);
    }
  }
  return pre * sum;
}

Rational s_single(const MultiIndex4& alpha, const Kappa& kappa) {
  if (!alpha.parity_ok()) return Rational(0);
  const Rational pre = prefactor_2k_over_4k(alpha, kappa.value());
  return pre * s_prime_unchecked(alpha, kappa.value());
}

Rational s_prime(const MultiIndex4& alpha, const Kappa& kappa) {
  if (!alpha.parity_ok()) return Rational(0);
  return s_prime_unchecked(alpha, kappa.value());
}

Rational recurrence_residual(const MultiIndex4& alpha, const Kappa& kappa) {
  if (!alpha.parity_ok()) throw RangeError("recurrence needs all exponents of one parity");
  if (alpha[0] < 1 || alpha[3] < 1) throw RangeError("recurrence needs a1 >= 1 and a4 >= 1");
  const Rational& k = kappa.value();
  const Rational a1(alpha[0]), a2(alpha[1]), a3(alpha[2]), a4(alpha[3]);
  const Rational one(1);

  Rational lhs = a1 * a4 * (k + kHalf * (a2 + a3 + one)) *
                 s_prime({alpha[0] - 1, alpha[1] + 1, alpha[2] + 1, alpha[3] - 1}, kappa);
  lhs += kHalf * (a2 * a3 * (a1 + a4 + one) - a1 * a4 * (a2 + a3 + one)) * s_prime(alpha, kappa);
  Rational rhs(0);
  if (alpha[1] > 0 && alpha[2] > 0) {
    rhs = a2 * a3 * (k + kHalf * (a1 + a4 + one)) *
          s_prime({alpha[0] + 1, alpha[1] - 1, alpha[2] - 1, alpha[3] + 1}, kappa);
  }
  return lhs - rhs;
}

Polynomial invariant_g(int i) {
  switch (i) {
    case 0: return Rational(2) * (q(1) + q(4));
    case 1: return q(1) * q(4) + q(2) * q(3);
    case 2: return kHalf * (q(1) * q(1) - q(2) * q(2) - q(3) * q(3) + q(4) * q(4));
    case 3: return q(1) * q(4) - q(2) * q(3);
    default: throw RangeError("invariant index must be 0..3");
  }
}

Polynomial apply_D0(const Polynomial& p) {
  require_q(p);
  return (q(1) + q(4)) * (d(p, 1) + d(p, 4)) - (q(2) - q(3)) * (d(p, 2) - d(p, 3));
}

Polynomial apply_D3(const Polynomial& p) {
  require_q(p);
  return q(1) * d(p, 4) + q(4) * d(p, 1) - q(2) * d(p, 3) - q(3) * d(p, 2);
}

Polynomial apply_L_g1(const Polynomial& p) {
  require_q(p);
  return q(1) * d(p, 4) + q(4) * d(p, 1) + q(2) * d(p, 3) + q(3) * d(p, 2);
}

Polynomial apply_L_g2(const Polynomial& p) {
  require_q(p);
  return q(1) * d(p, 1) - q(2) * d(p, 2) - q(3) * d(p, 3) + q(4) * d(p, 4);
}

Rational MomentFunctional::s(const MultiIndex4& alpha) const {
  if (!alpha.parity_ok()) return Rational(0);
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(alpha); it != cache_.end()) return it->second;
  }
  Rational value = s_single(alpha, kappa_);
  std::lock_guard lock(mutex_);
  cache_.emplace(alpha, value);
  return value;
}

Rational MomentFunctional::xi0(const Polynomial& p) const {
  require_q(p);
  Rational sum(0);
  for (const auto& [e, c] : p.terms()) sum += c * s({e[0], e[1], e[2], e[3]});
  return sum;
}

Rational MomentFunctional::xi_even(const Polynomial& p, bool use_g3) const {
  const int n = p.degree();
  // Constants: both operator terms vanish, so no degree factor is involved.
  if (n <= 0) return xi0(p);
  const Rational& k = kappa_.value();
  const Rational f0 = Rational(4) * k + Rational(n);
  const Rational f3 = Rational(8) * k + Rational(n);
  if (f0.is_zero()) throw PoleInDegreeFactor("4 kappa + n = 0 for n = " + std::to_string(n));
  if (f3.is_zero()) throw PoleInDegreeFactor("8 kappa + n = 0 for n = " + std::to_string(n));
  Rational r = xi0(p) + xi0(apply_D0(p)) / f0;
  r += use_g3 ? xi0(invariant_g(3) * p) : xi0(apply_D3(p)) / f3;
  return r;
}

Rational MomentFunctional::xi(const Polynomial& p) const {
  require_q(p);
  if (!p.is_homogeneous()) throw NotHomogeneous("xi needs a homogeneous polynomial");
  if (p.is_zero()) return Rational(0);
  if (p.degree() % 2 == 1) return xi0(invariant_g(0) * p);
  return xi_even(p, false);
}

Rational MomentFunctional::xi_g3(const Polynomial& p) const {
  require_q(p);
  if (!p.is_homogeneous()) throw NotHomogeneous("xi needs a homogeneous polynomial");
  if (p.is_zero()) return Rational(0);
  if (p.degree() % 2 == 1) return xi0(invariant_g(0) * p);
  return xi_even(p, true);
}

Rational xi0(const Polynomial& p, const Kappa& kappa) { return MomentFunctional(kappa).xi0(p); }
Rational xi(const Polynomial& p, const Kappa& kappa) { return MomentFunctional(kappa).xi(p); }

Rational d3_identity_residual(const Polynomial& p, const Kappa& kappa) {
  require_q(p);
  if (!p.is_homogeneous()) throw NotHomogeneous("d3 identity needs a homogeneous polynomial");
  if (p.is_zero()) return Rational(0);
  const int n = p.degree();
  if (n % 2 != 0) throw RangeError("d3 identity needs even degree");
  const MomentFunctional mf(kappa);
  return (Rational(8) * kappa.value() + Rational(n)) * mf.xi0(invariant_g(3) * p) - mf.xi0(apply_D3(p));
}

}  // namespace b2v

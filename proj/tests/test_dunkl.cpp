#include <gtest/gtest.h>

#include <random>

#include "b2v/dunkl.hpp"
#include "b2v/group.hpp"

using namespace b2v;

namespace {

Polynomial x(int i) { return Polynomial::variable(VarSet::X, i); }
Polynomial one() { return Polynomial::constant(VarSet::X, Rational(1)); }

Polynomial random_homogeneous(std::mt19937_64& rng, unsigned degree) {
  std::uniform_int_distribution<long> coef(-6, 6);
  Polynomial p(VarSet::X);
  for (unsigned j = 0; j <= degree; ++j) {
    p.add_term(Exponent{static_cast<std::uint16_t>(degree - j), static_cast<std::uint16_t>(j)},
               Rational(coef(rng), 1 + std::abs(coef(rng))));
  }
  return p;
}

}  // namespace

TEST(Dunkl, FirstDegreeValues) {
  for (const Kappa k : {Kappa(0), Kappa(1), Kappa(Rational(-7, 3)), Kappa(Rational(5, 2))}) {
    EXPECT_EQ(apply_T(1, k, x(0)), one() * (Rational(1) + Rational(4) * k.value()));
    EXPECT_TRUE(apply_T(1, k, x(1)).is_zero());
    EXPECT_TRUE(apply_T(1, k, one()).is_zero());
    EXPECT_EQ(apply_T(2, k, x(1)), one() * (Rational(1) + Rational(4) * k.value()));
  }
}

TEST(Dunkl, ReducesToPartialDerivativesAtZero) {
  std::mt19937_64 rng(1);
  for (unsigned d = 0; d <= 7; ++d) {
    const Polynomial p = random_homogeneous(rng, d);
    EXPECT_EQ(apply_T(1, Kappa(0), p), diff(p, 0));
    EXPECT_EQ(apply_T(2, Kappa(0), p), diff(p, 1));
  }
}

TEST(Dunkl, Commutativity) {
  EXPECT_TRUE(check_commutativity(Kappa(1), 6));
  EXPECT_TRUE(check_commutativity(Kappa(Rational(-7, 3)), 6));
  EXPECT_TRUE(check_commutativity(Kappa(0), 6));
  EXPECT_TRUE(check_commutativity(Kappa(Rational(-1, 4)), 6));
}

TEST(Dunkl, LowersDegreeByOne) {
  std::mt19937_64 rng(2);
  const Kappa k(Rational(3, 7));
  for (unsigned d = 1; d <= 8; ++d) {
    const Polynomial t = apply_T(1, k, random_homogeneous(rng, d));
    if (!t.is_zero()) {
      EXPECT_TRUE(t.is_homogeneous());
      EXPECT_EQ(t.degree(), static_cast<int>(d) - 1);
    }
  }
}

TEST(Dunkl, EquivariantUnderReflections) {
  std::mt19937_64 rng(3);
  const Kappa k(Rational(5, 3));
  const GroupElement s1 = GroupElement::sigma1(), s2 = GroupElement::sigma2();
  for (unsigned d = 0; d <= 6; ++d) {
    const Polynomial p = random_homogeneous(rng, d);
    // Swapping the coordinates exchanges T1 and T2.
    EXPECT_EQ(apply_T(1, k, act(s2, p)), act(s2, apply_T(2, k, p)));
    // Flipping x1 flips the sign of T1 and leaves T2 alone.
    EXPECT_EQ(apply_T(1, k, act(s1, p)), -act(s1, apply_T(1, k, p)));
    EXPECT_EQ(apply_T(2, k, act(s1, p)), act(s1, apply_T(2, k, p)));
  }
}

TEST(Dunkl, LinearInKappa) {
  std::mt19937_64 rng(4);
  const Polynomial p = random_homogeneous(rng, 5);
  const Polynomial t0 = apply_T(1, Kappa(0), p);
  const Polynomial t1 = apply_T(1, Kappa(1), p);
  const Polynomial t3 = apply_T(1, Kappa(Rational(3, 2)), p);
  EXPECT_EQ(t3 - t0, (t1 - t0) * Rational(3, 2));
}

#include <gtest/gtest.h>

#include <random>

#include "b2v/dunkl.hpp"
#include "b2v/errors.hpp"
#include "b2v/group.hpp"
#include "b2v/intertwine.hpp"

using namespace b2v;

namespace {

Polynomial x(int i) { return Polynomial::variable(VarSet::X, i); }
Polynomial xy(int i) { return Polynomial::variable(VarSet::XY, i); }
Polynomial one() { return Polynomial::constant(VarSet::X, Rational(1)); }

Polynomial monomial(unsigned a, unsigned b) {
  return Polynomial::monomial(VarSet::X, Exponent{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b)});
}

}  // namespace

TEST(ApplyV, LowDegree) {
  EXPECT_EQ(apply_V(one(), Kappa(1)), one());
  EXPECT_EQ(apply_V(x(0), Kappa(1)), x(0) * Rational(1, 5));
  EXPECT_EQ(apply_V(x(1), Kappa(1)), x(1) * Rational(1, 5));
  EXPECT_EQ(apply_V_oracle(one(), Kappa(1)), one());
  EXPECT_EQ(apply_V_oracle(x(0), Kappa(1)), x(0) * Rational(1, 5));
}

TEST(ApplyV, FormulaMatchesOracle) {
  for (const Kappa k : {Kappa(Rational(1, 3)), Kappa(Rational(-2, 7)), Kappa(4)}) {
    const MomentFunctional mf(k);
    OracleV oracle(k);
    for (unsigned n = 0; n <= 6; ++n)
      for (unsigned j = 0; j <= n; ++j) EXPECT_EQ(apply_V(monomial(n - j, j), mf), oracle.monomial(n, j));
  }
}

TEST(ApplyV, IntertwinesDunklAndPartialDerivatives) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> coef(-5, 5);
  const Kappa k(Rational(3, 4));
  for (int trial = 0; trial < 5; ++trial) {
    Polynomial f(VarSet::X);
    for (unsigned n = 0; n <= 5; ++n)
      for (unsigned j = 0; j <= n; ++j) f = f + monomial(n - j, j) * Rational(coef(rng));
    const Polynomial vf = apply_V(f, k);
    EXPECT_EQ(apply_T(1, k, vf), apply_V(diff(f, 0), k));
    EXPECT_EQ(apply_T(2, k, vf), apply_V(diff(f, 1), k));
  }
}

TEST(ApplyV, CommutesWithTheGroup) {
  const Kappa k(Rational(5, 2));
  for (const auto& w : GroupElement::all()) {
    for (unsigned n = 0; n <= 5; ++n)
      for (unsigned j = 0; j <= n; ++j) {
        const Polynomial f = monomial(n - j, j);
        EXPECT_EQ(apply_V(act(w, f), k), act(w, apply_V(f, k)));
      }
  }
}

TEST(ApplyV, PreservesDegree) {
  const Kappa k(Rational(7, 3));
  for (unsigned n = 0; n <= 6; ++n) {
    const Polynomial v = apply_V(monomial(n, 0), k);
    EXPECT_TRUE(v.is_homogeneous());
    EXPECT_EQ(v.degree(), static_cast<int>(n));
  }
}

TEST(ApplyV, G3VariantAgrees) {
  const MomentFunctional mf(Kappa(Rational(5, 2)));
  for (unsigned n = 0; n <= 6; n += 2)
    for (unsigned j = 0; j <= n; ++j) EXPECT_EQ(apply_V_g3_variant(monomial(n - j, j), mf), apply_V(monomial(n - j, j), mf));
}

TEST(ApplyV, SingularValues) {
  // kappa = -m/4 first breaks the linear system at degree m.
  EXPECT_EQ(apply_V_oracle(x(0), Kappa(Rational(-3, 4))), x(0) * Rational(-1, 2));
  EXPECT_NO_THROW(apply_V_oracle(monomial(2, 0), Kappa(Rational(-3, 4))));
  EXPECT_THROW(apply_V_oracle(monomial(3, 0), Kappa(Rational(-3, 4))), SingularSystem);
  EXPECT_THROW(apply_V_oracle(x(1), Kappa(Rational(-1, 4))), SingularSystem);
  EXPECT_NO_THROW(apply_V_oracle(monomial(8, 0), Kappa(-1)));
  EXPECT_THROW(apply_V(x(0), Kappa(Rational(-3, 4))), SingularParameter);
  // kappa = -1 is regular but 4 kappa + 4 vanishes.
  EXPECT_THROW(apply_V(monomial(4, 0), Kappa(-1)), PoleInDegreeFactor);
}

TEST(ComputeV, ReportsRoute) {
  const VResult r = compute_V(x(0), Kappa(1), VRoute::Oracle);
  EXPECT_EQ(r.route, VRoute::Oracle);
  EXPECT_EQ(r.output, x(0) * Rational(1, 5));
}

TEST(Kernel, LowDegree) {
  EXPECT_EQ(kernel_K(0, Kappa(1)), Polynomial::constant(VarSet::XY, Rational(1)));
  EXPECT_EQ(kernel_K(1, Kappa(1)), (xy(0) * xy(2) + xy(1) * xy(3)) * Rational(1, 5));
  EXPECT_TRUE(kernel_K0(1, Kappa(1)).is_zero());
  EXPECT_TRUE(kernel_K0(3, Kappa(Rational(2, 3))).is_zero());
  EXPECT_EQ(inner_xy(), xy(0) * xy(2) + xy(1) * xy(3));
}

TEST(Kernel, SymmetrizedKernelFromMoments) {
  for (const Kappa k : {Kappa(Rational(1, 3)), Kappa(2)}) {
    const MomentFunctional mf(k);
    for (unsigned n = 0; n <= 6; ++n) EXPECT_EQ(kernel_K0(n, mf), kernel_K0_from_moments(n, mf)) << n;
  }
}

TEST(Kernel, Criterion) {
  EXPECT_TRUE(check_condV(0, Kappa(1)));
  EXPECT_TRUE(check_condV(3, Kappa(Rational(5, 2))));
  EXPECT_TRUE(check_oddeqn(2, Kappa(Rational(1, 3))));
}

TEST(PartialSums, Examples) {
  EXPECT_EQ(check_big1_sum(1, 0, 1, 1, Kappa(1)), Rational(0));
  EXPECT_EQ(big1_term(0, 2, 1, 3, MomentFunctional(Kappa(Rational(7, 3)))), Rational(0));
  EXPECT_EQ(check_big2_sum(0, 1, 1, 1, Kappa(2)), Rational(0));
  EXPECT_EQ(check_oddP_identity(1, 2, 1, Kappa(Rational(1, 3))), Rational(0));
  EXPECT_THROW(check_big1_sum(0, 1, 1, 1, Kappa(1)), RangeError);
  EXPECT_THROW(check_big1_sum(3, 1, 1, 1, Kappa(1)), RangeError);
}

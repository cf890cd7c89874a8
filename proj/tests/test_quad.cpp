#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "b2v/errors.hpp"
#include "b2v/intertwine.hpp"
#include "b2v/quad.hpp"

using namespace b2v;

namespace {

Polynomial monomial(unsigned a, unsigned b) {
  return Polynomial::monomial(VarSet::X, Exponent{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b)});
}

}  // namespace

TEST(GaussJacobi, LegendreRules) {
  const QuadRule one = gauss_jacobi(1, 0.0, 0.0);
  ASSERT_EQ(one.size(), 1U);
  EXPECT_NEAR(one.nodes[0], 0.0, 1e-15);
  EXPECT_NEAR(one.weights[0], 2.0, 1e-14);
  const QuadRule two = gauss_jacobi(2, 0.0, 0.0);
  EXPECT_NEAR(two.nodes[0], -1.0 / std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(two.nodes[1], 1.0 / std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(two.weights[0], 1.0, 1e-14);
  EXPECT_NEAR(two.weights[1], 1.0, 1e-14);
}

TEST(GaussJacobi, ExactForPolynomialsUpToDegree2nMinus1) {
  // Integral of t^k (1-t)^a (1+t)^b against the mass of a shifted weight:
  // t (1-t)^a (1+t)^b = (1+t)^(b+1) (1-t)^a - (1-t)^a (1+t)^b.
  const double a = 0.7, b = 1.9;
  const QuadRule r = gauss_jacobi(6, a, b);
  EXPECT_NEAR(r.sum_weights(), jacobi_mass(a, b), 1e-13);
  double first = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) first += r.weights[i] * r.nodes[i];
  EXPECT_NEAR(first, jacobi_mass(a, b + 1.0) - jacobi_mass(a, b), 1e-13);
}

TEST(GaussJacobi, RejectsBadWeights) {
  EXPECT_THROW(gauss_jacobi(4, -1.0, 0.0), InvalidWeight);
  EXPECT_THROW(gauss_jacobi(0, 0.0, 0.0), RangeError);
}

TEST(NumericMoments, AgainstExactValues) {
  EXPECT_NEAR(numeric_moment({0, 0, 0, 0}, 1.3, 8), 1.0, 1e-15);
  EXPECT_NEAR(numeric_moment({2, 0, 0, 0}, 1.0, 12), 0.1, 1e-10);
  EXPECT_NEAR(numeric_moment({1, 0, 0, 0}, 1.0, 12), 0.0, 1e-12);
  const Kappa k(Rational(17, 10));
  for (const MultiIndex4& a : {MultiIndex4(2, 2, 2, 2), MultiIndex4(1, 1, 3, 1), MultiIndex4(4, 0, 2, 0)}) {
    const double exact = s_single(a, k).to_double();
    EXPECT_NEAR(numeric_moment(a, 1.7, 16), exact, 1e-9 * std::abs(exact));
  }
}

TEST(NumericMoments, NormalizingConstant) {
  for (double k : {0.75, 1.0, 1.7, 2.5, 4.0}) {
    EXPECT_NEAR(numeric_normalizing_constant(k, 16) / normalizing_constant_gamma(k), 1.0, 1e-10) << k;
  }
  EXPECT_THROW(MuGrid::for_measure(0.5, 8), KappaOutOfRange);
}

TEST(NumericMoments, ConvergenceRowsShrink) {
  const double exact = s_single({4, 2, 0, 2}, Kappa(1)).to_double();
  const auto rows = moment_convergence({4, 2, 0, 2}, 1.0, exact, {2, 4, 8});
  ASSERT_EQ(rows.size(), 3U);
  EXPECT_GT(rows[0].abs_error, 1e-6);
  EXPECT_LT(rows[2].abs_error, 1e-14);
}

TEST(NumericVint, LowDegree) {
  const Polynomial c = Polynomial::constant(VarSet::X, Rational(1));
  EXPECT_NEAR(numeric_Vint(c, {0.4, -1.1}, 2.0, 12), 1.0, 1e-10);
  EXPECT_NEAR(numeric_Vint(monomial(1, 0), {1.0, 1.0}, 2.0, 12), 1.0 / 9.0, 1e-8);
  const double exact = evaluate(apply_V(monomial(2, 0), Kappa(2)), std::vector<double>{1.0, 0.0});
  EXPECT_NEAR(numeric_Vint(monomial(2, 0), {1.0, 0.0}, 2.0, 12), exact, 1e-6);
  EXPECT_THROW(numeric_Vint(c, {1.0, 0.0}, 1.5, 8), KappaOutOfRange);
}

TEST(NumericVint, MixedPointsHigherDegree) {
  const Kappa k(Rational(5, 2));
  const VintIntegrator vint(2.5, 12, 5);
  for (unsigned n = 3; n <= 5; ++n) {
    for (unsigned j = 0; j <= n; ++j) {
      const Polynomial f = monomial(n - j, j);
      const std::array<double, 2> pt{0.8, -0.35};
      const double exact = evaluate(apply_V(f, k), std::span<const double>(pt.data(), 2));
      EXPECT_NEAR(vint.apply(f, pt), exact, 1e-9 * std::max(1.0, std::abs(exact)));
    }
  }
}

TEST(NumericBessel, AgainstSeries) {
  EXPECT_NEAR(numeric_bessel({0.0, 0.0}, {0.3, 0.9}, 1.2, 8), 1.0, 1e-14);
  EXPECT_NEAR(numeric_bessel({0.3, 0.9}, {0.0, 0.0}, 1.2, 8), 1.0, 1e-14);
  const double num = numeric_bessel({1.0, 0.0}, {1.0, 0.0}, 1.0, 16);
  EXPECT_NEAR(num, bessel_series({1.0, 0.0}, {1.0, 0.0}, Kappa(1), 20), 1e-6 * num);
}

TEST(NumericBessel, InvariantUnderTheGroup) {
  const double base = numeric_bessel({0.7, -0.2}, {0.4, 0.5}, 1.5, 12);
  EXPECT_NEAR(numeric_bessel({-0.7, -0.2}, {0.4, 0.5}, 1.5, 12), base, 1e-12);
  EXPECT_NEAR(numeric_bessel({-0.2, 0.7}, {0.4, 0.5}, 1.5, 12), base, 1e-12);
}

TEST(VintDensity, TakesNegativeValues) {
  const double eps = 1e-3;
  const double v = vint_density(2.0, eps, eps, std::numbers::pi - eps, 0.75 * std::numbers::pi,
                                std::numbers::pi / 2, std::numbers::pi / 2);
  EXPECT_LT(v, 0.0);
  // At kappa = 3/2 the correction term drops out, leaving 1 + g0 + g3.
  const double u = 0.5, p1 = 1.0, p2 = 1.2, th = 0.9, f1 = 0.4, f2 = 2.0;
  const double q1 = u * std::cos(p1), q2 = (1 - u) * std::cos(p2);
  const double q3 = (1 - u) * (std::cos(p2) * std::cos(th) + std::sin(p2) * std::sin(th) * std::cos(f2));
  const double q4 = u * (std::cos(p1) * std::cos(th) + std::sin(p1) * std::sin(th) * std::cos(f1));
  EXPECT_NEAR(vint_density(1.5, u, p1, p2, th, f1, f2), 1 + 2 * (q1 + q4) + q1 * q4 - q2 * q3, 1e-14);
}

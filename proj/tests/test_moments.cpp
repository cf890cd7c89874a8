#include <gtest/gtest.h>

#include "b2v/errors.hpp"
#include "b2v/hyper.hpp"
#include "b2v/moments.hpp"

using namespace b2v;

namespace {

Polynomial q(int i) { return Polynomial::variable(VarSet::Q, i); }
Polynomial qconst(const Rational& c) { return Polynomial::constant(VarSet::Q, c); }

const std::vector<Kappa>& sample_kappas() {
  static const std::vector<Kappa> ks{Kappa(Rational(1, 3)), Kappa(1), Kappa(Rational(5, 2)), Kappa(7)};
  return ks;
}

}  // namespace

TEST(Moments, NormalizationAndParity) {
  for (const auto& k : sample_kappas()) {
    EXPECT_EQ(s_double({0, 0, 0, 0}, k), Rational(1));
    EXPECT_EQ(s_single({0, 0, 0, 0}, k), Rational(1));
    EXPECT_EQ(s_double({1, 0, 0, 0}, k), Rational(0));
    EXPECT_EQ(s_single({2, 1, 0, 0}, k), Rational(0));
  }
}

TEST(Moments, SecondMoment) {
  EXPECT_EQ(s_double({2, 0, 0, 0}, Kappa(1)), Rational(1, 10));
  for (const auto& k : sample_kappas()) {
    const Rational expected = (Rational(2) * (Rational(4) * k.value() + Rational(1))).inverse();
    for (const MultiIndex4& a : {MultiIndex4(2, 0, 0, 0), MultiIndex4(0, 2, 0, 0), MultiIndex4(0, 0, 2, 0),
                                 MultiIndex4(0, 0, 0, 2)}) {
      EXPECT_EQ(s_single(a, k), expected);
    }
  }
}

TEST(Moments, RoutesAgreeOnSmallIndices) {
  EXPECT_EQ(s_single({2, 2, 2, 0}, Kappa(2)), s_double({2, 2, 2, 0}, Kappa(2)));
  EXPECT_EQ(s_single({1, 1, 1, 1}, Kappa(1)), s_double({1, 1, 1, 1}, Kappa(1)));
  for (const auto& k : sample_kappas()) {
    for (unsigned a1 = 0; a1 <= 4; ++a1)
      for (unsigned a2 = 0; a2 <= 4; ++a2)
        for (unsigned a3 = 0; a3 <= 4; ++a3)
          for (unsigned a4 = 0; a4 <= 4; ++a4) {
            const MultiIndex4 a(a1, a2, a3, a4);
            if (!a.parity_ok()) continue;
            EXPECT_EQ(s_single(a, k), s_double(a, k)) << a1 << a2 << a3 << a4;
          }
  }
}

TEST(Moments, ClosedFormWithOneZeroEntry) {
  const Rational half(1, 2);
  for (const auto& k : sample_kappas()) {
    EXPECT_EQ(s_prime({2, 0, 0, 0}, k), half / (k.value() + half));
    EXPECT_EQ(s_prime({0, 0, 0, 0}, k), Rational(1));
    for (unsigned b1 = 0; b1 <= 3; ++b1)
      for (unsigned b2 = 0; b2 <= 3; ++b2) {
        Rational expected(1);
        for (unsigned b : {b1, b2, 1U}) expected *= pochhammer(half, b) / pochhammer(k.value() + half, b);
        EXPECT_EQ(s_prime({2 * b1, 2 * b2, 2, 0}, k), expected);
      }
  }
}

TEST(Moments, PrimeIsPermutationSymmetric) {
  const Kappa k(Rational(5, 2));
  std::array<unsigned, 4> a{1, 1, 3, 5};
  const Rational ref = s_prime({a[0], a[1], a[2], a[3]}, k);
  do {
    EXPECT_EQ(s_prime({a[0], a[1], a[2], a[3]}, k), ref);
  } while (std::next_permutation(a.begin(), a.end()));
}

TEST(Moments, Recurrence) {
  EXPECT_EQ(recurrence_residual({1, 1, 1, 1}, Kappa(1)), Rational(0));
  EXPECT_EQ(recurrence_residual({3, 1, 1, 1}, Kappa(Rational(2, 5))), Rational(0));
  EXPECT_EQ(recurrence_residual({2, 2, 2, 2}, Kappa(3)), Rational(0));
  EXPECT_THROW(recurrence_residual({0, 2, 2, 2}, Kappa(3)), RangeError);
  EXPECT_THROW(recurrence_residual({1, 2, 2, 2}, Kappa(3)), RangeError);
}

TEST(Moments, MultiIndexHalves) {
  const MultiIndex4 a(3, 1, 5, 7);
  EXPECT_TRUE(a.parity_ok());
  EXPECT_EQ(a.total(), 16U);
  EXPECT_FALSE(MultiIndex4(2, 1, 2, 2).parity_ok());
}

TEST(Moments, SingularParameterIsReported) {
  EXPECT_THROW(s_single({2, 0, 0, 0}, Kappa(Rational(-1, 4))), SingularParameter);
  EXPECT_THROW(s_double({2, 0, 0, 0}, Kappa(Rational(-1, 4))), SingularParameter);
}

TEST(Invariants, ValuesAndOperators) {
  const std::vector<Rational> e{Rational(1), Rational(0), Rational(0), Rational(1)};
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(evaluate(invariant_g(i), e), Rational(1));
  EXPECT_EQ(evaluate(invariant_g(0), e), Rational(4));
  EXPECT_TRUE(apply_D0(qconst(Rational(1))).is_zero());
  const Polynomial g3 = q(0) * q(3) - q(1) * q(2);
  EXPECT_EQ(invariant_g(3), g3);
  EXPECT_EQ(apply_D3(g3), q(0) * q(0) + q(1) * q(1) + q(2) * q(2) + q(3) * q(3));
}

TEST(Invariants, D0IsTheSumOfTheTwoAdjointActions) {
  const Polynomial p = p_poly(2, 1, 1) * q(2) + pow(q(0), 3);
  EXPECT_EQ(apply_D0(p), apply_L_g1(p) + apply_L_g2(p));
}

TEST(Functional, Xi0) {
  const Kappa k(1);
  EXPECT_EQ(xi0(qconst(Rational(1)), k), Rational(1));
  EXPECT_EQ(xi0(q(0), k), Rational(0));
  EXPECT_EQ(xi0(invariant_g(3), k), Rational(0));
}

TEST(Functional, Xi) {
  EXPECT_EQ(xi(qconst(Rational(1)), Kappa(1)), Rational(1));
  EXPECT_EQ(xi(q(0), Kappa(1)), Rational(1, 5));
  EXPECT_EQ(xi(q(0), Kappa(1)), Rational(2) * s_single({2, 0, 0, 0}, Kappa(1)));
  EXPECT_THROW(xi(q(0) + q(1) * q(2), Kappa(1)), NotHomogeneous);
}

TEST(Functional, XiWithG3MatchesD3Route) {
  for (const auto& k : sample_kappas()) {
    const MomentFunctional mf(k);
    for (unsigned a = 0; a <= 4; ++a)
      for (unsigned c = 0; c <= 4; ++c) {
        const Polynomial p = p_poly(a, 4 - a, c);
        EXPECT_EQ(mf.xi(p), mf.xi_g3(p)) << a << " " << c;
      }
  }
}

TEST(Functional, D3Identity) {
  EXPECT_EQ(d3_identity_residual(qconst(Rational(1)), Kappa(1)), Rational(0));
  EXPECT_EQ(d3_identity_residual(p_poly(1, 1, 1), Kappa(1)), Rational(0));
  EXPECT_EQ(d3_identity_residual(p_poly(3, 1, 1), Kappa(Rational(5, 2))), Rational(0));
}

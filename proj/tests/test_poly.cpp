#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "b2v/errors.hpp"
#include "b2v/group.hpp"
#include "b2v/poly_json.hpp"
#include "b2v/polynomial.hpp"

using namespace b2v;

namespace {

Polynomial x(int i) { return Polynomial::variable(VarSet::X, i); }
Polynomial q(int i) { return Polynomial::variable(VarSet::Q, i); }
Polynomial c(VarSet vs, long v) { return Polynomial::constant(vs, Rational(v)); }

Polynomial random_poly(std::mt19937_64& rng, VarSet vs, unsigned max_degree, int terms) {
  std::uniform_int_distribution<int> deg(0, static_cast<int>(max_degree));
  std::uniform_int_distribution<long> coef(-5, 5);
  Polynomial p(vs);
  for (int t = 0; t < terms; ++t) {
    Exponent e{};
    for (int i = 0; i < num_vars(vs); ++i) e[i] = static_cast<std::uint16_t>(deg(rng) / 2);
    p.add_term(e, Rational(coef(rng), 1 + std::abs(coef(rng))));
  }
  return p;
}

}  // namespace

TEST(Polynomial, Arithmetic) {
  EXPECT_EQ((x(0) + x(1)) * (x(0) - x(1)), pow(x(0), 2) - pow(x(1), 2));
  const Polynomial p = x(0) * x(1) + c(VarSet::X, 3);
  EXPECT_EQ(p + Polynomial(VarSet::X), p);
  const Polynomial g3 = q(0) * q(3) - q(1) * q(2);
  EXPECT_EQ(g3 * c(VarSet::Q, 1), g3);
  EXPECT_TRUE((p - p).is_zero());
}

TEST(Polynomial, VarSetMismatch) {
  EXPECT_THROW(x(0) + q(0), VarSetMismatch);
  EXPECT_THROW(x(0) * q(0), VarSetMismatch);
}

TEST(Polynomial, Differentiation) {
  EXPECT_EQ(diff(pow(q(0), 2), 0), q(0) * Rational(2));
  EXPECT_EQ(diff(q(0) * q(3) - q(1) * q(2), 3), q(0));
  EXPECT_TRUE(diff(c(VarSet::X, 4), 1).is_zero());
}

TEST(Polynomial, LeibnizRuleOnRandomInputs) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const Polynomial a = random_poly(rng, VarSet::Q, 6, 5);
    const Polynomial b = random_poly(rng, VarSet::Q, 6, 5);
    for (int v = 0; v < 4; ++v) EXPECT_EQ(diff(a * b, v), diff(a, v) * b + a * diff(b, v));
  }
}

TEST(Polynomial, HomogeneousComponents) {
  const auto parts = homogeneous_components(pow(x(0), 2) + x(1));
  ASSERT_EQ(parts.size(), 2U);
  EXPECT_EQ(parts[0].first, 1);
  EXPECT_EQ(parts[0].second, x(1));
  EXPECT_EQ(parts[1].first, 2);
  EXPECT_EQ(parts[1].second, pow(x(0), 2));
  EXPECT_TRUE(homogeneous_components(Polynomial(VarSet::X)).empty());
  EXPECT_EQ(homogeneous_components(x(0) * x(1)).size(), 1U);
  EXPECT_TRUE((x(0) * x(1)).is_homogeneous());
  EXPECT_FALSE((x(0) + c(VarSet::X, 1)).is_homogeneous());
}

TEST(Polynomial, DivideByLinear) {
  EXPECT_EQ(divide_by_linear(pow(x(0), 2) - pow(x(1), 2), x(0) - x(1)), x(0) + x(1));
  EXPECT_EQ(divide_by_linear(pow(x(0), 3), x(0)), pow(x(0), 2));
  EXPECT_THROW(divide_by_linear(x(0) - x(1), x(0) + x(1)), NotDivisible);
}

TEST(Polynomial, DivideByLinearRoundTrip) {
  std::mt19937_64 rng(5);
  const Polynomial form = x(0) * Rational(2) - x(1) * Rational(1, 3);
  for (int i = 0; i < 30; ++i) {
    const Polynomial p = random_poly(rng, VarSet::X, 8, 6);
    EXPECT_EQ(divide_by_linear(p * form, form), p);
  }
}

TEST(Polynomial, ComposeWithTau) {
  const Polynomial xq0 = Polynomial::variable(VarSet::XQ, 0), xq1 = Polynomial::variable(VarSet::XQ, 1);
  const Polynomial q1 = Polynomial::variable(VarSet::XQ, 2), q2 = Polynomial::variable(VarSet::XQ, 3);
  const Polynomial q3 = Polynomial::variable(VarSet::XQ, 4), q4 = Polynomial::variable(VarSet::XQ, 5);
  EXPECT_EQ(compose_x_tau(x(0)), xq0 * q1 + xq1 * q2);
  EXPECT_EQ(compose_x_tau(c(VarSet::X, 1)), c(VarSet::XQ, 1));
  EXPECT_EQ(compose_x_tau(x(0) * x(1)), (xq0 * q1 + xq1 * q2) * (xq0 * q3 + xq1 * q4));
}

TEST(Polynomial, PPoly) {
  EXPECT_EQ(p_poly(1, 0, 0), q(0));
  EXPECT_EQ(p_poly(1, 1, 1), q(0) * q(3) + q(1) * q(2));
  EXPECT_EQ(p_poly(0, 0, 0), c(VarSet::Q, 1));
}

TEST(Polynomial, EvaluateRationalAndDouble) {
  const Polynomial p = pow(x(0), 2) * Rational(1, 2) - x(1);
  const std::vector<Rational> at{Rational(3), Rational(1, 4)};
  EXPECT_EQ(evaluate(p, at), Rational(17, 4));
  const std::vector<double> atd{3.0, 0.25};
  EXPECT_DOUBLE_EQ(evaluate(p, atd), 4.25);
}

TEST(Group, HasEightElementsAndFourReflections) {
  EXPECT_EQ(GroupElement::all().size(), 8U);
  EXPECT_EQ(GroupElement::reflections().size(), 4U);
  for (const auto& r : GroupElement::reflections()) {
    EXPECT_EQ(r * r, GroupElement::identity());
    EXPECT_EQ(r.det(), -1);
  }
}

TEST(Group, MultiplicationTableIsALatinSquare) {
  const auto& t = multiplication_table();
  ASSERT_EQ(t.size(), 8U);
  for (std::size_t i = 0; i < 8; ++i) {
    std::vector<int> row = t[i], col;
    for (std::size_t j = 0; j < 8; ++j) col.push_back(t[j][i]);
    std::sort(row.begin(), row.end());
    std::sort(col.begin(), col.end());
    for (int k = 0; k < 8; ++k) {
      EXPECT_EQ(row[k], k);
      EXPECT_EQ(col[k], k);
    }
  }
}

TEST(Group, ActionOnX) {
  EXPECT_EQ(act(GroupElement::sigma1(), x(0)), -x(0));
  EXPECT_EQ(act(GroupElement::sigma2(), x(0)), x(1));
  const Polynomial p = pow(x(0), 3) * x(1) + x(1);
  EXPECT_EQ(act(GroupElement::identity(), p), p);
}

TEST(Group, ActionIsCovariant) {
  std::mt19937_64 rng(17);
  const Polynomial p = random_poly(rng, VarSet::X, 6, 6);
  for (const auto& v : GroupElement::all()) {
    for (const auto& w : GroupElement::all()) {
      EXPECT_EQ(act(v, act(w, p)), act(v * w, p));
    }
  }
}

TEST(Group, LambdaAndRhoActions) {
  EXPECT_EQ(act_lambda(GroupElement::sigma1(), q(0)), -q(0));
  EXPECT_EQ(act_lambda(GroupElement::sigma1(), q(1)), q(1));
  EXPECT_EQ(act_lambda(GroupElement::sigma1(), q(2)), -q(2));
  EXPECT_EQ(act_rho(GroupElement::sigma2(), q(0)), q(2));
  EXPECT_EQ(act_rho(GroupElement::sigma2(), q(1)), q(3));
}

TEST(Group, LambdaInverseUndoesLambda) {
  for (const auto& w : GroupElement::all()) {
    for (unsigned d = 0; d <= 4; ++d) {
      for (unsigned a = 0; a <= d; ++a)
        for (unsigned b = 0; a + b <= d; ++b)
          for (unsigned cc = 0; a + b + cc <= d; ++cc) {
            const Exponent e{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b),
                             static_cast<std::uint16_t>(cc), static_cast<std::uint16_t>(d - a - b - cc)};
            const Polynomial m = Polynomial::monomial(VarSet::Q, e);
            EXPECT_EQ(act_lambda(w.inverse(), act_lambda(w, m)), m);
            EXPECT_EQ(act_rho(w.inverse(), act_rho(w, m)), m);
          }
    }
  }
}

TEST(Group, InvariantsUnderTwoSidedAction) {
  const Polynomial g3 = q(0) * q(3) - q(1) * q(2);
  const Polynomial g0 = (q(0) + q(3)) * Rational(2);
  for (const auto& w : GroupElement::all()) {
    EXPECT_EQ(act_rho(w, act_lambda(w, g0)), g0);
    EXPECT_EQ(act_rho(w, act_lambda(w, g3)), g3);
  }
}

TEST(PolyJson, RoundTrip) {
  std::mt19937_64 rng(23);
  for (VarSet vs : {VarSet::X, VarSet::Q, VarSet::XY, VarSet::XQ}) {
    const Polynomial p = random_poly(rng, vs, 6, 8);
    EXPECT_EQ(parse_polynomial(dump_polynomial(p)), p);
  }
}

TEST(PolyJson, CanonicalText) {
  EXPECT_EQ(dump_polynomial(c(VarSet::X, 1)), R"({"vars":"X","terms":[[[0,0],"1"]]})");
  EXPECT_EQ(dump_polynomial(x(0) * Rational(1, 5)), R"({"vars":"X","terms":[[[1,0],"1/5"]]})");
  EXPECT_EQ(dump_polynomial(Polynomial(VarSet::Q)), R"({"vars":"Q","terms":[]})");
}

TEST(PolyJson, RejectsMalformedInput) {
  EXPECT_THROW(parse_polynomial("not json"), ParseError);
  EXPECT_THROW(parse_polynomial(R"({"vars":"Z","terms":[]})"), ParseError);
  EXPECT_THROW(parse_polynomial(R"({"vars":"X","terms":[[[1],"1"]]})"), ParseError);
  EXPECT_THROW(parse_polynomial(R"({"vars":"X","terms":[[[1,0],1]]})"), ParseError);
  EXPECT_THROW(parse_polynomial(R"({"vars":"X","terms":[[[1,0],"1"],[[1,0],"2"]]})"), ParseError);
  EXPECT_THROW(parse_polynomial(R"({"vars":"X","terms":[[[-1,0],"1"]]})"), ParseError);
}

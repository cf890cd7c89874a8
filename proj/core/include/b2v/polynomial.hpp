#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "b2v/rational.hpp"

namespace b2v {

/// Named variable sets. Exponent slots are used in the listed order.
enum class VarSet {
  X,   // x1, x2
  Q,   // q1, q2, q3, q4
  XY,  // x1, x2, y1, y2
  XQ,  // x1, x2, q1, q2, q3, q4
};

constexpr int kMaxVars = 6;

int num_vars(VarSet vs);
std::string_view var_set_name(VarSet vs);
/// Inverse of var_set_name; throws ParseError.
VarSet parse_var_set(std::string_view name);
std::string_view var_name(VarSet vs, int index);

using Exponent = std::array<std::uint16_t, kMaxVars>;

int total_degree(const Exponent& e);

/// Sparse polynomial over Rational in one VarSet. Terms are kept in an
/// ordered map (lexicographic on exponents) and never store zeros.
class Polynomial {
 public:
  using Terms = std::map<Exponent, Rational>;

  explicit Polynomial(VarSet vs = VarSet::X) : vars_(vs) {}

  static Polynomial constant(VarSet vs, const Rational& c);
  /// The index-th variable of vs (0-based).
  static Polynomial variable(VarSet vs, int index);
  static Polynomial monomial(VarSet vs, const Exponent& e, const Rational& c = Rational(1));

  VarSet var_set() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds c * x^e to the polynomial.
  void add_term(const Exponent& e, const Rational& c);
  Rational coefficient(const Exponent& e) const;

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// True for zero and for polynomials whose terms share one total degree.
  bool is_homogeneous() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  /// Human-readable form, e.g. "1/5*x1 + x2^2".
  std::string str() const;

 private:
  void check_same(const Polynomial& rhs) const;

  VarSet vars_;
  Terms terms_;
};

Polynomial pow(const Polynomial& p, unsigned k);

/// Partial derivative with respect to variable `index` of p's VarSet.
Polynomial diff(const Polynomial& p, int index);

/// Split by total degree, ascending; the zero polynomial gives an empty list.
std::vector<std::pair<int, Polynomial>> homogeneous_components(const Polynomial& p);

/// Exact evaluation; values.size() must equal num_vars.
Rational evaluate(const Polynomial& p, std::span<const Rational> values);
double evaluate(const Polynomial& p, std::span<const double> values);

/// Substitutes images[i] for variable i. All images share one VarSet,
/// which becomes the VarSet of the result.
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images);

/// Substitution of the form var_i -> sign[i] * var_{target[i]} within the
/// same VarSet (group actions are all of this shape).
Polynomial signed_permute(const Polynomial& p, std::span<const int> target, std::span<const int> sign);

/// f(x tau(q)) for f over X: x1 -> x1 q1 + x2 q2, x2 -> x1 q3 + x2 q4.
Polynomial compose_x_tau(const Polynomial& f);

/// Coefficient polynomial of x1^(a+b-c) x2^c in (x1 q1 + x2 q2)^a (x1 q3 + x2 q4)^b.
/// Throws RangeError if c > a + b.
Polynomial p_poly(unsigned a, unsigned b, unsigned c);

/// For p over XQ: the Q-coefficient of x1^(n-c) x2^c in each degree-n
/// x-monomial. Returns pairs (x-exponent (i, j), coefficient over Q).
std::vector<std::pair<std::array<int, 2>, Polynomial>> collect_x_coefficients(const Polynomial& p);

/// Exact quotient of p (over X) by a nonzero linear form over X.
/// Throws NotDivisible when the remainder is nonzero.
Polynomial divide_by_linear(const Polynomial& p, const Polynomial& form);

}  // namespace b2v

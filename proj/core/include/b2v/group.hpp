#pragma once

#include <array>
#include <string>
#include <vector>

#include "b2v/polynomial.hpp"

namespace b2v {

/// Element of the hyperoctahedral group B2 as a signed permutation matrix.
///
/// Side convention: act(w, p)(x) = p(x w) with x a row vector, so
/// act(w1, act(w2, p)) = act(w1 * w2, p). The q-side actions obey the same
/// covariant law: tau(q lambda(w)) = w^-1 tau(q), tau(q rho(w)) = tau(q) w,
/// with tau(q) = [[q1, q3], [q2, q4]].
class GroupElement {
 public:
  GroupElement() : m_{{{1, 0}, {0, 1}}} {}
  /// Throws RangeError unless m is a signed permutation matrix.
  explicit GroupElement(const std::array<std::array<int, 2>, 2>& m);

  static GroupElement identity() { return GroupElement(); }
  /// diag(-1, 1)
  static GroupElement sigma1();
  /// the coordinate swap
  static GroupElement sigma2();

  /// All 8 elements, generated by closure from sigma1 and sigma2 in a fixed order.
  static const std::vector<GroupElement>& all();
  /// The four reflections sigma1, sigma2, sigma2 sigma1 sigma2, sigma1 sigma2 sigma1.
  static const std::vector<GroupElement>& reflections();

  int operator()(int r, int c) const { return m_[r][c]; }
  const std::array<std::array<int, 2>, 2>& matrix() const { return m_; }
  int det() const { return m_[0][0] * m_[1][1] - m_[0][1] * m_[1][0]; }
  GroupElement inverse() const;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.m_ == b.m_; }
  friend bool operator<(const GroupElement& a, const GroupElement& b) { return a.m_ < b.m_; }

  std::string str() const;

 private:
  std::array<std::array<int, 2>, 2> m_;
};

/// Index table of products: table[i][j] = index of all()[i] * all()[j].
const std::vector<std::vector<int>>& multiplication_table();

/// p(x w) for p over X, or over XY acting on the x-variables only.
Polynomial act(const GroupElement& w, const Polynomial& p);
/// p(q lambda(w)) for p over Q.
Polynomial act_lambda(const GroupElement& w, const Polynomial& p);
/// p(q rho(w)) for p over Q.
Polynomial act_rho(const GroupElement& w, const Polynomial& p);

}  // namespace b2v

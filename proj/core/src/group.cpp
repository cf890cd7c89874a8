#include "b2v/group.hpp"

#include <algorithm>
#include <cstdlib>

#include "b2v/errors.hpp"

namespace b2v {

namespace {

using Mat = std::array<std::array<int, 2>, 2>;

// The matrix entries are signed unit vectors: row r has its nonzero in
// column col(r) with sign sgn(r).
int col_of_row(const Mat& m, int r) { return m[r][0] != 0 ? 0 : 1; }

std::vector<GroupElement> generate() {
  std::vector<GroupElement> elems{GroupElement::identity()};
  const std::array<GroupElement, 2> gens{GroupElement::sigma1(), GroupElement::sigma2()};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      GroupElement h = elems[i] * g;
      if (std::find(elems.begin(), elems.end(), h) == elems.end()) elems.push_back(h);
    }
  }
  if (elems.size() != 8) throw Error("B2 closure did not produce 8 elements");
  return elems;
}

// q-index of a matrix entry of tau(q) = [[q1, q3], [q2, q4]].
int q_index(int r, int c) { return r + 2 * c; }

// Substitution q_i -> sign * q_j read off a matrix M whose entries are
// signed single q-variables: new q at slot (r,c) equals M(r,c).
struct SignedVar {
  int index = 0;
  int sign = 1;
};

Polynomial apply_q_matrix(const Polynomial& p, const std::array<std::array<SignedVar, 2>, 2>& m) {
  if (p.var_set() != VarSet::Q) throw VarSetMismatch("q-action expects a polynomial over Q");
  std::array<int, 4> target{};
  std::array<int, 4> sign{};
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      target[q_index(r, c)] = m[r][c].index;
      sign[q_index(r, c)] = m[r][c].sign;
    }
  }
  return signed_permute(p, target, sign);
}

// Product A * tau(q) or tau(q) * A for a signed permutation A.
std::array<std::array<SignedVar, 2>, 2> tau_product(const GroupElement& a, bool left) {
  std::array<std::array<SignedVar, 2>, 2> out{};
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      for (int k = 0; k < 2; ++k) {
        const int coeff = left ? a(r, k) : a(k, c);
        if (coeff == 0) continue;
        out[r][c] = left ? SignedVar{q_index(k, c), coeff} : SignedVar{q_index(r, k), coeff};
      }
    }
  }
  return out;
}

}  // namespace

GroupElement::GroupElement(const Mat& m) : m_(m) {
  for (int r = 0; r < 2; ++r) {
    const int nonzero = (m[r][0] != 0) + (m[r][1] != 0);
    if (nonzero != 1 || std::abs(m[r][col_of_row(m, r)]) != 1) {
      throw RangeError("not a signed permutation matrix");
    }
  }
  if (col_of_row(m, 0) == col_of_row(m, 1)) throw RangeError("not a signed permutation matrix");
}

GroupElement GroupElement::sigma1() { return GroupElement(Mat{{{-1, 0}, {0, 1}}}); }
GroupElement GroupElement::sigma2() { return GroupElement(Mat{{{0, 1}, {1, 0}}}); }

const std::vector<GroupElement>& GroupElement::all() {
  static const std::vector<GroupElement> elems = generate();
  return elems;
}

const std::vector<GroupElement>& GroupElement::reflections() {
  static const std::vector<GroupElement> refl = [] {
    const GroupElement s1 = sigma1();
    const GroupElement s2 = sigma2();
    return std::vector<GroupElement>{s1, s2, s2 * s1 * s2, s1 * s2 * s1};
  }();
  return refl;
}

GroupElement GroupElement::inverse() const {
  // Orthogonal: the inverse is the transpose.
  return GroupElement(Mat{{{m_[0][0], m_[1][0]}, {m_[0][1], m_[1][1]}}});
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  Mat r{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) r[i][j] = a.m_[i][0] * b.m_[0][j] + a.m_[i][1] * b.m_[1][j];
  }
  return GroupElement(r);
}

std::string GroupElement::str() const {
  return "[[" + std::to_string(m_[0][0]) + "," + std::to_string(m_[0][1]) + "],[" + std::to_string(m_[1][0]) +
         "," + std::to_string(m_[1][1]) + "]]";
}

const std::vector<std::vector<int>>& multiplication_table() {
  static const std::vector<std::vector<int>> table = [] {
    const auto& g = GroupElement::all();
    std::vector<std::vector<int>> t(g.size(), std::vector<int>(g.size()));
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = 0; j < g.size(); ++j) {
        const auto it = std::find(g.begin(), g.end(), g[i] * g[j]);
        t[i][j] = static_cast<int>(it - g.begin());
      }
    }
    return t;
  }();
  return table;
}

Polynomial act(const GroupElement& w, const Polynomial& p) {
  const VarSet vs = p.var_set();
  if (vs != VarSet::X && vs != VarSet::XY) throw VarSetMismatch("act expects a polynomial over X or XY");
  // (x w)_j = sum_i x_i w_ij, so x_j -> sign * x_i with w_ij != 0.
  std::vector<int> target(num_vars(vs));
  std::vector<int> sign(num_vars(vs), 1);
  for (int i = 0; i < num_vars(vs); ++i) target[i] = i;
  for (int j = 0; j < 2; ++j) {
    const int i = w(0, j) != 0 ? 0 : 1;
    target[j] = i;
    sign[j] = w(i, j);
  }
  return signed_permute(p, target, sign);
}

Polynomial act_lambda(const GroupElement& w, const Polynomial& p) {
  return apply_q_matrix(p, tau_product(w.inverse(), true));
}

Polynomial act_rho(const GroupElement& w, const Polynomial& p) {
  return apply_q_matrix(p, tau_product(w, false));
}

}  // namespace b2v

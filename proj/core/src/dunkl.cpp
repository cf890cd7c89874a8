#include "b2v/dunkl.hpp"

#include <array>

#include "b2v/errors.hpp"
#include "b2v/group.hpp"

namespace b2v {

namespace {

struct Root {
  std::array<int, 2> v;
  GroupElement reflection;  // x -> x s_v
};

const std::array<Root, 4>& positive_roots() {
  static const std::array<Root, 4> roots{{
      {{1, 0}, GroupElement({{{-1, 0}, {0, 1}}})},
      {{0, 1}, GroupElement({{{1, 0}, {0, -1}}})},
      {{1, -1}, GroupElement({{{0, 1}, {1, 0}}})},
      {{1, 1}, GroupElement({{{0, -1}, {-1, 0}}})},
  }};
  return roots;
}

}  // namespace

Polynomial apply_T(int i, const Kappa& kappa, const Polynomial& f) {
  if (f.var_set() != VarSet::X) throw VarSetMismatch("Dunkl operators act on polynomials over X");
  if (i != 1 && i != 2) throw RangeError("Dunkl operator index must be 1 or 2");
  Polynomial result = diff(f, i - 1);
  if (kappa.value().is_zero()) return result;

  Polynomial reflected_sum(VarSet::X);
  for (const Root& r : positive_roots()) {
    const int vi = r.v[i - 1];
    if (vi == 0) continue;
    const Polynomial num = f - act(r.reflection, f);
    if (num.is_zero()) continue;
    const Polynomial form = Polynomial::variable(VarSet::X, 0) * Rational(r.v[0]) +
                            Polynomial::variable(VarSet::X, 1) * Rational(r.v[1]);
    reflected_sum += divide_by_linear(num, form) * Rational(vi);
  }
  return result + reflected_sum * kappa.value();
}

bool check_commutativity(const Kappa& kappa, unsigned max_degree) {
  for (unsigned n = 0; n <= max_degree; ++n) {
    for (unsigned j = 0; j <= n; ++j) {
      const Polynomial m = Polynomial::monomial(VarSet::X, Exponent{static_cast<std::uint16_t>(n - j),
                                                                    static_cast<std::uint16_t>(j)});
      if (apply_T(1, kappa, apply_T(2, kappa, m)) != apply_T(2, kappa, apply_T(1, kappa, m))) return false;
    }
  }
  return true;
}

}  // namespace b2v

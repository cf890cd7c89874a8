#pragma once

#include "b2v/kappa.hpp"
#include "b2v/polynomial.hpp"

namespace b2v {

/// Dunkl operator T_i (i = 1 or 2) for B2 with equal multiplicity kappa:
///   T_i f = df/dx_i + kappa * sum_v v_i (f(x) - f(x s_v)) / <x, v>
/// over the positive roots v = e1, e2, e1 - e2, e1 + e2.
Polynomial apply_T(int i, const Kappa& kappa, const Polynomial& f);

/// True iff T1 T2 m = T2 T1 m for every monomial m of degree <= max_degree.
bool check_commutativity(const Kappa& kappa, unsigned max_degree);

}  // namespace b2v

#pragma once

#include <map>
#include <vector>

#include "b2v/group.hpp"
#include "b2v/kappa.hpp"
#include "b2v/moments.hpp"
#include "b2v/polynomial.hpp"

namespace b2v {

enum class VRoute { Formula, Oracle };

struct VResult {
  Polynomial input;
  Kappa kappa;
  Polynomial output;
  VRoute route = VRoute::Formula;
};

/// V f by the closed formulas: each homogeneous component of degree n is
/// composed with x -> x tau(q) and xi is applied to the q-coefficient of
/// every x-monomial. Throws SingularParameter for singular kappa and
/// PoleInDegreeFactor when an even degree hits 4k+n = 0 or 8k+n = 0.
Polynomial apply_V(const Polynomial& f, const Kappa& kappa);
Polynomial apply_V(const Polynomial& f, const MomentFunctional& mf);

/// Variant of apply_V whose even-degree functional uses xi0(g3 p) in place
/// of xi0(D3 p)/(8k+n).
Polynomial apply_V_g3_variant(const Polynomial& f, const MomentFunctional& mf);

/// V(x1^a x2^b) = sum_c xi(P_{a,b}^c) x1^(a+b-c) x2^c.
Polynomial apply_V_monomial(unsigned a, unsigned b, const MomentFunctional& mf);

/// V determined only by V1 = 1 and T_i V = V d/dx_i, solved degree by
/// degree with exact elimination. Accepts singular kappa; the solve then
/// throws SingularSystem.
class OracleV {
 public:
  explicit OracleV(const Kappa& kappa) : kappa_(kappa) {}

  Polynomial apply(const Polynomial& f);
  /// V(x1^(n-j) x2^j).
  const Polynomial& monomial(unsigned n, unsigned j);

 private:
  void ensure_degree(unsigned n);

  Kappa kappa_;
  std::vector<std::vector<Polynomial>> images_;  // images_[n][j]
};

Polynomial apply_V_oracle(const Polynomial& f, const Kappa& kappa);

VResult compute_V(const Polynomial& f, const Kappa& kappa, VRoute route);

/// K_n(x, y) = V^x(<x,y>^n)/n! over XY.
Polynomial kernel_K(unsigned n, const MomentFunctional& mf);
Polynomial kernel_K(unsigned n, const Kappa& kappa);

/// K0_n(x, y) = (1/8) sum_w K_n(x w, y).
Polynomial kernel_K0(unsigned n, const MomentFunctional& mf);
Polynomial kernel_K0(unsigned n, const Kappa& kappa);

/// K0_n computed as xi0(<x tau(q), y>^n)/n! (the moment-generating form).
Polynomial kernel_K0_from_moments(unsigned n, const MomentFunctional& mf);

/// <x, y> over XY.
Polynomial inner_xy();

/// LHS - RHS of the degree-n component of the criterion
///   (n+1)(<x,y> xi<x tau,y>^n - xi<x tau,y>^(n+1))
///     = kappa sum_i (xi<x tau,y>^(n+1) - xi<x sigma_i tau,y>^(n+1)).
Polynomial condV_residual(unsigned n, const MomentFunctional& mf);
bool check_condV(unsigned n, const Kappa& kappa);

/// (4k+2n+1) K_{2n+1} - <x,y> K_{2n}.
Polynomial oddeqn_residual(unsigned n, const MomentFunctional& mf);
bool check_oddeqn(unsigned n, const Kappa& kappa);

/// Residual of the odd-degree identity for P_{a,b}^c with
/// a = 2a1+1+2a3, b = 2a2, c = 2a3, n = a1+a2+a3.
Rational check_oddP_identity(unsigned a1, unsigned a2, unsigned a3, const Kappa& kappa);

/// Partial-sum identity of the odd case, m = 1..min(2a2, 2a3).
Rational check_big1_sum(unsigned m, unsigned a1, unsigned a2, unsigned a3, const Kappa& kappa);
/// The t_i of the odd case (t_0 = 0), normalized by s(2a1+2, 2a3, 2a2, 0).
Rational big1_term(unsigned i, unsigned a1, unsigned a2, unsigned a3, const MomentFunctional& mf);

/// Partial-sum identity of the even case, m = 0..min(2a2+1, 2a3+1).
Rational check_big2_sum(unsigned m, unsigned a1, unsigned a2, unsigned a3, const Kappa& kappa);

}  // namespace b2v

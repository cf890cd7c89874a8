#pragma once

#include <array>
#include <map>
#include <vector>

#include "b2v/kappa.hpp"
#include "b2v/moments.hpp"
#include "b2v/polynomial.hpp"

namespace b2v {

/// Gauss rule for the weight (1-t)^a (1+t)^b on [-1, 1].
struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double a = 0.0;
  double b = 0.0;

  std::size_t size() const { return nodes.size(); }
  double sum_weights() const;
};

/// n-point Gauss-Jacobi rule by Golub-Welsch. Throws InvalidWeight unless
/// a, b > -1, and RangeError for n = 0.
QuadRule gauss_jacobi(unsigned n, double a, double b);

/// Total mass 2^(a+b+1) Gamma(a+1) Gamma(b+1) / Gamma(a+b+2) of the weight.
double jacobi_mass(double a, double b);

/// Rule for integral_0^1 g(u) u^p (1-u)^r du, nodes mapped to [0, 1].
QuadRule unit_interval_rule(unsigned n, double p, double r);

/// Tensor grid for integrals over the parameterization
///   q1 = u c1, q2 = (1-u) c2, q3 = (1-u)(c2 ct + s2 st cos phi2),
///   q4 = u (c1 ct + s1 st cos phi1)
/// with c1 = cos psi1, c2 = cos psi2, ct = cos theta. Angular rules are in
/// t = cos(angle); the u rule lives on [0, 1].
struct MuGrid {
  QuadRule u, psi1, psi2, theta, phi1, phi2;

  /// Grid for mu itself: u weight (u(1-u))^(2k-1), psi and theta exponent
  /// k-1, phi exponent k-3/2. Throws KappaOutOfRange unless kappa > 1/2.
  static MuGrid for_measure(double kappa, unsigned nodes);
};

/// Raw (unnormalized) grid integrals of q-monomials, computed separably:
/// q1^a1 q4^a4 only involves (psi1, phi1), q2^a2 q3^a3 only (psi2, phi2),
/// and u factors out.
class GridMoments {
 public:
  GridMoments(const MuGrid& grid, unsigned max_degree);

  /// Sum of weight * q^alpha over the grid; |alpha| <= max_degree.
  double raw(const MultiIndex4& alpha) const;
  /// Raw integral of a polynomial over Q with double coefficients.
  double raw(const std::map<std::array<unsigned, 4>, double>& poly) const;
  unsigned max_degree() const { return max_degree_; }

 private:
  unsigned max_degree_;
  std::vector<double> theta_w_;
  // u_[p][r] = sum_u w u^p (1-u)^r
  std::vector<std::vector<double>> u_;
  // side1_[t][i][j] = sum w c1^i z1^j at theta node t, likewise side2_.
  std::vector<std::vector<std::vector<double>>> side1_, side2_;
};

/// integral q^alpha dmu by quadrature, normalized by the grid integral of 1.
double numeric_moment(const MultiIndex4& alpha, double kappa, unsigned nodes_per_dim);

/// 1 / (grid integral of the unnormalized density) for kappa > 1/2.
double numeric_normalizing_constant(double kappa, unsigned nodes_per_dim);

/// 4^(k-1) (2k-1)^2 Gamma(2k+1/2) / (pi^(5/2) Gamma(k)^2).
double normalizing_constant_gamma(double kappa);

/// Numeric V f(x) from the seven-variable integral representation valid
/// for kappa > 3/2. Grids and moment tables are built once per instance.
class VintIntegrator {
 public:
  /// Throws KappaOutOfRange unless kappa > 3/2.
  VintIntegrator(double kappa, unsigned nodes_per_dim, unsigned max_degree, unsigned omega_nodes = 16);

  /// f over X with deg f <= max_degree.
  double apply(const Polynomial& f, std::array<double, 2> x) const;

 private:
  double kappa_;
  unsigned max_degree_;
  std::vector<double> omega_t_, omega_w_;
  GridMoments main_, left_, right_;
  double norm_;
};

double numeric_Vint(const Polynomial& f, std::array<double, 2> x, double kappa, unsigned nodes_per_dim);

/// integral exp(<x tau(q), y>) dmu(q) by quadrature (kappa > 1/2).
double numeric_bessel(std::array<double, 2> x, std::array<double, 2> y, double kappa, unsigned nodes_per_dim);

/// sum_{n <= cutoff} K0_n(x, y) from the exact kernels.
double bessel_series(std::array<double, 2> x, std::array<double, 2> y, const Kappa& kappa, unsigned cutoff);

/// Pointwise value of the combined density (1 + g0 + g3) + (2k-3) g~0 of the
/// integral representation at the given angles (u in (0,1), angles in (0, pi)).
double vint_density(double kappa, double u, double psi1, double psi2, double theta, double phi1, double phi2);

/// Rows (nodes, numeric value, |numeric - exact|) for a moment.
struct ConvergenceRow {
  unsigned nodes;
  double value;
  double abs_error;
};
std::vector<ConvergenceRow> moment_convergence(const MultiIndex4& alpha, double kappa, double exact,
                                               const std::vector<unsigned>& node_counts);

}  // namespace b2v

#include "b2v/quad.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "b2v/errors.hpp"
#include "b2v/intertwine.hpp"

namespace b2v {

namespace {

using QPoly = std::map<std::array<unsigned, 4>, double>;

void require_kappa_above(double kappa, double bound, const char* what) {
  if (!(kappa > bound)) {
    throw KappaOutOfRange(std::string(what) + " needs kappa > " + std::to_string(bound) + ", got " +
                          std::to_string(kappa));
  }
}

QPoly mul(const QPoly& a, const QPoly& b) {
  QPoly r;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::array<unsigned, 4> e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
      r[e] += ca * cb;
    }
  }
  return r;
}

QPoly to_qpoly(const Polynomial& p) {
  QPoly r;
  for (const auto& [e, c] : p.terms()) r[{e[0], e[1], e[2], e[3]}] = c.to_double();
  return r;
}

// Per-degree parts of f(x tau(q)) with x substituted numerically.
std::map<int, QPoly> composed_parts(const Polynomial& f, std::array<double, 2> x) {
  std::map<int, QPoly> parts;
  const Polynomial composed = compose_x_tau(f);
  for (const auto& [e, c] : composed.terms()) {
    const double coeff = c.to_double() * std::pow(x[0], e[0]) * std::pow(x[1], e[1]);
    parts[e[0] + e[1]][{e[2], e[3], e[4], e[5]}] += coeff;
  }
  return parts;
}

}  // namespace

double QuadRule::sum_weights() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

double jacobi_mass(double a, double b) {
  return std::exp((a + b + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                  std::lgamma(a + b + 2.0));
}

QuadRule gauss_jacobi(unsigned n, double a, double b) {
  if (!(a > -1.0) || !(b > -1.0)) {
    throw InvalidWeight("Jacobi exponents must exceed -1 (a = " + std::to_string(a) + ", b = " + std::to_string(b) +
                        ")");
  }
  if (n == 0) throw RangeError("a quadrature rule needs at least one node");

  // Recurrence coefficients of the monic Jacobi polynomials.
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 1);
  const double ab = a + b;
  for (unsigned k = 0; k < n; ++k) {
    const double s = 2.0 * k + ab;
    diag(k) = k == 0 ? (b - a) / (ab + 2.0) : (b * b - a * a) / (s * (s + 2.0));
  }
  for (unsigned k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    double beta;
    if (k == 1) {
      beta = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      beta = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    sub(k - 1) = std::sqrt(beta);
  }

  const double mass = jacobi_mass(a, b);
  QuadRule rule;
  rule.a = a;
  rule.b = b;
  if (n == 1) {
    rule.nodes = {diag(0)};
    rule.weights = {mass};
    return rule;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw Error("Golub-Welsch eigensolver failed");
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (unsigned k = 0; k < n; ++k) {
    rule.nodes[k] = solver.eigenvalues()(k);
    const double v0 = solver.eigenvectors()(0, k);
    rule.weights[k] = mass * v0 * v0;
  }
  return rule;
}

QuadRule unit_interval_rule(unsigned n, double p, double r) {
  // u = (1+t)/2: u^p (1-u)^r du = 2^(-p-r-1) (1-t)^r (1+t)^p dt.
  QuadRule rule = gauss_jacobi(n, r, p);
  const double scale = std::pow(2.0, -p - r - 1.0);
  for (auto& t : rule.nodes) t = 0.5 * (1.0 + t);
  for (auto& w : rule.weights) w *= scale;
  return rule;
}

MuGrid MuGrid::for_measure(double kappa, unsigned nodes) {
  require_kappa_above(kappa, 0.5, "the measure mu");
  MuGrid g;
  g.u = unit_interval_rule(nodes, 2.0 * kappa - 1.0, 2.0 * kappa - 1.0);
  g.psi1 = gauss_jacobi(nodes, kappa - 1.0, kappa - 1.0);
  g.psi2 = g.psi1;
  g.theta = g.psi1;
  g.phi1 = gauss_jacobi(nodes, kappa - 1.5, kappa - 1.5);
  g.phi2 = g.phi1;
  return g;
}

GridMoments::GridMoments(const MuGrid& grid, unsigned max_degree) : max_degree_(max_degree) {
  const unsigned d = max_degree;
  u_.assign(d + 1, std::vector<double>(d + 1, 0.0));
  for (std::size_t k = 0; k < grid.u.size(); ++k) {
    const double u = grid.u.nodes[k];
    double up = grid.u.weights[k];
    for (unsigned p = 0; p <= d; ++p) {
      double v = up;
      for (unsigned r = 0; p + r <= d; ++r) {
        u_[p][r] += v;
        v *= 1.0 - u;
      }
      up *= u;
    }
  }

  auto side_table = [d](const QuadRule& psi, const QuadRule& phi, double ct, double st) {
    std::vector<std::vector<double>> t(d + 1, std::vector<double>(d + 1, 0.0));
    std::vector<double> cpow(d + 1), zpow(d + 1);
    for (std::size_t i = 0; i < psi.size(); ++i) {
      const double c = psi.nodes[i];
      const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
      for (std::size_t j = 0; j < phi.size(); ++j) {
        const double z = c * ct + s * st * phi.nodes[j];
        const double w = psi.weights[i] * phi.weights[j];
        cpow[0] = zpow[0] = 1.0;
        for (unsigned k = 1; k <= d; ++k) {
          cpow[k] = cpow[k - 1] * c;
          zpow[k] = zpow[k - 1] * z;
        }
        for (unsigned a = 0; a <= d; ++a) {
          for (unsigned b = 0; a + b <= d; ++b) t[a][b] += w * cpow[a] * zpow[b];
        }
      }
    }
    return t;
  };

  for (std::size_t k = 0; k < grid.theta.size(); ++k) {
    const double ct = grid.theta.nodes[k];
    const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    theta_w_.push_back(grid.theta.weights[k]);
    side1_.push_back(side_table(grid.psi1, grid.phi1, ct, st));
    side2_.push_back(side_table(grid.psi2, grid.phi2, ct, st));
  }
}

double GridMoments::raw(const MultiIndex4& alpha) const {
  if (alpha.total() > max_degree_) throw RangeError("moment degree exceeds the precomputed table");
  const unsigned a1 = alpha[0], a2 = alpha[1], a3 = alpha[2], a4 = alpha[3];
  double angular = 0.0;
  for (std::size_t k = 0; k < theta_w_.size(); ++k) angular += theta_w_[k] * side1_[k][a1][a4] * side2_[k][a2][a3];
  return u_[a1 + a4][a2 + a3] * angular;
}

double GridMoments::raw(const QPoly& poly) const {
  double s = 0.0;
  for (const auto& [e, c] : poly) s += c * raw(MultiIndex4(e[0], e[1], e[2], e[3]));
  return s;
}

double numeric_moment(const MultiIndex4& alpha, double kappa, unsigned nodes_per_dim) {
  const GridMoments m(MuGrid::for_measure(kappa, nodes_per_dim), alpha.total());
  return m.raw(alpha) / m.raw(MultiIndex4());
}

double numeric_normalizing_constant(double kappa, unsigned nodes_per_dim) {
  const GridMoments m(MuGrid::for_measure(kappa, nodes_per_dim), 0);
  return 1.0 / m.raw(MultiIndex4());
}

double normalizing_constant_gamma(double kappa) {
  require_kappa_above(kappa, 0.5, "the normalizing constant");
  const double k = kappa;
  return std::pow(4.0, k - 1.0) * (2.0 * k - 1.0) * (2.0 * k - 1.0) * std::tgamma(2.0 * k + 0.5) /
         (std::pow(std::numbers::pi, 2.5) * std::tgamma(k) * std::tgamma(k));
}

namespace {

// Grids of the two correction integrals: the mu density divided by
// u^2 sin^2 phi1 sin^2 psi1 (1 + cos theta), resp. by
// (1-u)^2 sin^2 phi2 sin^2 psi2 (1 - cos theta).
MuGrid correction_grid(double k, unsigned n, bool first) {
  const QuadRule psi = gauss_jacobi(n, k - 1.0, k - 1.0);
  const QuadRule psi_red = gauss_jacobi(n, k - 2.0, k - 2.0);
  const QuadRule phi = gauss_jacobi(n, k - 1.5, k - 1.5);
  const QuadRule phi_red = gauss_jacobi(n, k - 2.5, k - 2.5);
  MuGrid g;
  if (first) {
    g.u = unit_interval_rule(n, 2.0 * k - 3.0, 2.0 * k - 1.0);
    g.psi1 = psi_red;
    g.psi2 = psi;
    g.theta = gauss_jacobi(n, k - 1.0, k - 2.0);
    g.phi1 = phi_red;
    g.phi2 = phi;
  } else {
    g.u = unit_interval_rule(n, 2.0 * k - 1.0, 2.0 * k - 3.0);
    g.psi1 = psi;
    g.psi2 = psi_red;
    g.theta = gauss_jacobi(n, k - 2.0, k - 1.0);
    g.phi1 = phi;
    g.phi2 = phi_red;
  }
  return g;
}

double checked_vint_kappa(double kappa) {
  require_kappa_above(kappa, 1.5, "the integral representation of V");
  return kappa;
}

}  // namespace

VintIntegrator::VintIntegrator(double kappa, unsigned nodes_per_dim, unsigned max_degree, unsigned omega_nodes)
    : kappa_(checked_vint_kappa(kappa)),
      max_degree_(max_degree),
      main_(MuGrid::for_measure(kappa, nodes_per_dim), max_degree + 2),
      left_(correction_grid(kappa, nodes_per_dim, true), max_degree + 2),
      right_(correction_grid(kappa, nodes_per_dim, false), max_degree + 2),
      norm_(main_.raw(MultiIndex4())) {
  // omega g = integral_0^1 g(t .) t^(4k-1) dt with t = (1+s)/2.
  const QuadRule r = gauss_jacobi(omega_nodes, 0.0, 4.0 * kappa - 1.0);
  const double scale = std::pow(2.0, -4.0 * kappa);
  for (std::size_t i = 0; i < r.size(); ++i) {
    omega_t_.push_back(0.5 * (1.0 + r.nodes[i]));
    omega_w_.push_back(r.weights[i] * scale);
  }
}

double VintIntegrator::apply(const Polynomial& f, std::array<double, 2> x) const {
  if (f.var_set() != VarSet::X) throw VarSetMismatch("V acts on polynomials over X");
  if (f.degree() > static_cast<int>(max_degree_)) throw RangeError("polynomial degree exceeds the integrator's");
  const QPoly weight = to_qpoly(Polynomial::constant(VarSet::Q, Rational(1)) + invariant_g(0) + invariant_g(3));
  const Polynomial q1 = Polynomial::variable(VarSet::Q, 0), q2 = Polynomial::variable(VarSet::Q, 1);
  const Polynomial q3 = Polynomial::variable(VarSet::Q, 2), q4 = Polynomial::variable(VarSet::Q, 3);
  const QPoly sq_left = to_qpoly(pow(q1 + q4, 2));
  const QPoly sq_right = to_qpoly(pow(q2 - q3, 2));

  double main = 0.0, left = 0.0, right = 0.0;
  for (const auto& [degree, part] : composed_parts(f, x)) {
    double omega = 0.0;
    for (std::size_t i = 0; i < omega_t_.size(); ++i) omega += omega_w_[i] * std::pow(omega_t_[i], degree);
    main += main_.raw(mul(part, weight));
    left += omega * left_.raw(mul(part, sq_left));
    right += omega * right_.raw(mul(part, sq_right));
  }
  return (main + (2.0 * kappa_ - 3.0) * (left - right)) / norm_;
}

double numeric_Vint(const Polynomial& f, std::array<double, 2> x, double kappa, unsigned nodes_per_dim) {
  const VintIntegrator integrator(kappa, nodes_per_dim, static_cast<unsigned>(std::max(0, f.degree())));
  return integrator.apply(f, x);
}

double numeric_bessel(std::array<double, 2> x, std::array<double, 2> y, double kappa, unsigned nodes_per_dim) {
  const MuGrid g = MuGrid::for_measure(kappa, nodes_per_dim);
  // <x tau(q), y> = a q1 + b q2 + c q3 + d q4
  const double a = x[0] * y[0], b = x[1] * y[0], c = x[0] * y[1], d = x[1] * y[1];

  // Per theta node: the (psi, phi) nodes give points (c_psi, z) with
  // z = c_psi ct + s_psi st cos phi, independent of u.
  struct Point {
    double c, z, w;
  };
  auto side_points = [](const QuadRule& psi, const QuadRule& phi, double ct, double st) {
    std::vector<Point> pts;
    pts.reserve(psi.size() * phi.size());
    for (std::size_t i = 0; i < psi.size(); ++i) {
      const double cp = psi.nodes[i];
      const double sp = std::sqrt(std::max(0.0, 1.0 - cp * cp));
      for (std::size_t j = 0; j < phi.size(); ++j) {
        pts.push_back({cp, cp * ct + sp * st * phi.nodes[j], psi.weights[i] * phi.weights[j]});
      }
    }
    return pts;
  };

  double total = 0.0, norm = 0.0;
  for (std::size_t t = 0; t < g.theta.size(); ++t) {
    const double ct = g.theta.nodes[t];
    const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    const auto p1 = side_points(g.psi1, g.phi1, ct, st);
    const auto p2 = side_points(g.psi2, g.phi2, ct, st);
    double side_mass1 = 0.0, side_mass2 = 0.0;
    for (const auto& p : p1) side_mass1 += p.w;
    for (const auto& p : p2) side_mass2 += p.w;
    for (std::size_t k = 0; k < g.u.size(); ++k) {
      const double u = g.u.nodes[k];
      double s1 = 0.0, s2 = 0.0;
      for (const auto& p : p1) s1 += p.w * std::exp(u * (a * p.c + d * p.z));
      for (const auto& p : p2) s2 += p.w * std::exp((1.0 - u) * (b * p.c + c * p.z));
      const double w = g.theta.weights[t] * g.u.weights[k];
      total += w * s1 * s2;
      norm += w * side_mass1 * side_mass2;
    }
  }
  return total / norm;
}

double bessel_series(std::array<double, 2> x, std::array<double, 2> y, const Kappa& kappa, unsigned cutoff) {
  const MomentFunctional mf(kappa);
  const std::array<double, 4> point{x[0], x[1], y[0], y[1]};
  double sum = 0.0;
  // K0_n vanishes for odd n: -1 is in B2.
  for (unsigned n = 0; n <= cutoff; n += 2) sum += evaluate(kernel_K0(n, mf), point);
  return sum;
}

double vint_density(double kappa, double u, double psi1, double psi2, double theta, double phi1, double phi2) {
  const double c1 = std::cos(psi1), s1 = std::sin(psi1);
  const double c2 = std::cos(psi2), s2 = std::sin(psi2);
  const double ct = std::cos(theta), st = std::sin(theta);
  const double q1 = u * c1;
  const double q2 = (1.0 - u) * c2;
  const double q3 = (1.0 - u) * (c2 * ct + s2 * st * std::cos(phi2));
  const double q4 = u * (c1 * ct + s1 * st * std::cos(phi1));
  const double base = 1.0 + 2.0 * (q1 + q4) + q1 * q4 - q2 * q3;
  const double left = (q1 + q4) / (u * std::sin(phi1) * s1);
  const double right = (q2 - q3) / ((1.0 - u) * std::sin(phi2) * s2);
  const double g0_tilde = left * left / (1.0 + ct) - right * right / (1.0 - ct);
  return base + (2.0 * kappa - 3.0) * g0_tilde;
}

std::vector<ConvergenceRow> moment_convergence(const MultiIndex4& alpha, double kappa, double exact,
                                               const std::vector<unsigned>& node_counts) {
  std::vector<ConvergenceRow> rows;
  for (unsigned n : node_counts) {
    const double v = numeric_moment(alpha, kappa, n);
    rows.push_back({n, v, std::abs(v - exact)});
  }
  return rows;
}

}  // namespace b2v

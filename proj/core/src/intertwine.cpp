#include "b2v/intertwine.hpp"

#include <functional>

#include "b2v/dunkl.hpp"
#include "b2v/errors.hpp"
#include "b2v/hyper.hpp"
#include "b2v/linsolve.hpp"

namespace b2v {

namespace {

using QFunctional = std::function<Rational(const Polynomial&)>;

Exponent x_exponent(unsigned e1, unsigned e2) {
  return Exponent{static_cast<std::uint16_t>(e1), static_cast<std::uint16_t>(e2)};
}

Exponent xy_exponent(unsigned x1, unsigned x2, unsigned y1, unsigned y2) {
  return Exponent{static_cast<std::uint16_t>(x1), static_cast<std::uint16_t>(x2), static_cast<std::uint16_t>(y1),
                  static_cast<std::uint16_t>(y2)};
}

void reject_singular(const Kappa& kappa) {
  if (kappa.singular()) {
    throw SingularParameter("kappa = " + kappa.value().str() +
                            " is singular (kappa in -1/2-N0, -1/4-N0 or -3/4-N0)");
  }
}

// sum_i C(m,i) y1^(m-i) y2^i sum_c phi(P_{m-i,i}^c) x1^(m-c) x2^c
Polynomial pairing_image(unsigned m, const QFunctional& phi) {
  Polynomial out(VarSet::XY);
  for (unsigned i = 0; i <= m; ++i) {
    const Rational bin = binomial(m, i);
    for (unsigned c = 0; c <= m; ++c) {
      const Rational v = phi(p_poly(m - i, i, c));
      if (!v.is_zero()) out.add_term(xy_exponent(m - c, c, m - i, i), bin * v);
    }
  }
  return out;
}

Polynomial apply_V_with(const Polynomial& f, const std::function<Rational(const Polynomial&)>& functional) {
  if (f.var_set() != VarSet::X) throw VarSetMismatch("V acts on polynomials over X");
  Polynomial out(VarSet::X);
  for (const auto& [degree, part] : homogeneous_components(f)) {
    for (const auto& [xe, coeff] : collect_x_coefficients(compose_x_tau(part))) {
      const Rational v = functional(coeff);
      if (!v.is_zero()) out.add_term(x_exponent(xe[0], xe[1]), v);
    }
  }
  return out;
}

Rational nonzero_or_singular(const Rational& r, const char* what) {
  if (r.is_zero()) throw SingularParameter(std::string(what) + " vanishes at this kappa");
  return r;
}

}  // namespace

Polynomial apply_V(const Polynomial& f, const MomentFunctional& mf) {
  reject_singular(mf.kappa());
  return apply_V_with(f, [&](const Polynomial& p) { return mf.xi(p); });
}

Polynomial apply_V(const Polynomial& f, const Kappa& kappa) { return apply_V(f, MomentFunctional(kappa)); }

Polynomial apply_V_g3_variant(const Polynomial& f, const MomentFunctional& mf) {
  reject_singular(mf.kappa());
  return apply_V_with(f, [&](const Polynomial& p) { return mf.xi_g3(p); });
}

Polynomial apply_V_monomial(unsigned a, unsigned b, const MomentFunctional& mf) {
  reject_singular(mf.kappa());
  Polynomial out(VarSet::X);
  for (unsigned c = 0; c <= a + b; ++c) {
    const Rational v = mf.xi(p_poly(a, b, c));
    if (!v.is_zero()) out.add_term(x_exponent(a + b - c, c), v);
  }
  return out;
}

void OracleV::ensure_degree(unsigned n) {
  while (images_.size() <= n) {
    const unsigned d = static_cast<unsigned>(images_.size());
    if (d == 0) {
      images_.push_back({Polynomial::constant(VarSet::X, Rational(1))});
      continue;
    }
    // Unknowns: coefficients of x1^(d-c) x2^c in V(x1^(d-j) x2^j).
    // Rows: coefficients of x1^(d-1-r) x2^r in T1(.) then in T2(.).
    RationalMatrix a(2 * d, std::vector<Rational>(d + 1));
    for (unsigned c = 0; c <= d; ++c) {
      const Polynomial basis = Polynomial::monomial(VarSet::X, x_exponent(d - c, c));
      for (int t = 0; t < 2; ++t) {
        const Polynomial image = apply_T(t + 1, kappa_, basis);
        for (unsigned r = 0; r < d; ++r) a[t * d + r][c] = image.coefficient(x_exponent(d - 1 - r, r));
      }
    }
    const auto& lower = images_[d - 1];
    RationalMatrix b(2 * d, std::vector<Rational>(d + 1));
    for (unsigned j = 0; j <= d; ++j) {
      // d/dx1 x1^(d-j) x2^j = (d-j) x1^(d-j-1) x2^j, d/dx2 likewise.
      Polynomial rhs1(VarSet::X), rhs2(VarSet::X);
      if (j < d) rhs1 = lower[j] * Rational(d - j);
      if (j > 0) rhs2 = lower[j - 1] * Rational(j);
      for (unsigned r = 0; r < d; ++r) {
        b[r][j] = rhs1.coefficient(x_exponent(d - 1 - r, r));
        b[d + r][j] = rhs2.coefficient(x_exponent(d - 1 - r, r));
      }
    }
    RationalMatrix x;
    try {
      x = solve_exact(a, b);
    } catch (const SingularSystem& e) {
      throw SingularSystem("intertwining equations of degree " + std::to_string(d) + " at kappa = " +
                           kappa_.value().str() + ": " + e.what());
    }
    std::vector<Polynomial> row;
    row.reserve(d + 1);
    for (unsigned j = 0; j <= d; ++j) {
      Polynomial p(VarSet::X);
      for (unsigned c = 0; c <= d; ++c) p.add_term(x_exponent(d - c, c), x[c][j]);
      row.push_back(std::move(p));
    }
    images_.push_back(std::move(row));
  }
}

const Polynomial& OracleV::monomial(unsigned n, unsigned j) {
  if (j > n) throw RangeError("monomial index out of range");
  ensure_degree(n);
  return images_[n][j];
}

Polynomial OracleV::apply(const Polynomial& f) {
  if (f.var_set() != VarSet::X) throw VarSetMismatch("V acts on polynomials over X");
  Polynomial out(VarSet::X);
  for (const auto& [e, c] : f.terms()) out += monomial(e[0] + e[1], e[1]) * c;
  return out;
}

Polynomial apply_V_oracle(const Polynomial& f, const Kappa& kappa) { return OracleV(kappa).apply(f); }

VResult compute_V(const Polynomial& f, const Kappa& kappa, VRoute route) {
  Polynomial out = route == VRoute::Formula ? apply_V(f, kappa) : apply_V_oracle(f, kappa);
  return VResult{f, kappa, std::move(out), route};
}

Polynomial kernel_K(unsigned n, const MomentFunctional& mf) {
  reject_singular(mf.kappa());
  return pairing_image(n, [&](const Polynomial& p) { return mf.xi(p); }) * factorial(n).inverse();
}

Polynomial kernel_K(unsigned n, const Kappa& kappa) { return kernel_K(n, MomentFunctional(kappa)); }

Polynomial kernel_K0(unsigned n, const MomentFunctional& mf) {
  const Polynomial k = kernel_K(n, mf);
  Polynomial sum(VarSet::XY);
  for (const auto& w : GroupElement::all()) sum += act(w, k);
  return sum * Rational(1, 8);
}

Polynomial kernel_K0(unsigned n, const Kappa& kappa) { return kernel_K0(n, MomentFunctional(kappa)); }

Polynomial kernel_K0_from_moments(unsigned n, const MomentFunctional& mf) {
  return pairing_image(n, [&](const Polynomial& p) { return mf.xi0(p); }) * factorial(n).inverse();
}

Polynomial inner_xy() {
  return Polynomial::monomial(VarSet::XY, xy_exponent(1, 0, 1, 0)) +
         Polynomial::monomial(VarSet::XY, xy_exponent(0, 1, 0, 1));
}

Polynomial condV_residual(unsigned n, const MomentFunctional& mf) {
  reject_singular(mf.kappa());
  auto xi = [&](const Polynomial& p) { return mf.xi(p); };
  const Polynomial xi_n = pairing_image(n, xi);
  const Polynomial xi_n1 = pairing_image(n + 1, xi);
  const Polynomial lhs = (inner_xy() * xi_n - xi_n1) * Rational(n + 1);
  Polynomial rhs(VarSet::XY);
  for (const auto& sigma : GroupElement::reflections()) {
    rhs += xi_n1 - pairing_image(n + 1, [&](const Polynomial& p) { return mf.xi(act_lambda(sigma, p)); });
  }
  return lhs - rhs * mf.kappa().value();
}

bool check_condV(unsigned n, const Kappa& kappa) { return condV_residual(n, MomentFunctional(kappa)).is_zero(); }

Polynomial oddeqn_residual(unsigned n, const MomentFunctional& mf) {
  const Rational factor = Rational(4) * mf.kappa().value() + Rational(2 * n + 1);
  return kernel_K(2 * n + 1, mf) * factor - inner_xy() * kernel_K(2 * n, mf);
}

bool check_oddeqn(unsigned n, const Kappa& kappa) { return oddeqn_residual(n, MomentFunctional(kappa)).is_zero(); }

Rational check_oddP_identity(unsigned a1, unsigned a2, unsigned a3, const Kappa& kappa) {
  const MomentFunctional mf(kappa);
  const Rational& k = kappa.value();
  const unsigned n_int = a1 + a2 + a3;
  const Rational n(n_int);
  const Polynomial p = p_poly(2 * a1 + 1 + 2 * a3, 2 * a2, 2 * a3);
  auto q = [](int i) { return Polynomial::variable(VarSet::Q, i - 1); };
  auto d = [](const Polynomial& f, int i) { return diff(f, i - 1); };

  const Rational two(2), three(3), four(4);
  const Rational f_even = nonzero_or_singular(four * k + two * n, "4 kappa + 2n");
  const Rational f_mix =
      nonzero_or_singular((two * k + n) * (four * k + n), "(2 kappa + n)(4 kappa + n)");

  const Polynomial d1p = d(p, 1);
  const Polynomial d4p = d(p, 4);
  const Polynomial mixed = (three * k + n) * (q(4) * d(d4p, 1) + q(1) * d(d4p, 4)) +
                           k * (q(3) * d(d4p, 2) + q(2) * d(d4p, 3));
  return (four * k + two * n + Rational(1)) * mf.xi0(two * q(1) * p) - mf.xi0(d1p) -
         mf.xi0(apply_L_g2(d1p)) / f_even - mf.xi0(mixed) / f_mix;
}

Rational big1_term(unsigned i_u, unsigned a1_u, unsigned a2_u, unsigned a3_u, const MomentFunctional& mf) {
  const long i = i_u, a1 = a1_u, a2 = a2_u, a3 = a3_u;
  const Rational& k = mf.kappa().value();
  const long n_int = a1 + a2 + a3;
  const Rational n(n_int);
  // c * s(alpha), skipped when c = 0 so negative indices are never evaluated.
  auto term = [&](const Rational& c, long b1, long b2, long b3, long b4) {
    if (c.is_zero()) return Rational(0);
    if (b1 < 0 || b2 < 0 || b3 < 0 || b4 < 0) throw RangeError("negative moment index in t_i");
    return c * mf.s({static_cast<unsigned>(b1), static_cast<unsigned>(b2), static_cast<unsigned>(b3),
                     static_cast<unsigned>(b4)});
  };
  const Rational two(2), four(4);
  const Rational f_mix = nonzero_or_singular((two * k + n) * (four * k + n), "(2 kappa + n)(4 kappa + n)");
  const Rational f_two = nonzero_or_singular(two * k + n, "2 kappa + n");
  const Rational ri(i);

  Rational v = term(two * (four * k + two * n + Rational(1)), 2 * a1 + 2 + i, 2 * a3 - i, 2 * a2 - i, i);
  v -= term(two * Rational(2 * a1 + 1 + i) * (k + Rational(a1 + i)) / f_two, 2 * a1 + i, 2 * a3 - i, 2 * a2 - i, i);
  const Rational c3 = ri * (Rational(3) * k + n) / f_mix;
  v -= term(c3 * Rational(2 * a1 + 1 + i), 2 * a1 + i, 2 * a3 - i, 2 * a2 - i, i);
  v -= term(c3 * Rational(i - 1), 2 * a1 + 2 + i, 2 * a3 - i, 2 * a2 - i, i - 2);
  const Rational c4 = ri * k / f_mix;
  v -= term(c4 * Rational(2 * a3 - i), 2 * a1 + 1 + i, 2 * a3 - i - 1, 2 * a2 - i + 1, i - 1);
  v -= term(c4 * Rational(2 * a2 - i), 2 * a1 + 1 + i, 2 * a3 - i + 1, 2 * a2 - i - 1, i - 1);

  const Rational norm = nonzero_or_singular(
      mf.s({static_cast<unsigned>(2 * a1 + 2), static_cast<unsigned>(2 * a3), static_cast<unsigned>(2 * a2), 0}),
      "normalizing moment");
  return v / norm;
}

Rational check_big1_sum(unsigned m, unsigned a1, unsigned a2, unsigned a3, const Kappa& kappa) {
  if (m < 1 || m > 2 * a2 || m > 2 * a3) throw RangeError("big1 needs 1 <= m <= min(2a2, 2a3)");
  const MomentFunctional mf(kappa);
  const Rational& k = kappa.value();
  const Rational n(a1 + a2 + a3);
  const Rational one(1), two(2), four(4);

  Rational lhs(0);
  for (unsigned i = 1; i <= m; ++i) {
    const Rational c = pochhammer(Rational(-2 * static_cast<long>(a3)), i) *
                       pochhammer(Rational(-2 * static_cast<long>(a2)), i) /
                       (factorial(i) * pochhammer(Rational(2 * a1 + 2), i));
    if (!c.is_zero()) lhs += c * big1_term(i, a1, a2, a3, mf);
  }

  mpz_class p2;
  mpz_ui_pow_ui(p2.get_mpz_t(), 2, 2 * m + 3);
  Rational rhs = Rational(p2) * k * Rational(a2) * Rational(a3) * pochhammer(two - Rational(2 * a2), m - 1) *
                 pochhammer(two - Rational(2 * a3), m - 1) * pochhammer(k + Rational(a1 + 1), m);
  rhs /= factorial(m - 1) * nonzero_or_singular(pochhammer(-two * k - Rational(2 * a2 + 2 * a3) + one, 2 * m),
                                                "(1 - 2 kappa - 2a2 - 2a3)_2m");
  rhs *= pochhammer(Rational(a1) + Rational(3, 2), m - 1) * (four * k + two * n + one);
  rhs /= pochhammer(Rational(2 * a1 + 2), m) * nonzero_or_singular(four * k + n, "4 kappa + n");
  rhs *= eval_F(static_cast<int>(m) - 1, k + one, Rational(a1 + 1), Rational(static_cast<long>(a2) - 1),
                Rational(static_cast<long>(a3) - 1));
  return lhs - rhs;
}

Rational check_big2_sum(unsigned m, unsigned a1_u, unsigned a2_u, unsigned a3_u, const Kappa& kappa) {
  if (m > 2 * a2_u + 1 || m > 2 * a3_u + 1) throw RangeError("big2 needs 0 <= m <= min(2a2+1, 2a3+1)");
  const MomentFunctional mf(kappa);
  const Rational& k = kappa.value();
  const long a1 = a1_u, a2 = a2_u, a3 = a3_u;
  const Rational n(a1 + a2 + a3 + 1);
  const Rational one(1), two(2), four(4), eight(8);

  auto term = [&](const Rational& c, long b1, long b2, long b3, long b4) {
    if (c.is_zero()) return Rational(0);
    if (b1 < 0 || b2 < 0 || b3 < 0 || b4 < 0) throw RangeError("negative moment index in t_i");
    return c * mf.s({static_cast<unsigned>(b1), static_cast<unsigned>(b2), static_cast<unsigned>(b3),
                     static_cast<unsigned>(b4)});
  };
  const Rational norm = nonzero_or_singular(
      mf.s({static_cast<unsigned>(2 * a1), static_cast<unsigned>(2 * a2 + 2), static_cast<unsigned>(2 * a3 + 2), 0}),
      "normalizing moment");
  const Rational e = eight * k + two * n;

  Rational lhs(0);
  for (long i = 0; i <= static_cast<long>(m); ++i) {
    const Rational c = pochhammer(Rational(-2 * a2 - 1), i) * pochhammer(Rational(-2 * a3 - 1), i) /
                       (factorial(i) * pochhammer(Rational(2 * a1 + 1), i));
    if (c.is_zero()) continue;
    Rational t = term(e, 2 * a1 + 1 + i, 2 * a3 + 1 - i, 2 * a2 + 1 - i, i + 1);
    t -= term(e, 2 * a1 + i, 2 * a3 + 2 - i, 2 * a2 + 2 - i, i);
    t -= term(Rational(2 * a1 + i), 2 * a1 + i - 1, 2 * a3 + 1 - i, 2 * a2 + 1 - i, i + 1);
    t -= term(Rational(i), 2 * a1 + i + 1, 2 * a3 + 1 - i, 2 * a2 + 1 - i, i - 1);
    t += term(Rational(2 * a3 + 1 - i), 2 * a1 + i, 2 * a3 - i, 2 * a2 + 2 - i, i);
    t += term(Rational(2 * a2 + 1 - i), 2 * a1 + i, 2 * a3 + 2 - i, 2 * a2 - i, i);
    lhs += c * t / norm;
  }

  mpz_class p2;
  mpz_ui_pow_ui(p2.get_mpz_t(), 2, 2 * m + 3);
  Rational rhs = Rational(p2) * k * pochhammer(k + Rational(a1), m + 1) * pochhammer(Rational(-2 * a2), m) *
                 pochhammer(Rational(-2 * a3), m) * pochhammer(Rational(a1) + Rational(1, 2), m);
  rhs /= factorial(m) *
         nonzero_or_singular(pochhammer(-two * k - Rational(2 * a2 + 2 * a3 + 3), 2 * m + 2),
                             "(-2 kappa - 2a2 - 2a3 - 3)_(2m+2)") *
         pochhammer(Rational(2 * a1 + 1), m);
  rhs *= (four * k + Rational(3) * n + two) *
         eval_F(static_cast<int>(m), k + one, Rational(a1), Rational(a2), Rational(a3));
  return lhs - rhs;
}

}  // namespace b2v

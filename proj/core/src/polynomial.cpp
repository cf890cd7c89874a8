#include "b2v/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "b2v/errors.hpp"

namespace b2v {

namespace {

constexpr std::array<std::string_view, 2> kXNames{"x1", "x2"};
constexpr std::array<std::string_view, 4> kQNames{"q1", "q2", "q3", "q4"};
constexpr std::array<std::string_view, 4> kXYNames{"x1", "x2", "y1", "y2"};
constexpr std::array<std::string_view, 6> kXQNames{"x1", "x2", "q1", "q2", "q3", "q4"};

Exponent add_exponents(const Exponent& a, const Exponent& b) {
  Exponent r{};
  for (int i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return r;
}

}  // namespace

int num_vars(VarSet vs) {
  switch (vs) {
    case VarSet::X: return 2;
    case VarSet::Q: return 4;
    case VarSet::XY: return 4;
    case VarSet::XQ: return 6;
  }
  return 0;
}

std::string_view var_set_name(VarSet vs) {
  switch (vs) {
    case VarSet::X: return "X";
    case VarSet::Q: return "Q";
    case VarSet::XY: return "XY";
    case VarSet::XQ: return "XQ";
  }
  return "?";
}

VarSet parse_var_set(std::string_view name) {
  for (VarSet vs : {VarSet::X, VarSet::Q, VarSet::XY, VarSet::XQ}) {
    if (var_set_name(vs) == name) return vs;
  }
  throw ParseError("unknown variable set '" + std::string(name) + "'");
}

std::string_view var_name(VarSet vs, int index) {
  if (index < 0 || index >= num_vars(vs)) throw RangeError("variable index out of range");
  switch (vs) {
    case VarSet::X: return kXNames[index];
    case VarSet::Q: return kQNames[index];
    case VarSet::XY: return kXYNames[index];
    case VarSet::XQ: return kXQNames[index];
  }
  return "?";
}

int total_degree(const Exponent& e) {
  int d = 0;
  for (auto v : e) d += v;
  return d;
}

Polynomial Polynomial::constant(VarSet vs, const Rational& c) {
  Polynomial p(vs);
  p.add_term(Exponent{}, c);
  return p;
}

Polynomial Polynomial::variable(VarSet vs, int index) {
  if (index < 0 || index >= num_vars(vs)) throw RangeError("variable index out of range");
  Exponent e{};
  e[index] = 1;
  return monomial(vs, e);
}

Polynomial Polynomial::monomial(VarSet vs, const Exponent& e, const Rational& c) {
  for (int i = num_vars(vs); i < kMaxVars; ++i) {
    if (e[i] != 0) throw RangeError("exponent uses a variable outside the variable set");
  }
  Polynomial p(vs);
  p.add_term(e, c);
  return p;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = total_degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return total_degree(t.first) == d; });
}

void Polynomial::check_same(const Polynomial& rhs) const {
  if (vars_ != rhs.vars_) {
    throw VarSetMismatch("variable sets differ: " + std::string(var_set_name(vars_)) + " vs " +
                         std::string(var_set_name(rhs.vars_)));
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_same(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_same(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same(b);
  Polynomial r(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(add_exponents(ea, eb), ca * cb);
  }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (int i = 0; i < num_vars(vars_); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += var_name(vars_, i);
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    Rational mag = c.abs();
    std::string term;
    if (mono.empty()) {
      term = mag.str();
    } else {
      term = mag == Rational(1) ? mono : mag.str() + "*" + mono;
    }
    if (first) {
      out = (c.sign() < 0 ? "-" : "") + term;
      first = false;
    } else {
      out += (c.sign() < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial result = Polynomial::constant(p.var_set(), Rational(1));
  Polynomial base = p;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

Polynomial diff(const Polynomial& p, int index) {
  if (index < 0 || index >= num_vars(p.var_set())) {
    throw VarSetMismatch("variable index " + std::to_string(index) + " not in " +
                         std::string(var_set_name(p.var_set())));
  }
  Polynomial r(p.var_set());
  for (const auto& [e, c] : p.terms()) {
    if (e[index] == 0) continue;
    Exponent f = e;
    --f[index];
    r.add_term(f, c * Rational(static_cast<long>(e[index])));
  }
  return r;
}

std::vector<std::pair<int, Polynomial>> homogeneous_components(const Polynomial& p) {
  std::map<int, Polynomial> parts;
  for (const auto& [e, c] : p.terms()) {
    auto [it, inserted] = parts.try_emplace(total_degree(e), p.var_set());
    it->second.add_term(e, c);
  }
  return {parts.begin(), parts.end()};
}

Rational evaluate(const Polynomial& p, std::span<const Rational> values) {
  if (static_cast<int>(values.size()) != num_vars(p.var_set())) throw RangeError("wrong number of values");
  Rational sum(0);
  for (const auto& [e, c] : p.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < values.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) t *= values[i];
    }
    sum += t;
  }
  return sum;
}

double evaluate(const Polynomial& p, std::span<const double> values) {
  if (static_cast<int>(values.size()) != num_vars(p.var_set())) throw RangeError("wrong number of values");
  double sum = 0.0;
  for (const auto& [e, c] : p.terms()) {
    double t = c.to_double();
    for (std::size_t i = 0; i < values.size(); ++i) t *= std::pow(values[i], e[i]);
    sum += t;
  }
  return sum;
}

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images) {
  const int n = num_vars(p.var_set());
  if (static_cast<int>(images.size()) != n || n == 0) throw RangeError("one image per variable required");
  const VarSet target = images.front().var_set();
  for (const auto& img : images) {
    if (img.var_set() != target) throw VarSetMismatch("substitution images use different variable sets");
  }
  // Powers of each image, built on demand.
  std::vector<std::vector<Polynomial>> powers(n);
  auto power_of = [&](int i, int k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, Rational(1)));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  Polynomial r(target);
  for (const auto& [e, c] : p.terms()) {
    Polynomial t = Polynomial::constant(target, c);
    for (int i = 0; i < n; ++i) {
      if (e[i] > 0) t *= power_of(i, e[i]);
    }
    r += t;
  }
  return r;
}

Polynomial signed_permute(const Polynomial& p, std::span<const int> target, std::span<const int> sign) {
  const int n = num_vars(p.var_set());
  if (static_cast<int>(target.size()) != n || static_cast<int>(sign.size()) != n) {
    throw RangeError("signed permutation has wrong size");
  }
  Polynomial r(p.var_set());
  for (const auto& [e, c] : p.terms()) {
    Exponent f{};
    bool negate = false;
    for (int i = 0; i < n; ++i) {
      f[target[i]] = static_cast<std::uint16_t>(f[target[i]] + e[i]);
      if (sign[i] < 0 && (e[i] & 1U)) negate = !negate;
    }
    r.add_term(f, negate ? -c : c);
  }
  return r;
}

Polynomial compose_x_tau(const Polynomial& f) {
  if (f.var_set() != VarSet::X) throw VarSetMismatch("compose_x_tau expects a polynomial over X");
  auto v = [](int i) { return Polynomial::variable(VarSet::XQ, i); };
  // XQ slots: x1=0, x2=1, q1=2, q2=3, q3=4, q4=5.
  return substitute(f, {v(0) * v(2) + v(1) * v(3), v(0) * v(4) + v(1) * v(5)});
}

Polynomial p_poly(unsigned a, unsigned b, unsigned c) {
  if (c > a + b) throw RangeError("p_poly needs c <= a + b");
  Polynomial r(VarSet::Q);
  const unsigned lo = c > a ? c - a : 0;
  const unsigned hi = std::min(b, c);
  for (unsigned i = lo; i <= hi; ++i) {
    Exponent e{};
    e[0] = static_cast<std::uint16_t>(a - c + i);
    e[1] = static_cast<std::uint16_t>(c - i);
    e[2] = static_cast<std::uint16_t>(b - i);
    e[3] = static_cast<std::uint16_t>(i);
    r.add_term(e, binomial(a, c - i) * binomial(b, i));
  }
  return r;
}

std::vector<std::pair<std::array<int, 2>, Polynomial>> collect_x_coefficients(const Polynomial& p) {
  if (p.var_set() != VarSet::XQ) throw VarSetMismatch("collect_x_coefficients expects a polynomial over XQ");
  std::map<std::array<int, 2>, Polynomial> parts;
  for (const auto& [e, c] : p.terms()) {
    auto [it, inserted] = parts.try_emplace({e[0], e[1]}, VarSet::Q);
    it->second.add_term(Exponent{e[2], e[3], e[4], e[5], 0, 0}, c);
  }
  return {parts.begin(), parts.end()};
}

Polynomial divide_by_linear(const Polynomial& p, const Polynomial& form) {
  if (p.var_set() != VarSet::X || form.var_set() != VarSet::X) {
    throw VarSetMismatch("divide_by_linear expects polynomials over X");
  }
  if (form.is_zero() || form.degree() != 1 || !form.is_homogeneous()) {
    throw RangeError("divisor must be a nonzero linear form");
  }
  const Rational a1 = form.coefficient(Exponent{1, 0});
  const Rational a2 = form.coefficient(Exponent{0, 1});
  // Eliminate the variable with a nonzero coefficient, highest power first.
  const int var = a1.is_zero() ? 1 : 0;
  const Rational lead = var == 0 ? a1 : a2;

  Polynomial rem = p;
  Polynomial quot(VarSet::X);
  for (;;) {
    const Exponent* pick = nullptr;
    for (const auto& [e, c] : rem.terms()) {
      if (e[var] > 0 && (pick == nullptr || e[var] > (*pick)[var])) pick = &e;
    }
    if (pick == nullptr) break;
    Exponent e = *pick;
    const Rational c = rem.coefficient(e) / lead;
    --e[var];
    Polynomial t = Polynomial::monomial(VarSet::X, e, c);
    quot += t;
    rem -= t * form;
  }
  if (!rem.is_zero()) throw NotDivisible("remainder " + rem.str() + " after division by " + form.str());
  return quot;
}

}  // namespace b2v

#include "b2v/hyper.hpp"

#include <optional>
#include <string>

#include "b2v/errors.hpp"

namespace b2v {

namespace {

const Rational kHalf(1, 2);

// k when r == -k for an integer k >= 0.
std::optional<unsigned long> nonpositive_integer(const Rational& r) {
  if (!r.is_integer() || r.sign() > 0) return std::nullopt;
  const mpz_class k = -r.numerator();
  if (!k.fits_ulong_p()) return std::nullopt;
  return k.get_ui();
}

void require_nonzero(const Rational& r, const char* what) {
  if (r.is_zero()) throw DivisionByZero(std::string("excluded parameter: ") + what + " = 0");
}

}  // namespace

Rational pochhammer(const Rational& a, unsigned k) {
  Rational r(1);
  for (unsigned j = 0; j < k; ++j) {
    r *= a + Rational(j);
    if (r.is_zero()) break;
  }
  return r;
}

Rational terminating_series(const HyperParams& p) {
  for (const Rational& d : p.denominator) {
    if (auto k = nonpositive_integer(d); k && *k < p.term_count) {
      throw ZeroDenominatorTerm("denominator parameter " + d.str() + " vanishes within " +
                                std::to_string(p.term_count) + " terms");
    }
  }
  unsigned last = p.term_count;
  bool terminates = false;
  for (const Rational& a : p.numerator) {
    if (auto k = nonpositive_integer(a); k && *k <= p.term_count) {
      terminates = true;
      if (*k < last) last = static_cast<unsigned>(*k);
    }
  }
  if (!terminates) throw NotTerminating("series has no numerator parameter -k with k <= term_count");

  Rational sum(0);
  Rational term(1);
  for (unsigned i = 0; i <= last; ++i) {
    sum += term;
    if (i == last) break;
    Rational num(1);
    Rational den(i + 1);
    for (const Rational& a : p.numerator) num *= a + Rational(i);
    for (const Rational& d : p.denominator) den *= d + Rational(i);
    term *= num / den;
  }
  return sum;
}

Rational eval_F(const FArgs& args) {
  if (args.n < 0) return Rational(0);
  const int n = args.n;
  HyperParams p;
  p.numerator = {Rational(-n, 2), Rational(1 - n, 2), args.u, -args.u - args.v1 - args.v2 - args.v3};
  p.denominator = {kHalf - args.v1 - Rational(n), kHalf - args.v2, kHalf - args.v3};
  p.term_count = static_cast<unsigned>(n / 2);
  return terminating_series(p);
}

Rational eval_F(int n, const Rational& u, const Rational& v1, const Rational& v2, const Rational& v3) {
  return eval_F(FArgs{n, u, v1, v2, v3});
}

std::pair<Rational, Rational> check_3f2_transforms(unsigned n, const Rational& a, const Rational& b,
                                                   const Rational& c, const Rational& d) {
  const Rational mn(-static_cast<long>(n));
  const Rational lhs = terminating_series({{mn, a, b}, {c, d}, n});

  const Rational first = pochhammer(c + d - a - b, n) / pochhammer(d, n) *
                         terminating_series({{mn, c - a, c - b}, {c, c - a - b + d}, n});

  const Rational one(1);
  Rational second = pochhammer(d - a, n) * pochhammer(d - b, n) / (pochhammer(c, n) * pochhammer(d, n)) *
                    terminating_series({{mn, a + b + mn + one - c - d, one - d + mn},
                                        {a - d + one + mn, b - d + one + mn},
                                        n});
  if (n % 2 == 1) second = -second;
  return {lhs - first, lhs - second};
}

Rational check_whipple(unsigned n, const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                       const Rational& e, const Rational& f) {
  const Rational mn(-static_cast<long>(n));
  if (d + e + f != a + b + c + mn + Rational(1)) {
    throw NotBalanced("Whipple transformation needs d+e+f = a+b+c-n+1");
  }
  const Rational lhs = terminating_series({{mn, a, b, c}, {d, e, f}, n});
  const Rational rhs = pochhammer(e - a, n) * pochhammer(f - a, n) / (pochhammer(e, n) * pochhammer(f, n)) *
                       terminating_series({{mn, a, d - b, d - c}, {d, e - b - c + d, f - b - c + d}, n});
  return lhs - rhs;
}

Rational f_recurrence_residual(unsigned n_in, const Rational& k, const Rational& v1, const Rational& v2,
                               const Rational& v3) {
  if (n_in < 1) throw RangeError("F recurrence needs n >= 1");
  const Rational n(n_in);
  const int ni = static_cast<int>(n_in);
  const Rational two(2);
  const Rational a = n + v1 - kHalf;
  const Rational lower = n * (n + two * v1) * (n + k + v1 - kHalf) * (k + kHalf + v2 + v3 - n);
  const Rational middle = (n * (n + two * v1) * (n - v2 - v3 - kHalf) +
                           (n + kHalf + v1) * (n - two * v2) * (n - two * v3)) *
                          a;
  const Rational upper = a * (n + v1 + kHalf) * (n - two * v2) * (n - two * v3);
  return lower * eval_F(ni - 1, k, v1, v2, v3) + middle * eval_F(ni, k, v1, v2, v3) -
         upper * eval_F(ni + 1, k, v1, v2, v3);
}

Rational contiguity1_residual(unsigned m_in, const Rational& k, const Rational& v1, const Rational& v2,
                              const Rational& v3) {
  if (m_in < 1) throw RangeError("first contiguity relation needs m >= 1");
  const Rational m(m_in);
  const int mi = static_cast<int>(m_in);
  const Rational one(1), two(2), four(4), eight(8);
  const Rational v0 = v1 + v2 + v3;
  const Rational d2 = two * v2 - one;
  const Rational d3 = two * v3 - one;
  const Rational d1 = two * v1 + two * m - one;
  require_nonzero(d2, "2v2-1");
  require_nonzero(d3, "2v3-1");
  require_nonzero(d1, "2v1+2m-1");

  Rational r = two * (two * v1 + two * m + one) * (k + v1 + m) * (four * k + v0) * eval_F(mi, k, v1 + one, v2, v3);
  r -= (two * (k + v1 + m) * (four * k + v0) + m * (Rational(3) * k + v0)) * (two * v1 + m + one) *
       eval_F(mi, k, v1, v2, v3);
  r -= m * (m - one) * (two * v2 + two * k - one) * (two * v3 + two * k - one) / (d2 * d3) *
       (Rational(3) * k + v0) * eval_F(mi - 2, k, v1 + two, v2 - one, v3 - one);
  r -= m * k * (two * k + two * v3 - one) / d3 * (two * v3 - m) * eval_F(mi - 1, k, v1 + one, v2, v3 - one);
  r -= m * k * (two * k + two * v2 - one) / d2 * (two * v2 - m) * eval_F(mi - 1, k, v1 + one, v2 - one, v3);
  r += m * (m - one) * eight * k * (two * v1 + m + one) / (d2 * d3 * d1) * (k + v2 + v3 - m) *
       (k + v2 + v3 + kHalf - m) * eval_F(mi - 2, k + one, v1 + one, v2 - one, v3 - one);
  r -= four * m * k * (two * v2 - m) * (two * v3 - m) / (d2 * d3) * (k + v1 + m) *
       eval_F(mi - 1, k + one, v1 + one, v2 - one, v3 - one);
  return r;
}

Rational contiguity2_residual(unsigned m_in, const Rational& k, const Rational& v1, const Rational& v2,
                              const Rational& v3) {
  const Rational m(m_in);
  const int mi = static_cast<int>(m_in);
  const Rational one(1), two(2), four(4), eight(8), three_halves(3, 2);
  const Rational v0 = v1 + v2 + v3 + one;
  const Rational d2 = two * v2 + one;
  const Rational d3 = two * v3 + one;
  const Rational d1 = two * v1 + two * m - one;
  require_nonzero(d2, "2v2+1");
  require_nonzero(d3, "2v3+1");
  require_nonzero(d1, "2v1+2m-1");

  const Rational c = (four * k + two * v0 + one) * (two * k + v0);
  const Rational e = four * k + Rational(3) * v0 + two;
  const Rational w1 = k + v2 + v3 + three_halves - m;
  const Rational w2 = k + v2 + v3 + one - m;

  Rational r = two * (two * v1 + one + two * m) * (k + v1 + m) * (four * k + v0) *
               eval_F(mi + 1, k, v1, v2 + one, v3 + one);
  r -= four * (four * k + v0) * w1 * w2 * eval_F(mi, k, v1, v2 + one, v3 + one);
  r -= (two * v1 + m) * c * eval_F(mi + 1, k, v1 - one, v2 + one, v3 + one);
  r -= (two * k + two * v2 + one) * (two * k + two * v3 + one) / (d2 * d3) * m * c *
       eval_F(mi - 1, k, v1 + one, v2, v3);
  r += (two * k + two * v3 + one) / d3 * (two * v3 + one - m) * c * eval_F(mi, k, v1, v2 + one, v3);
  r += (two * k + two * v2 + one) / d2 * (two * v2 + one - m) * c * eval_F(mi, k, v1, v2, v3 + one);
  r += eight * m * k * (two * v1 + m) / (d2 * d3 * d1) * w1 * w2 * e * eval_F(mi - 1, k + one, v1, v2, v3);
  r -= four * k * (two * v2 + one - m) * (two * v3 + one - m) / (d2 * d3) * e * (k + v1 + m) *
       eval_F(mi, k + one, v1, v2, v3);
  return r;
}

}  // namespace b2v

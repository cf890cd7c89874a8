#include "b2v/linsolve.hpp"

#include <utility>

#include "b2v/errors.hpp"

namespace b2v {

namespace {

using IntRow = std::vector<mpz_class>;

IntRow integer_row(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  mpz_class scale = 1;
  for (const auto* row : {&a, &b}) {
    for (const Rational& v : *row) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get().get_den_mpz_t());
  }
  IntRow out;
  out.reserve(a.size() + b.size());
  for (const auto* row : {&a, &b}) {
    for (const Rational& v : *row) out.push_back(v.get().get_num() * (scale / v.get().get_den()));
  }
  return out;
}

}  // namespace

RationalMatrix solve_exact(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t m = a.size();
  if (m == 0 || b.size() != m) throw RangeError("solve_exact: shape mismatch");
  const std::size_t n = a.front().size();
  const std::size_t r = b.front().size();
  if (m < n) throw SingularSystem("underdetermined system");
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].size() != n || b[i].size() != r) throw RangeError("solve_exact: ragged matrix");
  }

  std::vector<IntRow> rows(m);
  for (std::size_t i = 0; i < m; ++i) rows[i] = integer_row(a[i], b[i]);
  const std::size_t width = n + r;

  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < m && rows[pivot][k] == 0) ++pivot;
    if (pivot == m) throw SingularSystem("coefficient matrix is rank deficient");
    std::swap(rows[k], rows[pivot]);
    const mpz_class& pk = rows[k][k];
    for (std::size_t i = k + 1; i < m; ++i) {
      const mpz_class lead = rows[i][k];
      for (std::size_t j = k + 1; j < width; ++j) {
        mpz_class v = rows[i][j] * pk - lead * rows[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        rows[i][j] = std::move(v);
      }
      rows[i][k] = 0;
    }
    prev = pk;
  }

  for (std::size_t i = n; i < m; ++i) {
    for (std::size_t j = n; j < width; ++j) {
      if (rows[i][j] != 0) throw SingularSystem("overdetermined system is inconsistent");
    }
  }

  RationalMatrix x(n, std::vector<Rational>(r));
  for (std::size_t c = 0; c < r; ++c) {
    for (std::size_t i = n; i-- > 0;) {
      Rational acc{mpz_class(rows[i][n + c])};
      for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(mpz_class(rows[i][j])) * x[j][c];
      x[i][c] = acc / Rational(mpz_class(rows[i][i]));
    }
  }
  return x;
}

}  // namespace b2v

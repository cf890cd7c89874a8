#pragma once

#include <utility>
#include <vector>

#include "b2v/rational.hpp"

namespace b2v {

/// Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.
Rational pochhammer(const Rational& a, unsigned k);

/// A terminating pFq(numerator; denominator; 1) summed for i = 0..term_count.
struct HyperParams {
  std::vector<Rational> numerator;
  std::vector<Rational> denominator;
  unsigned term_count = 0;
};

/// Exact value of the series.
///
/// Every denominator parameter d is checked over the whole range, i.e.
/// d + j != 0 for j < term_count, even when the numerator terminates the
/// sum earlier. Throws ZeroDenominatorTerm on a violation and
/// NotTerminating unless some numerator parameter equals -k with
/// 0 <= k <= term_count.
Rational terminating_series(const HyperParams& p);

/// Arguments of F(n; u, v1, v2, v3) =
///   4F3(-n/2, (1-n)/2, u, -u-v1-v2-v3; 1/2-v1-n, 1/2-v2, 1/2-v3; 1).
struct FArgs {
  int n = 0;
  Rational u, v1, v2, v3;
};

/// F as above; zero for n < 0.
Rational eval_F(const FArgs& args);
Rational eval_F(int n, const Rational& u, const Rational& v1, const Rational& v2, const Rational& v3);

/// LHS - RHS of the two 3F2 transformations of 3F2(-n, a, b; c, d; 1):
///   first:  (c+d-a-b)_n/(d)_n 3F2(-n, c-a, c-b; c, c-a-b+d)
///   second: (-1)^n (d-a)_n (d-b)_n/((c)_n (d)_n)
///           3F2(-n, a+b-n+1-c-d, 1-d-n; a-d+1-n, b-d+1-n)
std::pair<Rational, Rational> check_3f2_transforms(unsigned n, const Rational& a, const Rational& b,
                                                   const Rational& c, const Rational& d);

/// LHS - RHS of Whipple's transformation of a balanced terminating 4F3:
///   4F3(-n, a, b, c; d, e, f) =
///     (e-a)_n (f-a)_n/((e)_n (f)_n) 4F3(-n, a, d-b, d-c; d, e-b-c+d, f-b-c+d).
/// Throws NotBalanced unless d + e + f = a + b + c - n + 1.
Rational check_whipple(unsigned n, const Rational& a, const Rational& b, const Rational& c,
                       const Rational& d, const Rational& e, const Rational& f);

/// Residual of the three-term recurrence of F(n-1), F(n), F(n+1) in n
/// (u = kappa). Requires n >= 1.
Rational f_recurrence_residual(unsigned n, const Rational& kappa, const Rational& v1, const Rational& v2,
                               const Rational& v3);

/// Seven-term contiguity relation led by F(m; kappa, v1+1, v2, v3). m >= 1.
/// Throws DivisionByZero if 2v2-1, 2v3-1 or 2v1+2m-1 vanishes.
Rational contiguity1_residual(unsigned m, const Rational& kappa, const Rational& v1, const Rational& v2,
                              const Rational& v3);

/// Eight-term contiguity relation led by F(m+1; kappa, v1, v2+1, v3+1).
/// Throws DivisionByZero if 2v2+1, 2v3+1 or 2v1+2m-1 vanishes.
Rational contiguity2_residual(unsigned m, const Rational& kappa, const Rational& v1, const Rational& v2,
                              const Rational& v3);

}  // namespace b2v

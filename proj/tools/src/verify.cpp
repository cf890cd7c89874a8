#include "b2v_tools/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <regex>
#include <sstream>

#include "b2v/dunkl.hpp"
#include "b2v/errors.hpp"
#include "b2v/hyper.hpp"
#include "b2v/intertwine.hpp"
#include "b2v/moments.hpp"
#include "b2v/parallel.hpp"
#include "b2v/poly_json.hpp"
#include "b2v/quad.hpp"

namespace b2v::tools {

using nlohmann::ordered_json;

namespace {

// One unit of work; may produce several checked cases.
using CaseFn = std::function<std::vector<std::pair<bool, Failure>>()>;
using Outcome = std::vector<std::pair<bool, Failure>>;

Outcome single(bool ok, Failure f) { return Outcome{{ok, std::move(f)}}; }

Failure fail(std::string check, ordered_json inputs, std::string lhs, std::string rhs) {
  return Failure{std::move(check), std::move(inputs), std::move(lhs), std::move(rhs)};
}

void run_cases(Report& report, const std::vector<CaseFn>& cases, unsigned threads) {
  auto results = parallel_map<Outcome>(
      cases.size(),
      [&](std::size_t i) {
        try {
          return cases[i]();
        } catch (const std::exception& e) {
          return single(false, fail("exception", ordered_json::object(), std::string("error: ") + e.what(), ""));
        }
      },
      threads);
  for (auto& outcome : results) {
    for (auto& [ok, f] : outcome) {
      ++report.cases;
      if (!ok) report.failures.push_back(std::move(f));
    }
  }
}

std::vector<Kappa> exact_kappas(const SuiteOptions& o, const std::vector<std::string>& defaults) {
  std::vector<Kappa> out;
  for (const auto& s : o.kappas.empty() ? defaults : o.kappas) out.push_back(parse_exact_kappa(s));
  return out;
}

ordered_json kappa_list(const std::vector<Kappa>& ks) {
  ordered_json j = ordered_json::array();
  for (const auto& k : ks) j.push_back(k.value().str());
  return j;
}

ordered_json alpha_json(const MultiIndex4& a) { return ordered_json::array({a[0], a[1], a[2], a[3]}); }

Polynomial x_monomial(unsigned a, unsigned b) {
  return Polynomial::monomial(VarSet::X, Exponent{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b)});
}

std::vector<MultiIndex4> indices_up_to(unsigned max_total, bool parity_only) {
  std::vector<MultiIndex4> out;
  for (unsigned a1 = 0; a1 <= max_total; ++a1)
    for (unsigned a2 = 0; a1 + a2 <= max_total; ++a2)
      for (unsigned a3 = 0; a1 + a2 + a3 <= max_total; ++a3)
        for (unsigned a4 = 0; a1 + a2 + a3 + a4 <= max_total; ++a4) {
          MultiIndex4 a(a1, a2, a3, a4);
          if (!parity_only || a.parity_ok()) out.push_back(a);
        }
  return out;
}

// Random rationals p/q with |p| <= 8, 1 <= q <= 8, from a seeded engine.
class RationalSampler {
 public:
  RationalSampler(std::uint64_t seed, std::uint64_t stream) : engine_(seed * 1000003ULL + stream) {}
  Rational next(long max_num = 8, long max_den = 8) {
    std::uniform_int_distribution<long> num(-max_num, max_num), den(1, max_den);
    const long p = num(engine_);
    const long q = den(engine_);
    return Rational(p, q);
  }

 private:
  std::mt19937_64 engine_;
};

// Draws tuples until `wanted` of them evaluate without a parameter error.
// Each accepted tuple contributes one case.
template <class Eval>
Outcome sample_valid(unsigned wanted, RationalSampler& rng, unsigned arity, const std::string& check,
                     ordered_json fixed, Eval&& eval) {
  Outcome out;
  unsigned attempts = 0;
  while (out.size() < wanted) {
    if (++attempts > 200 * wanted + 1000) {
      out.emplace_back(false, fail(check, fixed, "could not draw enough valid parameter tuples", ""));
      break;
    }
    std::vector<Rational> params(arity);
    for (auto& p : params) p = rng.next();
    Rational residual;
    try {
      residual = eval(params);
    } catch (const ZeroDenominatorTerm&) {
      continue;
    } catch (const DivisionByZero&) {
      continue;
    }
    ordered_json inputs = fixed;
    ordered_json plist = ordered_json::array();
    for (const auto& p : params) plist.push_back(p.str());
    inputs["params"] = plist;
    out.emplace_back(residual.is_zero(), fail(check, inputs, residual.str(), "0"));
  }
  return out;
}

// ---------------------------------------------------------------- suites

Report suite_commute(const SuiteOptions& o) {
  Report r;
  r.suite = "commute";
  const auto ks = exact_kappas(o, {"0", "1", "-7/3", "5/2"});
  const unsigned deg = o.max_degree.value_or(8);
  r.grid = {{"kappas", kappa_list(ks)}, {"max_degree", deg}};
  std::vector<CaseFn> cases;
  for (const auto& k : ks) {
    for (unsigned n = 0; n <= deg; ++n) {
      for (unsigned j = 0; j <= n; ++j) {
        cases.push_back([k, n, j] {
          const Polynomial m = x_monomial(n - j, j);
          const Polynomial a = apply_T(1, k, apply_T(2, k, m));
          const Polynomial b = apply_T(2, k, apply_T(1, k, m));
          return single(a == b, fail("T1 T2 = T2 T1", {{"kappa", k.value().str()}, {"monomial", {n - j, j}}},
                                     dump_polynomial(a), dump_polynomial(b)));
        });
      }
    }
  }
  run_cases(r, cases, o.threads);
  return r;
}

Report suite_moments(const SuiteOptions& o) {
  Report r;
  r.suite = "moments";
  const auto ks = exact_kappas(o, {"1/3", "1", "5/2", "7"});
  const unsigned total = o.max_total.value_or(12);
  r.grid = {{"kappas", kappa_list(ks)}, {"max_total", total}};
  std::vector<CaseFn> cases;
  for (const auto& k : ks) {
    for (const auto& a : indices_up_to(total, true)) {
      cases.push_back([k, a] {
        const Rational d = s_double(a, k);
        const Rational s = s_single(a, k);
        return single(d == s, fail("s_double = s_single", {{"kappa", k.value().str()}, {"alpha", alpha_json(a)}},
                                   d.str(), s.str()));
      });
    }
  }
  run_cases(r, cases, o.threads);
  return r;
}

Report suite_symmetry(const SuiteOptions& o) {
  Report r;
  r.suite = "symmetry";
  const auto ks = exact_kappas(o, {"1/3", "1", "5/2", "7"});
  const unsigned total = o.max_total.value_or(10);
  const unsigned beta_max = o.max_entry.value_or(5);
  r.grid = {{"kappas", kappa_list(ks)}, {"max_total", total}, {"max_beta", beta_max}};
  std::vector<CaseFn> cases;
  const Rational half(1, 2);
  for (const auto& k : ks) {
    // Closed form of s'(2b1, 2b2, 2b3, 0).
    for (unsigned b1 = 0; b1 <= beta_max; ++b1) {
      for (unsigned b2 = 0; b2 <= beta_max; ++b2) {
        for (unsigned b3 = 0; b3 <= beta_max; ++b3) {
          cases.push_back([k, b1, b2, b3, half] {
            const Rational lhs = s_prime({2 * b1, 2 * b2, 2 * b3, 0}, k);
            Rational rhs(1);
            for (unsigned b : {b1, b2, b3}) rhs *= pochhammer(half, b) / pochhammer(k.value() + half, b);
            return single(lhs == rhs, fail("s'(2b,0) closed form",
                                           {{"kappa", k.value().str()}, {"beta", {b1, b2, b3}}}, lhs.str(),
                                           rhs.str()));
          });
        }
      }
    }
    // s' is symmetric under all permutations; walk sorted representatives.
    for (const auto& a : indices_up_to(total, true)) {
      if (!(a[0] <= a[1] && a[1] <= a[2] && a[2] <= a[3])) continue;
      cases.push_back([k, a] {
        Outcome out;
        const Rational ref = s_prime(a, k);
        std::array<unsigned, 4> p = a.a;
        do {
          const MultiIndex4 b(p[0], p[1], p[2], p[3]);
          const Rational v = s_prime(b, k);
          out.emplace_back(v == ref, fail("s' permutation symmetry",
                                          {{"kappa", k.value().str()}, {"alpha", alpha_json(a)},
                                           {"permuted", alpha_json(b)}},
                                          v.str(), ref.str()));
        } while (std::next_permutation(p.begin(), p.end()));
        return out;
      });
    }
    // s(a1,a2,a3,a4) = s(a2,a1,a4,a3) = s(a1,a3,a2,a4).
    for (const auto& a : indices_up_to(total, true)) {
      cases.push_back([k, a] {
        const Rational v = s_single(a, k);
        const Rational v1 = s_single({a[1], a[0], a[3], a[2]}, k);
        const Rational v2 = s_single({a[0], a[2], a[1], a[3]}, k);
        const ordered_json in = {{"kappa", k.value().str()}, {"alpha", alpha_json(a)}};
        return Outcome{{v == v1, fail("s(a2,a1,a4,a3) = s(a)", in, v1.str(), v.str())},
                       {v == v2, fail("s(a1,a3,a2,a4) = s(a)", in, v2.str(), v.str())}};
      });
    }
  }
  run_cases(r, cases, o.threads);
  return r;
}

Report suite_recurrence(const SuiteOptions& o) {
  Report r;
  r.suite = "recurrence";
  const auto ks = exact_kappas(o, {"1/3", "2/5", "1", "5/2", "3", "7"});
  const unsigned entry = o.max_entry.value_or(5);
  const unsigned samples = o.samples.value_or(120);
  r.grid = {{"kappas", kappa_list(ks)}, {"max_entry", entry}, {"F_tuples", samples}, {"F_max_n", 8},
            {"seed", o.seed}};
  std::vector<CaseFn> cases;
  for (const auto& k : ks) {
    cases.push_back([k, entry] {
      Outcome out;
      for (unsigned a1 = 1; a1 <= entry; ++a1)
        for (unsigned a2 = 0; a2 <= entry; ++a2)
          for (unsigned a3 = 0; a3 <= entry; ++a3)
            for (unsigned a4 = 1; a4 <= entry; ++a4) {
              const MultiIndex4 a(a1, a2, a3, a4);
              if (!a.parity_ok()) continue;
              const Rational res = recurrence_residual(a, k);
              out.emplace_back(res.is_zero(), fail("s' recurrence", {{"kappa", k.value().str()}, {"alpha", alpha_json(a)}},
                                                   res.str(), "0"));
            }
      return out;
    });
  }
  const std::uint64_t seed = o.seed;
  cases.push_back([samples, seed] {
    RationalSampler rng(seed, 11);
    return sample_valid(samples, rng, 4, "F three-term recurrence, n = 1..8", ordered_json::object(),
                        [](const std::vector<Rational>& p) {
                          // A tuple counts once; any nonzero residual is reported.
                          for (unsigned n = 1; n <= 8; ++n) {
                            const Rational res = f_recurrence_residual(n, p[0], p[1], p[2], p[3]);
                            if (!res.is_zero()) return res;
                          }
                          return Rational(0);
                        });
  });
  run_cases(r, cases, o.threads);
  return r;
}

Report suite_contiguity(const SuiteOptions& o) {
  Report r;
  r.suite = "contiguity";
  const unsigned samples = o.samples.value_or(60);
  r.grid = {{"first_m", "1..8"}, {"second_m", "0..8"}, {"tuples_per_m", samples}, {"seed", o.seed}};
  std::vector<CaseFn> cases;
  const std::uint64_t seed = o.seed;
  for (unsigned m = 1; m <= 8; ++m) {
    cases.push_back([m, samples, seed] {
      RationalSampler rng(seed, 100 + m);
      return sample_valid(samples, rng, 4, "first contiguity relation", {{"m", m}},
                          [m](const std::vector<Rational>& p) { return contiguity1_residual(m, p[0], p[1], p[2], p[3]); });
    });
  }
  for (unsigned m = 0; m <= 8; ++m) {
    cases.push_back([m, samples, seed] {
      RationalSampler rng(seed, 200 + m);
      return sample_valid(samples, rng, 4, "second contiguity relation", {{"m", m}},
                          [m](const std::vector<Rational>& p) { return contiguity2_residual(m, p[0], p[1], p[2], p[3]); });
    });
  }
  run_cases(r, cases, o.threads);
  return r;
}

Report suite_transforms(const SuiteOptions& o) {
  Report r;
  r.suite = "transforms";
  const unsigned samples = o.samples.value_or(120);
  r.grid = {{"n", "0..8"}, {"tuples_per_n", samples}, {"chu_vandermonde_n", "0..12"}, {"seed", o.seed}};
  std::vector<CaseFn> cases;
  const std::uint64_t seed = o.seed;
  for (unsigned n = 0; n <= 8; ++n) {
    cases.push_back([n, samples, seed] {
      RationalSampler rng(seed, 300 + n);
      Outcome out = sample_valid(samples, rng, 4, "3F2 transformation (first)", {{"n", n}},
                                 [n](const std::vector<Rational>& p) {
                                   return check_3f2_transforms(n, p[0], p[1], p[2], p[3]).first;
                                 });
      RationalSampler rng2(seed, 400 + n);
      Outcome b = sample_valid(samples, rng2, 4, "3F2 transformation (second)", {{"n", n}},
                               [n](const std::vector<Rational>& p) {
                                 return check_3f2_transforms(n, p[0], p[1], p[2], p[3]).second;
                               });
      out.insert(out.end(), b.begin(), b.end());
      RationalSampler rng3(seed, 500 + n);
      Outcome w = sample_valid(samples, rng3, 5, "Whipple transformation", {{"n", n}},
                               [n](const std::vector<Rational>& p) {
                                 const Rational f = p[0] + p[1] + p[2] - Rational(n) + Rational(1) - p[3] - p[4];
                                 return check_whipple(n, p[0], p[1], p[2], p[3], p[4], f);
                               });
      out.insert(out.end(), w.begin(), w.end());
      return out;
    });
  }
  for (unsigned n = 0; n <= 12; ++n) {
    cases.push_back([n, seed] {
      RationalSampler rng(seed, 600 + n);
      return sample_valid(50, rng, 2, "Chu-Vandermonde", {{"n", n}}, [n](const std::vector<Rational>& p) {
        const Rational& b = p[0];
        const Rational& c = p[1];
        const Rational lhs = terminating_series({{Rational(-static_cast<long>(n)), b}, {c}, n});
        const Rational den = pochhammer(c, n);
        if (den.is_zero()) throw ZeroDenominatorTerm("(c)_n = 0");
        return lhs - pochhammer(c - b, n) / den;
      });
    });
  }
  run_cases(r, cases, o.threads);
  return r;
}

Report suite_intertwine(const SuiteOptions& o) {
  Report r;
  r.suite = "intertwine";
  const auto ks = exact_kappas(o, {"1/3", "1", "5/2", "7"});
  const unsigned deg = o.max_degree.value_or(8);
  r.grid = {{"kappas", kappa_list(ks)}, {"max_degree", deg}};
  std::vector<CaseFn> cases;
  for (const auto& k : ks) {
    cases.push_back([k, deg] {
      Outcome out;
      const MomentFunctional mf(k);
      OracleV oracle(k);
      const ordered_json kj = k.value().str();
      // Formula images of all monomials, reused for V(d f).
      std::vector<std::vector<Polynomial>> v(deg + 1);
      for (unsigned n = 0; n <= deg; ++n)
        for (unsigned j = 0; j <= n; ++j) v[n].push_back(apply_V(x_monomial(n - j, j), mf));

      const Rational inv = (Rational(1) + Rational(4) * k.value()).inverse();
      out.emplace_back(v[0][0] == Polynomial::constant(VarSet::X, Rational(1)),
                       fail("V1 = 1", {{"kappa", kj}}, dump_polynomial(v[0][0]), "1"));
      if (deg >= 1) {
        out.emplace_back(v[1][0] == x_monomial(1, 0) * inv,
                         fail("V x1 = x1/(1+4k)", {{"kappa", kj}}, dump_polynomial(v[1][0]), inv.str()));
        out.emplace_back(v[1][1] == x_monomial(0, 1) * inv,
                         fail("V x2 = x2/(1+4k)", {{"kappa", kj}}, dump_polynomial(v[1][1]), inv.str()));
      }
      for (unsigned n = 0; n <= deg; ++n) {
        for (unsigned j = 0; j <= n; ++j) {
          const ordered_json in = {{"kappa", kj}, {"monomial", {n - j, j}}};
          const Polynomial& vf = v[n][j];
          const Polynomial& ov = oracle.monomial(n, j);
          out.emplace_back(vf == ov, fail("formula V = oracle V", in, dump_polynomial(vf), dump_polynomial(ov)));
          // T1 V f = V d1 f and T2 V f = V d2 f.
          Polynomial d1(VarSet::X), d2(VarSet::X);
          if (n > 0 && j < n) d1 = v[n - 1][j] * Rational(n - j);
          if (n > 0 && j > 0) d2 = v[n - 1][j - 1] * Rational(j);
          const Polynomial t1 = apply_T(1, k, vf);
          const Polynomial t2 = apply_T(2, k, vf);
          out.emplace_back(t1 == d1, fail("T1 V = V d1", in, dump_polynomial(t1), dump_polynomial(d1)));
          out.emplace_back(t2 == d2, fail("T2 V = V d2", in, dump_polynomial(t2), dump_polynomial(d2)));
        }
      }
      return out;
    });
  }
  run_cases(r, cases, o.threads);
  return r;
}

Report suite_condv(const SuiteOptions& o) {
  Report r;
  r.suite = "condv";
  const auto ks = exact_kappas(o, {"1/3", "1", "5/2"});
  const unsigned deg = o.max_degree.value_or(6);
  const unsigned odd_max = 3;
  r.grid = {{"kappas", kappa_list(ks)}, {"criterion_n", "0.." + std::to_string(deg)},
            {"odd_kernel_n", "0.." + std::to_string(odd_max)}};
  std::vector<CaseFn> cases;
  for (const auto& k : ks) {
    for (unsigned n = 0; n <= deg; ++n) {
      cases.push_back([k, n] {
        const Polynomial res = condV_residual(n, MomentFunctional(k));
        return single(res.is_zero(), fail("criterion", {{"kappa", k.value().str()}, {"n", n}}, dump_polynomial(res), "0"));
      });
    }
    for (unsigned n = 0; n <= odd_max; ++n) {
      cases.push_back([k, n] {
        const Polynomial res = oddeqn_residual(n, MomentFunctional(k));
        return single(res.is_zero(), fail("(4k+2n+1) K_{2n+1} = <x,y> K_{2n}", {{"kappa", k.value().str()}, {"n", n}},
                                          dump_polynomial(res), "0"));
      });
    }
  }
  run_cases(r, cases, o.threads);
  return r;
}

Report suite_big1(const SuiteOptions& o) {
  Report r;
  r.suite = "big1";
  const auto ks = exact_kappas(o, {"1/3", "1", "7/3"});
  const unsigned entry = o.max_entry.value_or(4);
  r.grid = {{"kappas", kappa_list(ks)}, {"max_entry", entry}, {"m", "1..min(2a2,2a3)"}};
  std::vector<CaseFn> cases;
  for (const auto& k : ks) {
    for (unsigned a1 = 0; a1 <= entry; ++a1)
      for (unsigned a2 = 0; a2 <= entry; ++a2)
        for (unsigned a3 = 0; a3 <= entry; ++a3) {
          cases.push_back([k, a1, a2, a3] {
            Outcome out;
            const ordered_json in = {{"kappa", k.value().str()}, {"a", {a1, a2, a3}}};
            const Rational odd = check_oddP_identity(a1, a2, a3, k);
            out.emplace_back(odd.is_zero(), fail("odd-degree identity", in, odd.str(), "0"));
            const Rational t0 = big1_term(0, a1, a2, a3, MomentFunctional(k));
            out.emplace_back(t0.is_zero(), fail("t_0 = 0", in, t0.str(), "0"));
            for (unsigned m = 1; m <= std::min(2 * a2, 2 * a3); ++m) {
              const Rational res = check_big1_sum(m, a1, a2, a3, k);
              ordered_json im = in;
              im["m"] = m;
              out.emplace_back(res.is_zero(), fail("odd-case partial sum", im, res.str(), "0"));
            }
            return out;
          });
        }
  }
  run_cases(r, cases, o.threads);
  return r;
}

Report suite_big2(const SuiteOptions& o) {
  Report r;
  r.suite = "big2";
  const auto ks = exact_kappas(o, {"1/3", "1", "7/3"});
  const unsigned entry = o.max_entry.value_or(4);
  const unsigned d4_max = 8;
  r.grid = {{"kappas", kappa_list(ks)}, {"max_entry", entry}, {"m", "0..min(2a2+1,2a3+1)"},
            {"d3_identity_max_degree", d4_max}};
  std::vector<CaseFn> cases;
  for (const auto& k : ks) {
    for (unsigned a1 = 0; a1 <= entry; ++a1)
      for (unsigned a2 = 0; a2 <= entry; ++a2)
        for (unsigned a3 = 0; a3 <= entry; ++a3) {
          cases.push_back([k, a1, a2, a3] {
            Outcome out;
            for (unsigned m = 0; m <= std::min(2 * a2 + 1, 2 * a3 + 1); ++m) {
              const Rational res = check_big2_sum(m, a1, a2, a3, k);
              out.emplace_back(res.is_zero(), fail("even-case partial sum",
                                                   {{"kappa", k.value().str()}, {"a", {a1, a2, a3}}, {"m", m}},
                                                   res.str(), "0"));
            }
            return out;
          });
        }
    cases.push_back([k, d4_max] {
      Outcome out;
      for (unsigned n = 0; n <= d4_max; n += 2)
        for (unsigned a = 0; a <= n; ++a)
          for (unsigned c = 0; c <= n; ++c) {
            const Rational res = d3_identity_residual(p_poly(a, n - a, c), k);
            out.emplace_back(res.is_zero(), fail("(8k+n) xi0(g3 P) = xi0(D3 P)",
                                                 {{"kappa", k.value().str()}, {"abc", {a, n - a, c}}}, res.str(), "0"));
          }
      return out;
    });
  }
  run_cases(r, cases, o.threads);
  return r;
}

Report suite_singular(const SuiteOptions& o) {
  Report r;
  r.suite = "singular";
  const unsigned deg = o.max_degree.value_or(6);
  const std::vector<std::string> singular = {"-1/2", "-1/4", "-3/4", "-5/4"};
  const unsigned random_count = o.samples.value_or(10);
  r.grid = {{"singular_kappas", singular}, {"random_regular_kappas", random_count}, {"max_degree", deg},
            {"seed", o.seed}};
  std::vector<CaseFn> cases;
  for (const auto& s : singular) {
    cases.push_back([s, deg] {
      const Kappa k = parse_exact_kappa(s);
      OracleV oracle(k);
      std::string outcome = "solved through degree " + std::to_string(deg);
      bool raised = false;
      try {
        for (unsigned n = 0; n <= deg; ++n) oracle.monomial(n, 0);
      } catch (const SingularSystem& e) {
        raised = true;
        outcome = e.what();
      }
      return single(raised, fail("oracle raises SingularSystem", {{"kappa", s}}, outcome, "SingularSystem"));
    });
  }
  RationalSampler rng(o.seed, 700);
  std::vector<Kappa> regular;
  while (regular.size() < random_count) {
    const Kappa k(rng.next(12, 12));
    if (!k.singular()) regular.push_back(k);
  }
  for (const auto& k : regular) {
    cases.push_back([k, deg] {
      OracleV oracle(k);
      std::string outcome = "solved";
      bool ok = true;
      try {
        for (unsigned n = 0; n <= deg; ++n) oracle.monomial(n, 0);
      } catch (const SingularSystem& e) {
        ok = false;
        outcome = e.what();
      }
      return single(ok, fail("oracle solves at regular kappa", {{"kappa", k.value().str()}}, outcome, "solved"));
    });
  }
  run_cases(r, cases, o.threads);
  return r;
}

// ----------------------------------------------------------- quadrature

bool close_rel(double num, double exact, double tol, double zero_tol) {
  if (exact == 0.0) return std::abs(num) <= zero_tol;
  return std::abs(num - exact) <= tol * std::abs(exact);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

Report suite_quad(const SuiteOptions& o) {
  Report r;
  r.suite = "quad";
  std::vector<DecimalKappa> ks;
  for (const auto& s : o.kappas.empty() ? std::vector<std::string>{"1.0", "1.7", "2.5"} : o.kappas) {
    ks.push_back(parse_decimal_kappa(s));
  }
  for (const auto& k : ks) {
    if (!(k.value > 0.5)) throw KappaOutOfRange("quadrature needs kappa > 1/2, got " + k.text);
  }
  const unsigned nodes = o.nodes.value_or(16);
  const unsigned moment_total = 8;
  const unsigned vint_degree = 6;
  const unsigned bessel_cutoff = 20;
  const DecimalKappa vint_kappa = parse_decimal_kappa("2.0");
  ordered_json kj = ordered_json::array();
  for (const auto& k : ks) kj.push_back(k.text);
  r.grid = {{"kappas", kj},
            {"nodes", nodes},
            {"moment_max_total", moment_total},
            {"vint_kappa", vint_kappa.text},
            {"vint_max_degree", vint_degree},
            {"bessel_cutoff", bessel_cutoff},
            {"tolerances",
             {{"moment_rel", 1e-6}, {"normalization_rel", 1e-8}, {"vint_rel", 1e-6}, {"bessel_rel", 1e-6},
              {"symmetry_abs", 1e-10}, {"zero_abs", 1e-12}}}};

  std::map<std::string, double> worst;
  auto track = [&worst](const std::string& key, double v) { worst[key] = std::max(worst[key], v); };
  std::vector<Outcome> outcomes;

  for (const auto& k : ks) {
    const Kappa exact_k(k.exact);
    const GridMoments grid(MuGrid::for_measure(k.value, nodes), moment_total);
    const double z = grid.raw(MultiIndex4());
    Outcome out;
    for (const auto& a : indices_up_to(moment_total, false)) {
      const double num = grid.raw(a) / z;
      const double ex = s_single(a, exact_k).to_double();
      if (ex != 0.0) track("moment_rel_error", std::abs(num - ex) / std::abs(ex));
      out.emplace_back(close_rel(num, ex, 1e-6, 1e-12),
                       fail("numeric moment", {{"kappa", k.text}, {"alpha", alpha_json(a)}}, fmt(num), fmt(ex)));
      for (const MultiIndex4& b : {MultiIndex4(a[1], a[0], a[3], a[2]), MultiIndex4(a[0], a[2], a[1], a[3])}) {
        const double nb = grid.raw(b) / z;
        out.emplace_back(std::abs(nb - num) <= 1e-10 * std::max(1.0, std::abs(num)),
                         fail("numeric moment symmetry", {{"kappa", k.text}, {"alpha", alpha_json(a)}, {"image", alpha_json(b)}},
                              fmt(nb), fmt(num)));
      }
    }
    const double c_num = 1.0 / z;
    const double c_gamma = normalizing_constant_gamma(k.value);
    track("normalization_rel_error", std::abs(c_num - c_gamma) / c_gamma);
    out.emplace_back(close_rel(c_num, c_gamma, 1e-8, 0.0),
                     fail("normalizing constant", {{"kappa", k.text}}, fmt(c_num), fmt(c_gamma)));

    // Bessel function against the truncated exact series.
    const std::vector<std::pair<std::array<double, 2>, std::array<double, 2>>> pts = {
        {{1.0, 0.0}, {1.0, 0.0}}, {{0.6, -0.8}, {0.3, 0.5}}, {{0.5, 0.5}, {-0.7, 0.2}}, {{0.0, 0.0}, {0.9, 0.1}}};
    for (const auto& [x, y] : pts) {
      const double num = numeric_bessel(x, y, k.value, nodes);
      const double ser = bessel_series(x, y, exact_k, bessel_cutoff);
      track("bessel_rel_error", std::abs(num - ser) / std::abs(ser));
      out.emplace_back(close_rel(num, ser, 1e-6, 0.0),
                       fail("Bessel quadrature vs series", {{"kappa", k.text}, {"x", x}, {"y", y}}, fmt(num), fmt(ser)));
      out.emplace_back(num > 0.0, fail("Bessel value positive", {{"kappa", k.text}, {"x", x}, {"y", y}}, fmt(num), "> 0"));
    }
    outcomes.push_back(std::move(out));
  }

  {
    Outcome out;
    const Kappa exact_k(vint_kappa.exact);
    const MomentFunctional mf(exact_k);
    const VintIntegrator vint(vint_kappa.value, nodes, vint_degree);
    const std::vector<std::array<double, 2>> points = {{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}, {0.3, -0.7}, {-0.6, 0.45}};
    for (unsigned n = 0; n <= vint_degree; ++n) {
      for (unsigned j = 0; j <= n; ++j) {
        const Polynomial f = x_monomial(n - j, j);
        const Polynomial vf = apply_V(f, mf);
        for (const auto& x : points) {
          const double num = vint.apply(f, x);
          const double ex = evaluate(vf, std::span<const double>(x.data(), 2));
          if (ex != 0.0) track("vint_rel_error", std::abs(num - ex) / std::abs(ex));
          out.emplace_back(close_rel(num, ex, 1e-6, 1e-10),
                           fail("integral representation of V", {{"kappa", vint_kappa.text}, {"monomial", {n - j, j}}, {"x", x}},
                                fmt(num), fmt(ex)));
        }
      }
    }
    // The combined kernel is not a positive density.
    double most_negative = 0.0;
    const double eps = 1e-3;
    for (double frac : {0.6, 0.75, 0.9}) {
      const double th = frac * std::numbers::pi;
      const double v = vint_density(vint_kappa.value, eps, eps, std::numbers::pi - eps, th, std::numbers::pi / 2,
                                    std::numbers::pi / 2);
      most_negative = std::min(most_negative, v);
    }
    r.metrics["vint_density_min"] = most_negative;
    out.emplace_back(most_negative < 0.0, fail("integral kernel takes a negative value", {{"kappa", vint_kappa.text}},
                                               fmt(most_negative), "< 0"));
    outcomes.push_back(std::move(out));
  }

  for (auto& out : outcomes) {
    for (auto& [ok, f] : out) {
      ++r.cases;
      if (!ok) r.failures.push_back(std::move(f));
    }
  }
  for (const auto& [key, v] : worst) r.metrics[key] = v;

  if (o.csv_path) {
    std::ofstream csv(*o.csv_path);
    if (!csv) throw ParseError("cannot open CSV output '" + *o.csv_path + "'");
    csv << "kappa,alpha,nodes,value,exact,abs_error\n";
    csv.precision(17);
    std::vector<unsigned> counts;
    for (unsigned n = 2; n <= nodes; n += 2) counts.push_back(n);
    for (const auto& k : ks) {
      for (const MultiIndex4& a : {MultiIndex4(2, 0, 0, 0), MultiIndex4(2, 2, 2, 2), MultiIndex4(4, 2, 0, 2),
                                   MultiIndex4(1, 1, 1, 1)}) {
        const double ex = s_single(a, Kappa(k.exact)).to_double();
        for (const auto& row : moment_convergence(a, k.value, ex, counts)) {
          csv << k.text << ',' << a[0] << ' ' << a[1] << ' ' << a[2] << ' ' << a[3] << ',' << row.nodes << ','
              << row.value << ',' << ex << ',' << row.abs_error << '\n';
        }
      }
    }
  }
  return r;
}

using SuiteFn = Report (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"commute", suite_commute},       {"moments", suite_moments},   {"symmetry", suite_symmetry},
      {"recurrence", suite_recurrence}, {"transforms", suite_transforms}, {"contiguity", suite_contiguity},
      {"intertwine", suite_intertwine}, {"condv", suite_condv},       {"big1", suite_big1},
      {"big2", suite_big2},             {"singular", suite_singular}, {"quad", suite_quad},
  };
  return table;
}

}  // namespace

Kappa parse_exact_kappa(const std::string& text) {
  if (text.find('.') != std::string::npos) {
    throw ParseError("exact commands take kappa as p/q, not a decimal: '" + text + "'");
  }
  return Kappa::parse(text);
}

DecimalKappa parse_decimal_kappa(const std::string& text) {
  static const std::regex pattern(R"(^([+-]?)(\d+)(?:\.(\d+))?$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw ParseError("quadrature commands take kappa as a decimal such as 1.7, got '" + text + "'");
  }
  const std::string digits = m[2].str() + m[3].str();
  std::string denom = "1" + std::string(m[3].length(), '0');
  const Rational exact = Rational::parse(m[1].str() + digits + "/" + denom);
  return DecimalKappa{text, exact.to_double(), exact};
}

ordered_json Report::to_json(bool with_timing) const {
  ordered_json j;
  j["suite"] = suite;
  j["grid"] = grid;
  j["cases"] = cases;
  j["failure_count"] = failures.size();
  ordered_json f = ordered_json::array();
  for (const auto& x : failures) {
    f.push_back({{"check", x.check}, {"inputs", x.inputs}, {"lhs", x.lhs}, {"rhs", x.rhs}});
  }
  j["failures"] = f;
  if (!metrics.empty()) j["metrics"] = metrics;
  if (with_timing) j["wall_seconds"] = wall_seconds;
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : suites()) n.push_back(name);
    return n;
  }();
  return names;
}

Report run_suite(const std::string& name, const SuiteOptions& options) {
  for (const auto& [n, fn] : suites()) {
    if (n == name) {
      const auto start = std::chrono::steady_clock::now();
      Report r = fn(options);
      r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return r;
    }
  }
  throw ParseError("unknown suite '" + name + "'");
}

}  // namespace b2v::tools

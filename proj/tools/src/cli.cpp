#include "b2v_tools/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "b2v/errors.hpp"
#include "b2v/intertwine.hpp"
#include "b2v/moments.hpp"
#include "b2v/poly_json.hpp"
#include "b2v_tools/verify.hpp"

namespace b2v::tools {

namespace {

constexpr const char* kSingularSet = "the singular set is kappa in -1/2-N0, -1/4-N0 or -3/4-N0";

MultiIndex4 parse_alpha(const std::string& text) {
  std::vector<unsigned> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 4) {
      throw ParseError("--alpha expects four non-negative integers a,b,c,d, got '" + text + "'");
    }
    parts.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  if (parts.size() != 4 || text.back() == ',') {
    throw ParseError("--alpha expects four non-negative integers a,b,c,d, got '" + text + "'");
  }
  return MultiIndex4(parts[0], parts[1], parts[2], parts[3]);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw ParseError("empty entry in list '" + text + "'");
    out.push_back(item);
  }
  if (out.empty()) throw ParseError("empty list");
  return out;
}

Polynomial read_input_polynomial(const std::string& path, const std::string& expr) {
  std::string text;
  if (!expr.empty()) {
    text = expr;
  } else if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read polynomial file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  Polynomial f = parse_polynomial(text);
  if (f.var_set() != VarSet::X) {
    throw ParseError("V acts on polynomials in vars \"X\", got \"" + std::string(var_set_name(f.var_set())) + "\"");
  }
  return f;
}

struct MomentArgs {
  std::string alpha;
  std::string kappa;
  std::string route = "single";
};

int cmd_moment(const MomentArgs& a, std::ostream& out) {
  const MultiIndex4 alpha = parse_alpha(a.alpha);
  const Kappa kappa = parse_exact_kappa(a.kappa);
  if (a.route == "single") {
    out << s_single(alpha, kappa) << '\n';
    return kExitOk;
  }
  if (a.route == "double") {
    out << s_double(alpha, kappa) << '\n';
    return kExitOk;
  }
  const Rational s = s_single(alpha, kappa);
  const Rational d = s_double(alpha, kappa);
  const bool same = s == d;
  out << s << (same ? " == " : " != ") << d << (same ? " OK" : " MISMATCH") << '\n';
  return same ? kExitOk : kExitFailure;
}

struct ApplyVArgs {
  std::string poly;
  std::string expr;
  std::string kappa;
  std::string route = "formula";
};

int cmd_apply_v(const ApplyVArgs& a, std::ostream& out, std::ostream& err) {
  if (a.poly.empty() == a.expr.empty()) throw ParseError("give exactly one of --poly and --expr");
  const Polynomial f = read_input_polynomial(a.poly, a.expr);
  const Kappa kappa = parse_exact_kappa(a.kappa);
  if (a.route == "formula") {
    out << dump_polynomial(apply_V(f, kappa)) << '\n';
    return kExitOk;
  }
  const Polynomial oracle = apply_V_oracle(f, kappa);
  if (a.route == "oracle") {
    out << dump_polynomial(oracle) << '\n';
    return kExitOk;
  }
  const Polynomial formula = apply_V(f, kappa);
  out << dump_polynomial(formula) << '\n';
  if (formula != oracle) {
    err << "formula and oracle disagree; oracle gives " << dump_polynomial(oracle) << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

struct KernelArgs {
  unsigned n = 0;
  std::string kappa;
  bool symmetrized = false;
};

int cmd_kernel(const KernelArgs& a, std::ostream& out) {
  const Kappa kappa = parse_exact_kappa(a.kappa);
  const Polynomial k = a.symmetrized ? kernel_K0(a.n, kappa) : kernel_K(a.n, kappa);
  out << dump_polynomial(k) << '\n';
  return kExitOk;
}

struct VerifyArgs {
  std::string suite;
  std::string kappa;
  std::string kappas;
  std::optional<unsigned> max_degree, max_total, max_entry, samples, nodes;
  std::uint64_t seed = 1;
  std::string csv;
  bool timing = false;
  unsigned threads = 0;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  SuiteOptions o;
  if (!a.kappa.empty() && !a.kappas.empty()) throw ParseError("give at most one of --kappa and --kappas");
  if (!a.kappa.empty()) o.kappas = {a.kappa};
  if (!a.kappas.empty()) o.kappas = split_list(a.kappas);
  o.max_degree = a.max_degree;
  o.max_total = a.max_total;
  o.max_entry = a.max_entry;
  o.samples = a.samples;
  o.nodes = a.nodes;
  o.seed = a.seed;
  o.threads = a.threads;
  if (!a.csv.empty()) {
    if (a.suite != "quad" && a.suite != "all") throw ParseError("--csv is only produced by the quad suite");
    o.csv_path = a.csv;
  }

  // Validate kappa strings before any work so that mixing formats is a usage error.
  if (a.suite == "quad") {
    for (const auto& k : o.kappas) parse_decimal_kappa(k);
  } else if (a.suite != "all") {
    for (const auto& k : o.kappas) parse_exact_kappa(k);
  }

  nlohmann::ordered_json payload;
  bool ok = true;
  double wall = 0.0;
  if (a.suite == "all") {
    if (!o.kappas.empty()) throw ParseError("--suite all uses each suite's own kappa grid; drop --kappa");
    payload["suite"] = "all";
    nlohmann::ordered_json reports = nlohmann::ordered_json::array();
    std::size_t failures = 0;
    for (const auto& name : suite_names()) {
      const Report r = run_suite(name, o);
      failures += r.failures.size();
      wall += r.wall_seconds;
      ok = ok && r.ok();
      reports.push_back(r.to_json(a.timing));
      if (a.timing) err << name << ": " << r.wall_seconds << " s\n";
    }
    payload["failure_count"] = failures;
    payload["reports"] = reports;
  } else {
    const Report r = run_suite(a.suite, o);
    wall = r.wall_seconds;
    ok = r.ok();
    payload = r.to_json(a.timing);
  }
  out << payload.dump(2) << '\n';
  if (a.timing) err << "wall time: " << wall << " s\n";
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact B2 Dunkl intertwining operator toolkit", "b2v"};
  app.require_subcommand(1);

  MomentArgs moment;
  auto* m = app.add_subcommand("moment", "Exact moment s(alpha) of the measure mu");
  m->add_option("--alpha", moment.alpha, "Multi-index a,b,c,d")->required();
  m->add_option("--kappa", moment.kappa, "Exact parameter p/q")->required();
  m->add_option("--route", moment.route, "single, double or both")
      ->check(CLI::IsMember({"single", "double", "both"}));

  ApplyVArgs apply;
  auto* v = app.add_subcommand("apply-v", "Apply the intertwining operator V to a polynomial");
  v->alias("apply_v");
  v->add_option("--poly", apply.poly, "JSON polynomial file, or - for stdin");
  v->add_option("--expr", apply.expr, "JSON polynomial given inline");
  v->add_option("--kappa", apply.kappa, "Exact parameter p/q")->required();
  v->add_option("--route", apply.route, "formula, oracle or both")
      ->check(CLI::IsMember({"formula", "oracle", "both"}));

  KernelArgs kernel;
  auto* k = app.add_subcommand("kernel", "Degree-n kernel K_n(x, y)");
  k->add_option("--n", kernel.n, "Degree")->required()->check(CLI::Range(0U, 64U));
  k->add_option("--kappa", kernel.kappa, "Exact parameter p/q")->required();
  k->add_flag("--symmetrized", kernel.symmetrized, "Average over the group (K0_n)");

  VerifyArgs verify;
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  auto* s = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
  s->add_option("--suite", verify.suite, "Suite name")->required()->check(CLI::IsMember(suite_choices));
  s->add_option("--kappa", verify.kappa, "Single kappa (p/q, or decimal for quad)");
  s->add_option("--kappas", verify.kappas, "Comma separated kappa list");
  s->add_option("--max-degree", verify.max_degree, "Polynomial degree bound");
  s->add_option("--max-total", verify.max_total, "Bound on |alpha|");
  s->add_option("--max-entry", verify.max_entry, "Bound on each index entry");
  s->add_option("--samples", verify.samples, "Random parameter tuples per grid point");
  s->add_option("--nodes", verify.nodes, "Quadrature nodes per dimension")->check(CLI::Range(2U, 64U));
  s->add_option("--seed", verify.seed, "Seed for random parameter tuples");
  s->add_option("--csv", verify.csv, "Write the quadrature convergence table here");
  s->add_flag("--timing", verify.timing, "Include wall time in the report");
  s->add_option("--threads", verify.threads, "Worker threads (0: all cores)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::string kappa_text;
  try {
    if (*m) return cmd_moment(moment, out);
    if (*v) {
      kappa_text = apply.kappa;
      return cmd_apply_v(apply, out, err);
    }
    if (*k) return cmd_kernel(kernel, out);
    if (*s) return cmd_verify(verify, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const KappaOutOfRange& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SingularSystem& e) {
    err << "error: " << e.what();
    if (!kappa_text.empty() && is_singular_kappa(Rational::parse(kappa_text))) err << "; " << kSingularSet;
    err << '\n';
    return kExitSingular;
  } catch (const SingularParameter& e) {
    err << "error: " << e.what() << '\n';
    return kExitSingular;
  } catch (const PoleInDegreeFactor& e) {
    err << "error: " << e.what() << '\n';
    return kExitSingular;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace b2v::tools

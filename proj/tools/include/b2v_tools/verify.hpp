#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "b2v/kappa.hpp"
#include "json.hpp"

namespace b2v::tools {

/// Parses an exact kappa "p/q"; decimals are rejected with ParseError.
Kappa parse_exact_kappa(const std::string& text);

/// A decimal kappa as used by the quadrature commands, with its exact
/// rational value for comparisons against the exact routes.
struct DecimalKappa {
  std::string text;
  double value = 0.0;
  Rational exact;
};
/// Parses "1", "1.7", "-0.25"; fractions are rejected with ParseError.
DecimalKappa parse_decimal_kappa(const std::string& text);

struct Failure {
  std::string check;
  nlohmann::ordered_json inputs;
  std::string lhs;
  std::string rhs;
};

struct Report {
  std::string suite;
  nlohmann::ordered_json grid = nlohmann::ordered_json::object();
  std::size_t cases = 0;
  std::vector<Failure> failures;
  nlohmann::ordered_json metrics = nlohmann::ordered_json::object();
  double wall_seconds = 0.0;

  bool ok() const { return failures.empty(); }
  /// Deterministic payload; wall time is only added when asked for.
  nlohmann::ordered_json to_json(bool with_timing = false) const;
};

struct SuiteOptions {
  std::vector<std::string> kappas;       // empty: suite defaults
  std::optional<unsigned> max_degree;    // commute, intertwine, condv, singular
  std::optional<unsigned> max_total;     // moments, symmetry
  std::optional<unsigned> max_entry;     // recurrence, big1, big2, symmetry (beta)
  std::optional<unsigned> samples;       // random tuples per parameter value
  std::optional<unsigned> nodes;         // quad
  std::uint64_t seed = 1;
  std::optional<std::string> csv_path;   // quad convergence table
  unsigned threads = 0;                  // 0: hardware concurrency
};

/// Suite names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// Runs one suite. Throws ParseError for malformed options.
Report run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace b2v::tools

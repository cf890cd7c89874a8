#include "b2v/poly_json.hpp"

#include <set>

#include "b2v/errors.hpp"

namespace b2v {

nlohmann::ordered_json to_json(const Polynomial& p) {
  const int n = num_vars(p.var_set());
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::ordered_json exps = nlohmann::ordered_json::array();
    for (int i = 0; i < n; ++i) exps.push_back(e[i]);
    terms.push_back(nlohmann::ordered_json::array({exps, c.str()}));
  }
  nlohmann::ordered_json j;
  j["vars"] = std::string(var_set_name(p.var_set()));
  j["terms"] = std::move(terms);
  return j;
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms")) {
    throw ParseError("polynomial JSON needs \"vars\" and \"terms\"");
  }
  if (!j["vars"].is_string()) throw ParseError("\"vars\" must be a string");
  const VarSet vs = parse_var_set(j["vars"].get<std::string>());
  const int n = num_vars(vs);
  const auto& terms = j["terms"];
  if (!terms.is_array()) throw ParseError("\"terms\" must be an array");

  Polynomial p(vs);
  std::set<Exponent> seen;
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_array() || !t[1].is_string()) {
      throw ParseError("each term must be [[exponents...], \"p/q\"]");
    }
    if (static_cast<int>(t[0].size()) != n) {
      throw ParseError("exponent vector must have " + std::to_string(n) + " entries");
    }
    Exponent e{};
    for (int i = 0; i < n; ++i) {
      const auto& v = t[0][i];
      if (!v.is_number_unsigned() || v.get<unsigned long>() > 0xFFFF) {
        throw ParseError("exponents must be small non-negative integers");
      }
      e[i] = static_cast<std::uint16_t>(v.get<unsigned long>());
    }
    if (!seen.insert(e).second) throw ParseError("repeated exponent in polynomial terms");
    p.add_term(e, Rational::parse(t[1].get<std::string>()));
  }
  return p;
}

std::string dump_polynomial(const Polynomial& p) { return to_json(p).dump(); }

Polynomial parse_polynomial(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return polynomial_from_json(j);
}

}  // namespace b2v

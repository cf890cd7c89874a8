#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "b2v/polynomial.hpp"

namespace b2v {

/// Canonical JSON form {"vars": "X", "terms": [[[e1, e2], "p/q"], ...]},
/// terms in the polynomial's internal (lexicographic exponent) order.
nlohmann::ordered_json to_json(const Polynomial& p);
/// Throws ParseError on malformed input, unknown variable sets, wrong
/// exponent arity, non-string coefficients or repeated exponents.
Polynomial polynomial_from_json(const nlohmann::json& j);

/// Compact single-line dump of to_json(p).
std::string dump_polynomial(const Polynomial& p);
Polynomial parse_polynomial(std::string_view text);

}  // namespace b2v

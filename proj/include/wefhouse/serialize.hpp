#pragma once

#include <json.hpp>

#include <string>
#include <string_view>

#include "wefhouse/model.hpp"

namespace wefhouse {

// Canonical JSON forms. Rationals are written as "p" or "p/q" strings; on input
// JSON integers and decimal strings ("0.5") are accepted as well.
//
//   instance:   {"weights": [...], "utilities": [[...]], "agent_labels": [...], "house_labels": [...]}
//   allocation: {"assignment": [0, 1]}
//   outcome:    {"assignment": [0, 1], "subsidy": ["0", "15"]}

Rational rational_from_json(const nlohmann::json& j);
nlohmann::json rational_to_json(const Rational& r);

/// Validates untyped instance data; throws Error with the violated invariant.
Instance validate_instance(const nlohmann::json& raw);

nlohmann::json instance_to_json(const Instance& inst);
std::string serialize_instance(const Instance& inst);
Instance parse_instance(std::string_view text);

nlohmann::json allocation_to_json(const Allocation& a);
Allocation allocation_from_json(const nlohmann::json& j);

nlohmann::json outcome_to_json(const Outcome& out);
Outcome outcome_from_json(const nlohmann::json& j);

/// Parses JSON text, rethrowing syntax errors as Error(Parse).
nlohmann::json parse_json(std::string_view text);

}  // namespace wefhouse

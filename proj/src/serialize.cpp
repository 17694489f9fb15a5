#include "wefhouse/serialize.hpp"

#include "wefhouse/error.hpp"

namespace wefhouse {

using nlohmann::json;

namespace {

const json& require(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw Error(ErrorCode::DimensionMismatch, std::string("missing field '") + key + "'");
  }
  return obj.at(key);
}

const json& require_array(const json& obj, const char* key) {
  const json& value = require(obj, key);
  if (!value.is_array()) throw Error(ErrorCode::DimensionMismatch, std::string("field '") + key + "' is not an array");
  return value;
}

std::vector<std::string> labels_from_json(const json& raw, const char* key) {
  std::vector<std::string> out;
  if (!raw.contains(key)) return out;
  for (const auto& item : require_array(raw, key)) {
    if (!item.is_string()) throw Error(ErrorCode::Parse, std::string("label in '") + key + "' is not a string");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::vector<HouseIndex> indices_from_json(const json& arr) {
  std::vector<HouseIndex> out;
  for (const auto& item : arr) {
    if (!item.is_number_integer()) throw Error(ErrorCode::InvalidAllocation, "assignment entries must be integers");
    if (item.get<long long>() < 0) throw Error(ErrorCode::InvalidAllocation, "negative house index");
    out.push_back(item.get<HouseIndex>());
  }
  return out;
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rational(j.get<unsigned long long>()) : Rational(j.get<long long>());
  }
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw Error(ErrorCode::MalformedNumber,
              "expected an integer or a rational string, got " + j.dump() + " (quote decimals to keep them exact)");
}

json rational_to_json(const Rational& r) { return r.to_string(); }

Instance validate_instance(const json& raw) {
  if (!raw.is_object()) throw Error(ErrorCode::Parse, "instance must be a JSON object");
  std::vector<Rational> weights;
  for (const auto& w : require_array(raw, "weights")) weights.push_back(rational_from_json(w));

  std::vector<std::vector<Rational>> utilities;
  for (const auto& row : require_array(raw, "utilities")) {
    if (!row.is_array()) throw Error(ErrorCode::DimensionMismatch, "utility rows must be arrays");
    auto& out = utilities.emplace_back();
    for (const auto& v : row) out.push_back(rational_from_json(v));
  }
  return Instance::create(std::move(weights), std::move(utilities), labels_from_json(raw, "agent_labels"),
                          labels_from_json(raw, "house_labels"));
}

json instance_to_json(const Instance& inst) {
  json weights = json::array();
  for (const auto& w : inst.weights()) weights.push_back(rational_to_json(w));
  json utilities = json::array();
  for (AgentIndex i = 0; i < inst.agent_count(); ++i) {
    json row = json::array();
    for (const auto& v : inst.utility_row(i)) row.push_back(rational_to_json(v));
    utilities.push_back(std::move(row));
  }
  json out = json::object();
  out["weights"] = std::move(weights);
  out["utilities"] = std::move(utilities);
  out["agent_labels"] = inst.agent_labels();
  out["house_labels"] = inst.house_labels();
  return out;
}

std::string serialize_instance(const Instance& inst) { return instance_to_json(inst).dump(2) + "\n"; }

Instance parse_instance(std::string_view text) { return validate_instance(parse_json(text)); }

json allocation_to_json(const Allocation& a) { return json{{"assignment", a.houses()}}; }

Allocation allocation_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, "allocation must be a JSON object");
  const json& arr = require(j, "assignment");
  if (!arr.is_array()) throw Error(ErrorCode::InvalidAllocation, "'assignment' is not an array");
  return Allocation(indices_from_json(arr));
}

json outcome_to_json(const Outcome& out) {
  json j = allocation_to_json(out.allocation);
  json subsidy = json::array();
  for (const auto& p : out.subsidy.payments()) subsidy.push_back(rational_to_json(p));
  j["subsidy"] = std::move(subsidy);
  return j;
}

Outcome outcome_from_json(const json& j) {
  Allocation a = allocation_from_json(j);
  std::vector<Rational> payments;
  for (const auto& p : require_array(j, "subsidy")) payments.push_back(rational_from_json(p));
  return Outcome{std::move(a), SubsidyVector(std::move(payments))};
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

}  // namespace wefhouse

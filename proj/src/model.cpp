#include "wefhouse/model.hpp"

#include <algorithm>
#include <iterator>
#include <optional>

#include "wefhouse/error.hpp"

namespace wefhouse {

Instance Instance::create(std::vector<Rational> weights, std::vector<std::vector<Rational>> utilities,
                          std::vector<std::string> agent_labels, std::vector<std::string> house_labels) {
  const std::size_t n = weights.size();
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "instance needs at least one agent");
  if (utilities.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(n) + " utility rows, got " +
                                                  std::to_string(utilities.size()));
  }
  const std::size_t m = utilities.front().size();
  for (std::size_t i = 0; i < n; ++i) {
    if (utilities[i].size() != m) {
      throw Error(ErrorCode::DimensionMismatch, "utility row " + std::to_string(i) + " has " +
                                                    std::to_string(utilities[i].size()) + " entries, expected " +
                                                    std::to_string(m));
    }
  }
  if (m < n) {
    throw Error(ErrorCode::TooFewHouses,
                std::to_string(m) + " houses for " + std::to_string(n) + " agents");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!weights[i].is_positive()) {
      throw Error(ErrorCode::NonPositiveWeight, "weight of agent " + std::to_string(i) + " is " + weights[i].to_string());
    }
    for (std::size_t h = 0; h < m; ++h) {
      if (utilities[i][h].is_negative()) {
        throw Error(ErrorCode::NegativeUtility, "utility of agent " + std::to_string(i) + " for house " +
                                                    std::to_string(h) + " is " + utilities[i][h].to_string());
      }
    }
  }
  if (agent_labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) agent_labels.push_back("a" + std::to_string(i + 1));
  }
  if (house_labels.empty()) {
    for (std::size_t h = 0; h < m; ++h) house_labels.push_back("h" + std::to_string(h + 1));
  }
  if (agent_labels.size() != n || house_labels.size() != m) {
    throw Error(ErrorCode::DimensionMismatch, "label count does not match instance dimensions");
  }

  Instance inst;
  inst.weights_ = std::move(weights);
  inst.house_count_ = m;
  inst.utilities_.reserve(n * m);
  for (auto& row : utilities) {
    std::move(row.begin(), row.end(), std::back_inserter(inst.utilities_));
  }
  inst.agent_labels_ = std::move(agent_labels);
  inst.house_labels_ = std::move(house_labels);
  return inst;
}

SubsidyVector::SubsidyVector(std::vector<Rational> payments) : payments_(std::move(payments)) {
  for (std::size_t i = 0; i < payments_.size(); ++i) {
    if (payments_[i].is_negative()) {
      throw Error(ErrorCode::NegativeSubsidy,
                  "subsidy of agent " + std::to_string(i) + " is " + payments_[i].to_string());
    }
  }
}

Rational SubsidyVector::total() const {
  Rational sum;
  for (const auto& p : payments_) sum += p;
  return sum;
}

void validate_allocation(const Instance& inst, const Allocation& a) {
  if (a.size() != inst.agent_count()) {
    throw Error(ErrorCode::InvalidAllocation, "allocation has " + std::to_string(a.size()) + " entries for " +
                                                  std::to_string(inst.agent_count()) + " agents");
  }
  std::vector<char> used(inst.house_count(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const HouseIndex h = a[i];
    if (h >= inst.house_count()) {
      throw Error(ErrorCode::InvalidAllocation, "house index " + std::to_string(h) + " out of range");
    }
    if (used[h]) {
      throw Error(ErrorCode::InvalidAllocation, "house " + std::to_string(h) + " assigned twice");
    }
    used[h] = 1;
  }
}

void validate_outcome(const Instance& inst, const Outcome& out) {
  validate_allocation(inst, out.allocation);
  if (out.subsidy.size() != out.allocation.size()) {
    throw Error(ErrorCode::DimensionMismatch, "subsidy length differs from allocation length");
  }
}

Rational weighted_view(const Instance& inst, const Outcome& out, AgentIndex viewer, AgentIndex owner) {
  return (inst.utility(viewer, out.allocation[owner]) + out.subsidy[owner]) / inst.weight(owner);
}

bool is_wef_allocation(const Instance& inst, const Allocation& a) {
  validate_allocation(inst, a);
  const std::size_t n = inst.agent_count();
  for (AgentIndex i = 0; i < n; ++i) {
    const Rational own = inst.utility(i, a[i]) / inst.weight(i);
    for (AgentIndex j = 0; j < n; ++j) {
      if (j != i && inst.utility(i, a[j]) / inst.weight(j) > own) return false;
    }
  }
  return true;
}

bool is_wef_outcome(const Instance& inst, const Outcome& out) {
  validate_outcome(inst, out);
  const std::size_t n = inst.agent_count();
  for (AgentIndex i = 0; i < n; ++i) {
    const Rational own = weighted_view(inst, out, i, i);
    for (AgentIndex j = 0; j < n; ++j) {
      if (j != i && weighted_view(inst, out, i, j) > own) return false;
    }
  }
  return true;
}

bool pareto_dominates(const Instance& inst, const Allocation& b, const Allocation& a) {
  bool strict = false;
  for (AgentIndex i = 0; i < inst.agent_count(); ++i) {
    const auto& vb = inst.utility(i, b[i]);
    const auto& va = inst.utility(i, a[i]);
    if (vb < va) return false;
    if (vb > va) strict = true;
  }
  return strict;
}

namespace {

Instance rescale(const Instance& inst, const Rational& factor, std::optional<AgentIndex> only) {
  std::vector<std::vector<Rational>> rows(inst.agent_count());
  for (AgentIndex i = 0; i < inst.agent_count(); ++i) {
    for (const auto& v : inst.utility_row(i)) {
      rows[i].push_back(!only || *only == i ? v * factor : v);
    }
  }
  return Instance::create(inst.weights(), std::move(rows), inst.agent_labels(), inst.house_labels());
}

}  // namespace

Instance scale_utilities(const Instance& inst, const Rational& factor) { return rescale(inst, factor, std::nullopt); }

Instance scale_agent_utilities(const Instance& inst, AgentIndex i, const Rational& factor) {
  return rescale(inst, factor, i);
}

bool has_equal_weights(const Instance& inst) {
  const auto& w = inst.weights();
  return std::all_of(w.begin(), w.end(), [&](const Rational& x) { return x == w.front(); });
}

bool has_identical_utilities(const Instance& inst) {
  const auto first = inst.utility_row(0);
  for (AgentIndex i = 1; i < inst.agent_count(); ++i) {
    const auto row = inst.utility_row(i);
    if (!std::equal(row.begin(), row.end(), first.begin())) return false;
  }
  return true;
}

}  // namespace wefhouse

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wefhouse/rational.hpp"

namespace wefhouse {

using AgentIndex = std::size_t;
using HouseIndex = std::size_t;

/// A weighted house allocation instance: n agents with positive weights,
/// m >= n houses, and a non-negative utility for every (agent, house) pair.
/// Immutable once built; identity is by index, labels are display-only.
class Instance {
 public:
  /// Validates every invariant and throws Error on the first violation.
  /// Empty label vectors are replaced by defaults ("a1".., "h1"..).
  static Instance create(std::vector<Rational> weights, std::vector<std::vector<Rational>> utilities,
                         std::vector<std::string> agent_labels = {},
                         std::vector<std::string> house_labels = {});

  std::size_t agent_count() const { return weights_.size(); }
  std::size_t house_count() const { return house_count_; }

  const Rational& weight(AgentIndex i) const { return weights_[i]; }
  const Rational& utility(AgentIndex i, HouseIndex h) const { return utilities_[i * house_count_ + h]; }
  std::span<const Rational> utility_row(AgentIndex i) const {
    return {utilities_.data() + i * house_count_, house_count_};
  }
  const std::vector<Rational>& weights() const { return weights_; }

  const std::vector<std::string>& agent_labels() const { return agent_labels_; }
  const std::vector<std::string>& house_labels() const { return house_labels_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Instance() = default;

  std::vector<Rational> weights_;
  std::size_t house_count_ = 0;
  std::vector<Rational> utilities_;  // row-major n x m
  std::vector<std::string> agent_labels_;
  std::vector<std::string> house_labels_;
};

/// Injective assignment of one house per agent.
class Allocation {
 public:
  Allocation() = default;
  explicit Allocation(std::vector<HouseIndex> houses) : houses_(std::move(houses)) {}

  std::size_t size() const { return houses_.size(); }
  HouseIndex operator[](AgentIndex i) const { return houses_[i]; }
  const std::vector<HouseIndex>& houses() const { return houses_; }

  friend bool operator==(const Allocation&, const Allocation&) = default;
  friend auto operator<=>(const Allocation&, const Allocation&) = default;

 private:
  std::vector<HouseIndex> houses_;
};

/// Non-negative payment per agent. Throws Error(NegativeSubsidy) on construction
/// when any entry is negative.
class SubsidyVector {
 public:
  SubsidyVector() = default;
  explicit SubsidyVector(std::vector<Rational> payments);
  static SubsidyVector zeros(std::size_t n) { return SubsidyVector(std::vector<Rational>(n)); }

  std::size_t size() const { return payments_.size(); }
  const Rational& operator[](AgentIndex i) const { return payments_[i]; }
  const std::vector<Rational>& payments() const { return payments_; }
  Rational total() const;

  friend bool operator==(const SubsidyVector&, const SubsidyVector&) = default;

 private:
  std::vector<Rational> payments_;
};

struct Outcome {
  Allocation allocation;
  SubsidyVector subsidy;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

/// Throws Error(InvalidAllocation) unless `a` assigns n distinct in-range houses.
void validate_allocation(const Instance& inst, const Allocation& a);

/// Additionally checks that the subsidy vector has one entry per agent.
void validate_outcome(const Instance& inst, const Outcome& out);

/// v_i(A_i) / w_i >= v_i(A_j) / w_j for every pair of agents.
bool is_wef_allocation(const Instance& inst, const Allocation& a);

/// (v_i(A_i) + p_i) / w_i >= (v_i(A_j) + p_j) / w_j for every pair of agents.
bool is_wef_outcome(const Instance& inst, const Outcome& out);

/// Weighted utility agent i assigns to the bundle of agent j, subsidy included.
Rational weighted_view(const Instance& inst, const Outcome& out, AgentIndex viewer, AgentIndex owner);

/// True when `b` gives every agent at least as much utility as `a` and some
/// agent strictly more.
bool pareto_dominates(const Instance& inst, const Allocation& b, const Allocation& a);

/// Returns a copy of `inst` with every utility multiplied by `factor` (> 0).
Instance scale_utilities(const Instance& inst, const Rational& factor);

/// Returns a copy of `inst` with only agent `i`'s utilities multiplied by `factor` (> 0).
Instance scale_agent_utilities(const Instance& inst, AgentIndex i, const Rational& factor);

bool has_equal_weights(const Instance& inst);
bool has_identical_utilities(const Instance& inst);

}  // namespace wefhouse

#include "wefhouse/special_cases.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "assignment.hpp"
#include "wefhouse/envy_graph.hpp"
#include "wefhouse/error.hpp"

namespace wefhouse {

namespace {

std::vector<Rational> row_copy(const Instance& inst, AgentIndex i) {
  const auto row = inst.utility_row(i);
  return {row.begin(), row.end()};
}

bool row_equals(const Instance& inst, AgentIndex i, const std::vector<Rational>& row) {
  const auto r = inst.utility_row(i);
  return r.size() == row.size() && std::equal(r.begin(), r.end(), row.begin());
}

}  // namespace

Outcome solve_identical(const Instance& inst) {
  if (!has_identical_utilities(inst)) {
    throw Error(ErrorCode::NotIdenticalUtilities, "agents do not share one utility row");
  }
  const std::size_t n = inst.agent_count();
  const auto v = inst.utility_row(0);

  std::vector<HouseIndex> houses(inst.house_count());
  std::iota(houses.begin(), houses.end(), HouseIndex{0});
  std::stable_sort(houses.begin(), houses.end(), [&](HouseIndex a, HouseIndex b) { return v[a] > v[b]; });

  std::vector<AgentIndex> agents(n);
  std::iota(agents.begin(), agents.end(), AgentIndex{0});
  std::stable_sort(agents.begin(), agents.end(),
                   [&](AgentIndex a, AgentIndex b) { return inst.weight(a) > inst.weight(b); });

  std::vector<HouseIndex> assignment(n);
  for (std::size_t k = 0; k < n; ++k) assignment[agents[k]] = houses[k];

  AgentIndex richest = 0;
  Rational best = v[assignment[0]] / inst.weight(0);
  for (AgentIndex i = 1; i < n; ++i) {
    Rational value = v[assignment[i]] / inst.weight(i);
    if (value > best) {
      best = std::move(value);
      richest = i;
    }
  }

  std::vector<Rational> payments(n);
  for (AgentIndex j = 0; j < n; ++j) {
    if (j != richest) payments[j] = inst.weight(j) * best - v[assignment[j]];
  }
  return Outcome{Allocation(std::move(assignment)), SubsidyVector(std::move(payments))};
}

std::optional<TwoTypePartition> detect_two_types(const Instance& inst) {
  TwoTypePartition part;
  part.large_weight = inst.weight(0);
  part.large_row = row_copy(inst, 0);
  bool have_small = false;
  for (AgentIndex i = 0; i < inst.agent_count(); ++i) {
    if (inst.weight(i) == part.large_weight && row_equals(inst, i, part.large_row)) {
      part.large.push_back(i);
    } else if (!have_small) {
      have_small = true;
      part.small_weight = inst.weight(i);
      part.small_row = row_copy(inst, i);
      part.small.push_back(i);
    } else if (inst.weight(i) == part.small_weight && row_equals(inst, i, part.small_row)) {
      part.small.push_back(i);
    } else {
      return std::nullopt;
    }
  }
  if (!have_small) return std::nullopt;
  return part;
}

TwoTypePartition swap_labels(const TwoTypePartition& part) {
  return TwoTypePartition{part.small, part.large, part.small_weight, part.large_weight, part.small_row, part.large_row};
}

namespace {

void check_partition(const Instance& inst, const TwoTypePartition& part) {
  const std::size_t n = inst.agent_count();
  std::vector<int> seen(n, 0);
  auto check_group = [&](const std::vector<AgentIndex>& group, const Rational& weight,
                         const std::vector<Rational>& row, const char* name) {
    if (!group.empty() && row.size() != inst.house_count()) {
      throw Error(ErrorCode::InconsistentPartition, std::string(name) + " utility row has wrong length");
    }
    for (AgentIndex i : group) {
      if (i >= n) throw Error(ErrorCode::InconsistentPartition, "agent index out of range");
      if (seen[i]++) throw Error(ErrorCode::InconsistentPartition, "agent " + std::to_string(i) + " listed twice");
      if (inst.weight(i) != weight || !row_equals(inst, i, row)) {
        throw Error(ErrorCode::InconsistentPartition,
                    "agent " + std::to_string(i) + " does not match the " + name + " type");
      }
    }
  };
  check_group(part.large, part.large_weight, part.large_row, "large");
  check_group(part.small, part.small_weight, part.small_row, "small");
  if (std::any_of(seen.begin(), seen.end(), [](int s) { return s == 0; })) {
    throw Error(ErrorCode::InconsistentPartition, "partition does not cover every agent");
  }
}

}  // namespace

std::optional<Allocation> solve_two_types(const Instance& inst, const TwoTypePartition& part) {
  check_partition(inst, part);
  if (part.large.empty() || part.small.empty()) return solve_identical(inst).allocation;

  const std::size_t m = inst.house_count();
  const std::size_t n_large = part.large.size();
  const std::size_t n_small = part.small.size();

  std::vector<Rational> diff(m);
  for (HouseIndex h = 0; h < m; ++h) diff[h] = part.large_row[h] - part.small_row[h];
  std::vector<HouseIndex> order(m);
  std::iota(order.begin(), order.end(), HouseIndex{0});
  std::stable_sort(order.begin(), order.end(), [&](HouseIndex a, HouseIndex b) { return diff[a] > diff[b]; });

  const Rational& weakest_large = diff[order[n_large - 1]];
  const Rational& strongest_small = diff[order[m - n_small]];
  if (weakest_large / part.large_weight < strongest_small / part.small_weight) return std::nullopt;

  std::vector<HouseIndex> assignment(inst.agent_count());
  for (std::size_t k = 0; k < n_large; ++k) assignment[part.large[k]] = order[k];
  for (std::size_t k = 0; k < n_small; ++k) assignment[part.small[k]] = order[m - n_small + k];
  return Allocation(std::move(assignment));
}

std::optional<Rational> bivalued_epsilon(const Instance& inst) {
  std::optional<Rational> low;
  const Rational one(1);
  for (AgentIndex i = 0; i < inst.agent_count(); ++i) {
    for (const auto& value : inst.utility_row(i)) {
      if (value == one) continue;
      if (value > one) return std::nullopt;
      if (!low) {
        low = value;
      } else if (*low != value) {
        return std::nullopt;
      }
    }
  }
  return low.value_or(Rational(0));
}

BipartiteGraph representing_graph(const Instance& inst) {
  BipartiteGraph g(inst.agent_count(), inst.house_count());
  const Rational one(1);
  for (AgentIndex i = 0; i < inst.agent_count(); ++i) {
    for (HouseIndex h = 0; h < inst.house_count(); ++h) {
      if (inst.utility(i, h) == one) g.add_edge(i, h);
    }
  }
  return g;
}

namespace {

// Branches agent by agent (match to each free neighbour in ascending order,
// then leave unmatched), keeping only branches whose remainder can still
// reach the target size. Every leaf is a distinct maximum matching.
class MaximumMatchingEnumerator {
 public:
  MaximumMatchingEnumerator(const BipartiteGraph& g, std::size_t cap,
                            const std::function<bool(const Matching&)>& visit)
      : g_(g), cap_(cap), visit_(visit), house_free_(g.house_count(), 1) {
    current_.agent_to_house.assign(g.agent_count(), kUnmatched);
    current_.house_to_agent.assign(g.house_count(), kUnmatched);
  }

  MatchingEnumeration run() {
    const std::size_t target = maximum_matching(g_).size;
    descend(0, target);
    return result_;
  }

 private:
  // Max matching size among agents >= `from` using free houses.
  std::size_t reachable(AgentIndex from) const {
    std::vector<char> agents(g_.agent_count(), 0);
    for (AgentIndex i = from; i < g_.agent_count(); ++i) agents[i] = 1;
    return maximum_matching(g_, agents, house_free_).size;
  }

  bool descend(AgentIndex agent, std::size_t needed) {
    if (agent == g_.agent_count()) {
      if (needed != 0) return true;
      if (result_.count >= cap_) {
        result_.truncated = true;
        return false;
      }
      ++result_.count;
      if (!visit_(current_)) {
        result_.truncated = true;
        return false;
      }
      return true;
    }
    if (needed > 0) {
      for (HouseIndex h : g_.neighbors(agent)) {
        if (!house_free_[h]) continue;
        house_free_[h] = 0;
        if (reachable(agent + 1) >= needed - 1) {
          current_.agent_to_house[agent] = h;
          current_.house_to_agent[h] = agent;
          ++current_.size;
          const bool go_on = descend(agent + 1, needed - 1);
          --current_.size;
          current_.agent_to_house[agent] = kUnmatched;
          current_.house_to_agent[h] = kUnmatched;
          house_free_[h] = 1;
          if (!go_on) return false;
          continue;
        }
        house_free_[h] = 1;
      }
    }
    if (reachable(agent + 1) >= needed) return descend(agent + 1, needed);
    return true;
  }

  const BipartiteGraph& g_;
  std::size_t cap_;
  const std::function<bool(const Matching&)>& visit_;
  std::vector<char> house_free_;
  Matching current_;
  MatchingEnumeration result_;
};

}  // namespace

MatchingEnumeration enumerate_maximum_matchings(const BipartiteGraph& g, std::size_t cap,
                                                const std::function<bool(const Matching&)>& visit) {
  return MaximumMatchingEnumerator(g, cap, visit).run();
}

BivaluedResult solve_bivalued(const Instance& inst, const BivaluedLimits& limits) {
  if (inst.house_count() != inst.agent_count()) {
    throw Error(ErrorCode::NotSquare, "bi-valued solver needs m = n");
  }
  const auto epsilon = bivalued_epsilon(inst);
  if (!epsilon) throw Error(ErrorCode::NotBivalued, "utilities are not drawn from {eps, 1} with 0 <= eps < 1");

  BivaluedResult result;
  result.epsilon = *epsilon;
  bool budget_exhausted = false;
  const BipartiteGraph g = representing_graph(inst);

  const auto scan = enumerate_maximum_matchings(g, limits.max_matchings, [&](const Matching& matching) {
    ++result.matchings_examined;
    std::vector<AgentIndex> free_agents;
    std::vector<HouseIndex> free_houses;
    for (AgentIndex i = 0; i < inst.agent_count(); ++i) {
      if (matching.agent_to_house[i] == kUnmatched) free_agents.push_back(i);
    }
    for (HouseIndex h = 0; h < inst.house_count(); ++h) {
      if (matching.house_to_agent[h] == kUnmatched) free_houses.push_back(h);
    }
    std::vector<HouseIndex> assignment = matching.agent_to_house;
    do {
      if (result.candidates_examined >= limits.max_candidates) {
        budget_exhausted = true;
        return false;
      }
      ++result.candidates_examined;
      for (std::size_t k = 0; k < free_agents.size(); ++k) assignment[free_agents[k]] = free_houses[k];
      Allocation candidate(assignment);
      if (is_wefable(inst, candidate)) {
        result.allocation = std::move(candidate);
        return false;
      }
    } while (std::next_permutation(free_houses.begin(), free_houses.end()));
    return true;
  });

  if (result.allocation) {
    result.status = BivaluedResult::Status::Found;
  } else if (budget_exhausted || scan.truncated) {
    result.status = BivaluedResult::Status::Inconclusive;
  } else {
    result.status = BivaluedResult::Status::NoWefable;
  }
  return result;
}

Allocation solve_normalized_pair(const Instance& inst) {
  if (inst.agent_count() != 2) throw Error(ErrorCode::NotTwoAgents, "normalised construction needs exactly two agents");
  for (AgentIndex i = 0; i < 2; ++i) {
    Rational total;
    for (const auto& v : inst.utility_row(i)) total += v;
    if (total != Rational(1)) {
      throw Error(ErrorCode::NotNormalized, "utilities of agent " + std::to_string(i) + " sum to " + total.to_string());
    }
  }
  const std::size_t m = inst.house_count();
  for (HouseIndex first = 0; first < m; ++first) {
    if (inst.utility(0, first) < inst.utility(1, first)) continue;
    for (HouseIndex second = 0; second < m; ++second) {
      if (second != first && inst.utility(1, second) >= inst.utility(0, second)) {
        return Allocation({first, second});
      }
    }
  }
  throw Error(ErrorCode::SearchFailed, "no house pair satisfies the normalised two-agent condition");
}

Allocation unweighted_efable(const Instance& inst) {
  if (!has_equal_weights(inst)) throw Error(ErrorCode::NotUnweighted, "agents have different weights");
  const std::size_t n = inst.agent_count();
  const std::size_t m = inst.house_count();

  auto optimum = [&](AgentIndex from, const std::vector<char>& house_free) {
    std::vector<HouseIndex> columns;
    for (HouseIndex h = 0; h < m; ++h) {
      if (house_free[h]) columns.push_back(h);
    }
    std::vector<std::vector<Rational>> table;
    for (AgentIndex i = from; i < n; ++i) {
      auto& row = table.emplace_back();
      for (HouseIndex h : columns) row.push_back(inst.utility(i, h));
    }
    return detail::max_weight_assignment(table).value;
  };

  // Fix agents one by one to the smallest house that keeps the optimum reachable.
  std::vector<char> house_free(m, 1);
  Rational remaining = optimum(0, house_free);
  std::vector<HouseIndex> assignment(n);
  for (AgentIndex i = 0; i < n; ++i) {
    bool fixed = false;
    for (HouseIndex h = 0; h < m && !fixed; ++h) {
      if (!house_free[h]) continue;
      house_free[h] = 0;
      const Rational rest = i + 1 < n ? optimum(i + 1, house_free) : Rational(0);
      if (inst.utility(i, h) + rest == remaining) {
        assignment[i] = h;
        remaining = rest;
        fixed = true;
      } else {
        house_free[h] = 1;
      }
    }
    if (!fixed) throw std::logic_error("assignment optimum could not be reproduced");
  }
  return Allocation(std::move(assignment));
}

}  // namespace wefhouse

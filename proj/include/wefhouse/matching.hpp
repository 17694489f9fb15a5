#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "wefhouse/model.hpp"

namespace wefhouse {

inline constexpr std::size_t kUnmatched = std::numeric_limits<std::size_t>::max();

/// Bipartite graph between agents (left) and houses (right). Adjacency lists
/// are kept sorted by house index so that every traversal is deterministic.
class BipartiteGraph {
 public:
  BipartiteGraph(std::size_t agents, std::size_t houses) : house_count_(houses), adjacency_(agents) {}

  void add_edge(AgentIndex i, HouseIndex h);
  bool has_edge(AgentIndex i, HouseIndex h) const;

  std::size_t agent_count() const { return adjacency_.size(); }
  std::size_t house_count() const { return house_count_; }
  std::size_t edge_count() const;
  const std::vector<HouseIndex>& neighbors(AgentIndex i) const { return adjacency_[i]; }

 private:
  std::size_t house_count_;
  std::vector<std::vector<HouseIndex>> adjacency_;
};

struct Matching {
  std::vector<HouseIndex> agent_to_house;  // kUnmatched where free
  std::vector<AgentIndex> house_to_agent;  // kUnmatched where free
  std::size_t size = 0;

  bool saturates_agents() const { return size == agent_to_house.size(); }
  friend bool operator==(const Matching&, const Matching&) = default;
};

/// Maximum-cardinality matching by augmenting paths (Kuhn). Agents are
/// processed in ascending order and houses are tried in ascending order, so
/// the result is a pure function of the graph. O(n * |E|).
Matching maximum_matching(const BipartiteGraph& g);

/// Matching restricted to a subset of agents and houses (others are ignored).
Matching maximum_matching(const BipartiteGraph& g, const std::vector<char>& agent_enabled,
                          const std::vector<char>& house_enabled);

struct SaturatingMatchingResult {
  std::optional<Allocation> allocation;  // set when every agent is matched
  Matching maximum;
};

SaturatingMatchingResult n_saturating_matching(const BipartiteGraph& g);

struct HallViolator {
  std::vector<AgentIndex> agents;        // Z, ascending
  std::vector<HouseIndex> neighborhood;  // H(Z), ascending
};

/// Agents reachable by alternating paths from the lowest-index unmatched
/// agent, together with their neighbourhood. `m` must be maximum and leave
/// some agent unmatched; otherwise throws Error(MatchingSaturating).
HallViolator minimal_hall_violator(const BipartiteGraph& g, const Matching& m);

/// Neighbourhood H(Z) of an agent set.
std::vector<HouseIndex> neighborhood(const BipartiteGraph& g, const std::vector<AgentIndex>& agents);

}  // namespace wefhouse

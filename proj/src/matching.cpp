#include "wefhouse/matching.hpp"

#include <algorithm>
#include <deque>

#include "wefhouse/error.hpp"

namespace wefhouse {

void BipartiteGraph::add_edge(AgentIndex i, HouseIndex h) {
  auto& row = adjacency_[i];
  const auto it = std::lower_bound(row.begin(), row.end(), h);
  if (it == row.end() || *it != h) row.insert(it, h);
}

bool BipartiteGraph::has_edge(AgentIndex i, HouseIndex h) const {
  return std::binary_search(adjacency_[i].begin(), adjacency_[i].end(), h);
}

std::size_t BipartiteGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : adjacency_) total += row.size();
  return total;
}

namespace {

class Augmenter {
 public:
  Augmenter(const BipartiteGraph& g, const std::vector<char>* house_enabled, Matching& m)
      : g_(g), house_enabled_(house_enabled), m_(m), visited_(g.house_count(), 0) {}

  bool augment_from(AgentIndex root) {
    std::fill(visited_.begin(), visited_.end(), 0);
    return try_agent(root);
  }

 private:
  bool try_agent(AgentIndex i) {
    for (HouseIndex h : g_.neighbors(i)) {
      if (visited_[h] || (house_enabled_ && !(*house_enabled_)[h])) continue;
      visited_[h] = 1;
      const AgentIndex owner = m_.house_to_agent[h];
      if (owner == kUnmatched || try_agent(owner)) {
        m_.agent_to_house[i] = h;
        m_.house_to_agent[h] = i;
        return true;
      }
    }
    return false;
  }

  const BipartiteGraph& g_;
  const std::vector<char>* house_enabled_;
  Matching& m_;
  std::vector<char> visited_;
};

Matching run_matching(const BipartiteGraph& g, const std::vector<char>* agent_enabled,
                      const std::vector<char>* house_enabled) {
  Matching m;
  m.agent_to_house.assign(g.agent_count(), kUnmatched);
  m.house_to_agent.assign(g.house_count(), kUnmatched);
  Augmenter augmenter(g, house_enabled, m);
  for (AgentIndex i = 0; i < g.agent_count(); ++i) {
    if (agent_enabled && !(*agent_enabled)[i]) continue;
    if (augmenter.augment_from(i)) ++m.size;
  }
  return m;
}

}  // namespace

Matching maximum_matching(const BipartiteGraph& g) { return run_matching(g, nullptr, nullptr); }

Matching maximum_matching(const BipartiteGraph& g, const std::vector<char>& agent_enabled,
                          const std::vector<char>& house_enabled) {
  return run_matching(g, &agent_enabled, &house_enabled);
}

SaturatingMatchingResult n_saturating_matching(const BipartiteGraph& g) {
  SaturatingMatchingResult result{std::nullopt, maximum_matching(g)};
  if (result.maximum.saturates_agents()) result.allocation = Allocation(result.maximum.agent_to_house);
  return result;
}

HallViolator minimal_hall_violator(const BipartiteGraph& g, const Matching& m) {
  const auto first_free = std::find(m.agent_to_house.begin(), m.agent_to_house.end(), kUnmatched);
  if (first_free == m.agent_to_house.end()) {
    throw Error(ErrorCode::MatchingSaturating, "matching covers every agent; no Hall violator exists");
  }
  const auto root = static_cast<AgentIndex>(first_free - m.agent_to_house.begin());

  std::vector<char> agent_seen(g.agent_count(), 0);
  std::vector<char> house_seen(g.house_count(), 0);
  std::deque<AgentIndex> queue{root};
  agent_seen[root] = 1;
  while (!queue.empty()) {
    const AgentIndex i = queue.front();
    queue.pop_front();
    for (HouseIndex h : g.neighbors(i)) {
      if (house_seen[h]) continue;
      house_seen[h] = 1;
      const AgentIndex owner = m.house_to_agent[h];
      if (owner == kUnmatched) {
        throw Error(ErrorCode::MatchingSaturating, "matching is not maximum (augmenting path found)");
      }
      if (!agent_seen[owner]) {
        agent_seen[owner] = 1;
        queue.push_back(owner);
      }
    }
  }

  HallViolator z;
  for (AgentIndex i = 0; i < g.agent_count(); ++i) {
    if (agent_seen[i]) z.agents.push_back(i);
  }
  for (HouseIndex h = 0; h < g.house_count(); ++h) {
    if (house_seen[h]) z.neighborhood.push_back(h);
  }
  return z;
}

std::vector<HouseIndex> neighborhood(const BipartiteGraph& g, const std::vector<AgentIndex>& agents) {
  std::vector<HouseIndex> out;
  for (AgentIndex i : agents) out.insert(out.end(), g.neighbors(i).begin(), g.neighbors(i).end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace wefhouse

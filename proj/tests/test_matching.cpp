#include <doctest.h>

#include <random>

#include "wefhouse/error.hpp"
#include "wefhouse/matching.hpp"

using namespace wefhouse;

namespace {

BipartiteGraph graph(std::size_t agents, std::size_t houses, std::vector<std::pair<AgentIndex, HouseIndex>> edges) {
  BipartiteGraph g(agents, houses);
  for (auto [i, h] : edges) g.add_edge(i, h);
  return g;
}

// Largest matching size by trying every subset of edges per agent.
std::size_t brute_matching_size(const BipartiteGraph& g, AgentIndex i, std::vector<char>& used) {
  if (i == g.agent_count()) return 0;
  std::size_t best = brute_matching_size(g, i + 1, used);
  for (HouseIndex h : g.neighbors(i)) {
    if (used[h]) continue;
    used[h] = 1;
    best = std::max(best, 1 + brute_matching_size(g, i + 1, used));
    used[h] = 0;
  }
  return best;
}

bool violates_hall(const BipartiteGraph& g, const std::vector<AgentIndex>& z) {
  return neighborhood(g, z).size() < z.size();
}

BipartiteGraph random_graph(std::mt19937_64& rng, std::size_t agents, std::size_t houses) {
  BipartiteGraph g(agents, houses);
  for (AgentIndex i = 0; i < agents; ++i) {
    for (HouseIndex h = 0; h < houses; ++h) {
      if (rng() % 3 == 0) g.add_edge(i, h);
    }
  }
  return g;
}

}  // namespace

TEST_CASE("bipartite graph keeps sorted unique adjacency") {
  BipartiteGraph g(2, 3);
  g.add_edge(0, 2);
  g.add_edge(0, 0);
  g.add_edge(0, 2);
  CHECK(g.neighbors(0) == std::vector<HouseIndex>{0, 2});
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 2));
  CHECK_FALSE(g.has_edge(1, 2));
}

TEST_CASE("saturating matching") {
  const auto found = n_saturating_matching(graph(2, 2, {{0, 0}, {1, 1}}));
  REQUIRE(found.allocation);
  CHECK(found.allocation->houses() == std::vector<HouseIndex>{0, 1});

  const auto missing = n_saturating_matching(graph(2, 2, {{0, 0}, {1, 0}}));
  CHECK_FALSE(missing.allocation);
  CHECK(missing.maximum.size == 1);

  const auto empty = n_saturating_matching(BipartiteGraph(0, 0));
  REQUIRE(empty.allocation);
  CHECK(empty.allocation->size() == 0);
}

TEST_CASE("lowest-index-first augmentation is deterministic") {
  const auto g = graph(2, 3, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 2}});
  const Matching m = maximum_matching(g);
  CHECK(m.agent_to_house == std::vector<HouseIndex>{1, 0});
  CHECK(maximum_matching(g) == m);
}

TEST_CASE("maximum matching size agrees with brute force") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t agents = 1 + rng() % 5;
    const std::size_t houses = 1 + rng() % 5;
    const auto g = random_graph(rng, agents, houses);
    std::vector<char> used(houses, 0);
    const Matching m = maximum_matching(g);
    CHECK(m.size == brute_matching_size(g, 0, used));
    for (AgentIndex i = 0; i < agents; ++i) {
      if (m.agent_to_house[i] != kUnmatched) {
        CHECK(g.has_edge(i, m.agent_to_house[i]));
        CHECK(m.house_to_agent[m.agent_to_house[i]] == i);
      }
    }
  }
}

TEST_CASE("minimal Hall violator examples") {
  const auto two_on_one = graph(2, 1, {{0, 0}, {1, 0}});
  const HallViolator z = minimal_hall_violator(two_on_one, maximum_matching(two_on_one));
  CHECK(z.agents == std::vector<AgentIndex>{0, 1});
  CHECK(z.neighborhood == std::vector<HouseIndex>{0});

  const auto star = graph(3, 1, {{0, 0}, {1, 0}, {2, 0}});
  const HallViolator s = minimal_hall_violator(star, maximum_matching(star));
  CHECK(s.agents == std::vector<AgentIndex>{0, 1});

  const auto isolated = graph(2, 1, {{0, 0}});
  const HallViolator lone = minimal_hall_violator(isolated, maximum_matching(isolated));
  CHECK(lone.agents == std::vector<AgentIndex>{1});
  CHECK(lone.neighborhood.empty());

  const auto perfect = graph(1, 1, {{0, 0}});
  CHECK_THROWS_AS(minimal_hall_violator(perfect, maximum_matching(perfect)), Error);
}

TEST_CASE("Hall violators are violating and minimal") {
  std::mt19937_64 rng(23);
  int checked = 0;
  while (checked < 300) {
    const std::size_t agents = 2 + rng() % 4;
    const std::size_t houses = 1 + rng() % 5;
    const auto g = random_graph(rng, agents, houses);
    const Matching m = maximum_matching(g);
    if (m.saturates_agents()) continue;
    ++checked;
    const HallViolator z = minimal_hall_violator(g, m);
    CHECK(z.neighborhood == neighborhood(g, z.agents));
    CHECK(z.neighborhood.size() < z.agents.size());
    // Every proper non-empty subset satisfies Hall's condition.
    const std::size_t k = z.agents.size();
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << k); ++mask) {
      std::vector<AgentIndex> sub;
      for (std::size_t b = 0; b < k; ++b) {
        if (mask >> b & 1) sub.push_back(z.agents[b]);
      }
      CHECK_FALSE(violates_hall(g, sub));
    }
  }
}

#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "wefhouse/error.hpp"
#include "wefhouse/oracle.hpp"
#include "wefhouse/wef_solver.hpp"

using namespace wefhouse;
using namespace wefhouse::testing;

namespace {

std::vector<VirtualAssignment> va(std::initializer_list<std::pair<AgentIndex, HouseIndex>> items) {
  std::vector<VirtualAssignment> out;
  for (auto [i, h] : items) out.push_back({i, h});
  return out;
}

}  // namespace

TEST_CASE("virtual values") {
  const Instance inst = fix1();
  CHECK(virtual_value(inst, 1, {0, 0}) == Rational(1));
  CHECK(virtual_value(inst, 1, {1, 0}) == q("1/2"));
  CHECK(virtual_value(fix6(), 0, {1, 1}) == Rational(0));
  const Instance equal = make({"3", "3"}, {{"1", "2"}, {"4", "5"}});
  CHECK(virtual_value(equal, 1, {0, 1}) == virtual_value(equal, 1, {1, 1}));
}

TEST_CASE("top sets") {
  const auto full7 = VirtualAssignmentSet::full(fix7());
  CHECK(top_set(fix7(), 1, full7) == va({{0, 0}, {0, 1}}));
  CHECK(top_set(fix6(), 0, VirtualAssignmentSet::full(fix6())) == va({{0, 0}, {1, 0}}));
  const Instance single = make({"2"}, {{"1", "1", "1"}});
  const auto full = VirtualAssignmentSet::full(single);
  CHECK(top_set(single, 0, full) == full.members());
  CHECK_THROWS_AS(top_set(fix7(), 0, VirtualAssignmentSet(2, 2, false)), Error);
}

TEST_CASE("pruning examples") {
  CHECK(prune_dominated(fix7(), VirtualAssignmentSet::full(fix7())).empty());
  const auto full5 = VirtualAssignmentSet::full(fix5());
  CHECK(prune_dominated(fix5(), full5) == full5);
  const Instance single = make({"1"}, {{"3", "0", "2"}});
  const auto full1 = VirtualAssignmentSet::full(single);
  CHECK(prune_dominated(single, full1) == full1);
}

TEST_CASE("pruning trace on the equal-utility instance") {
  std::vector<VirtualAssignmentSet> states;
  SolveObserver obs;
  obs.on_update = [&](const VirtualAssignmentSet& e) { states.push_back(e); };
  (void)solve_wef(fix7(), obs);
  REQUIRE(states.size() >= 2);
  // Agent 2's tops (agent 1's row) go first.
  CHECK(states[0].members() == va({{1, 0}, {1, 1}}));
  CHECK(states[1].empty());
}

TEST_CASE("candidate graph and matching") {
  const BipartiteGraph g5 = candidate_graph(fix5(), VirtualAssignmentSet::full(fix5()));
  CHECK(g5.edge_count() == 2);
  CHECK(g5.has_edge(0, 0));
  CHECK(g5.has_edge(1, 1));
  const BipartiteGraph g6 = candidate_graph(fix6(), VirtualAssignmentSet::full(fix6()));
  CHECK(g6.edge_count() == 2);
  CHECK(g6.has_edge(0, 0));
  CHECK(g6.has_edge(1, 0));
  CHECK_FALSE(n_saturating_matching(g6).allocation);
}

TEST_CASE("solver fixtures") {
  CHECK_FALSE(solve_wef(fix1()).allocation);
  CHECK_FALSE(solve_wef(fix2()).allocation);
  CHECK_FALSE(solve_wef(fix7()).allocation);
  const auto five = solve_wef(fix5());
  REQUIRE(five.allocation);
  CHECK(*five.allocation == alloc({0, 1}));

  const Instance inst = make({"1", "2"}, {{"1", "1"}, {"4", "1"}});
  const auto found = solve_wef(inst);
  REQUIRE(found.allocation);
  CHECK(is_wef_allocation(inst, *found.allocation));
  CHECK(*found.allocation == *oracle::oracle_wef_exists(inst));

  const auto one = solve_wef(make({"1"}, {{"0", "2", "2"}}));
  REQUIRE(one.allocation);
  CHECK(*one.allocation == alloc({1}));
}

TEST_CASE("solver agrees with the oracle and is Pareto optimal among WEF allocations") {
  for (std::uint64_t k = 0; k < 600; ++k) {
    const Instance inst = sweep_instance(k);
    CAPTURE(k);
    const auto solution = solve_wef(inst);
    const auto all = oracle::oracle_all_wef(inst);
    CHECK(solution.allocation.has_value() == !all.empty());
    if (!solution.allocation) continue;
    CHECK(is_wef_allocation(inst, *solution.allocation));
    for (const auto& other : all) CHECK_FALSE(pareto_dominates(inst, other, *solution.allocation));
  }
}

TEST_CASE("unweighted instances agree with the oracle") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    GeneratorConfig config;
    config.n = 1 + seed % 4;
    config.m = config.n + seed % 2;
    config.seed = seed;
    config.weights = "uniform:2:2";
    const Instance inst = generate_instance(config);
    CHECK(solve_wef(inst).allocation.has_value() == oracle::oracle_wef_exists(inst).has_value());
  }
}

TEST_CASE("every WEF allocation survives pruning") {
  for (std::uint64_t k = 0; k < 600; ++k) {
    const Instance inst = sweep_instance(k);
    const auto all = oracle::oracle_all_wef(inst);
    if (all.empty()) continue;
    bool safe = true;
    SolveObserver obs;
    obs.on_update = [&](const VirtualAssignmentSet& e) {
      for (const auto& a : all) {
        for (AgentIndex i = 0; i < inst.agent_count(); ++i) safe = safe && e.contains(i, a[i]);
      }
    };
    (void)solve_wef(inst, obs);
    CAPTURE(k);
    CHECK(safe);
  }
}

TEST_CASE("agents sharing a top house have equal weights") {
  std::size_t graphs = 0;
  for (std::uint64_t k = 0; k < 600; ++k) {
    const Instance inst = sweep_instance(k);
    SolveObserver obs;
    obs.on_candidate_graph = [&](const VirtualAssignmentSet&, const BipartiteGraph& g) {
      ++graphs;
      CHECK(shared_top_weights_equal(inst, g));
    };
    (void)solve_wef(inst, obs);
  }
  CHECK(graphs > 0);
}

TEST_CASE("zero-valued tops may be shared across weights") {
  const Instance inst = make({"1", "2"}, {{"0", "0"}, {"0", "0"}});
  const BipartiteGraph g = candidate_graph(inst, prune_dominated(inst, VirtualAssignmentSet::full(inst)));
  CHECK(g.has_edge(0, 0));
  CHECK(g.has_edge(1, 0));
  CHECK(shared_top_weights_equal(inst, g));
}

TEST_CASE("pruning is monotone and bounded") {
  for (std::uint64_t k = 0; k < 300; ++k) {
    const Instance inst = sweep_instance(k);
    std::optional<VirtualAssignmentSet> last;
    std::size_t updates = 0;
    SolveObserver obs;
    obs.on_update = [&](const VirtualAssignmentSet& e) {
      if (last) {
        for (const auto& x : e.members()) CHECK(last->contains(x));
        CHECK(e.size() <= last->size());
      }
      last = e;
      ++updates;
    };
    (void)solve_wef(inst, obs);
    CHECK(updates <= inst.agent_count() * inst.house_count() + 1);
  }
}

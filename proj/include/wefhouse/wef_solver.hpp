#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "wefhouse/matching.hpp"
#include "wefhouse/model.hpp"

namespace wefhouse {

/// e(i, h): the act of giving house h to agent i.
struct VirtualAssignment {
  AgentIndex agent = 0;
  HouseIndex house = 0;

  friend bool operator==(const VirtualAssignment&, const VirtualAssignment&) = default;
  friend auto operator<=>(const VirtualAssignment&, const VirtualAssignment&) = default;
};

/// Live set E of assignments that may still appear in a weighted envy-free
/// allocation. Stored as an n x m membership grid; only ever shrinks.
class VirtualAssignmentSet {
 public:
  VirtualAssignmentSet(std::size_t agents, std::size_t houses, bool full);
  static VirtualAssignmentSet full(const Instance& inst) {
    return {inst.agent_count(), inst.house_count(), true};
  }

  std::size_t agent_count() const { return agents_; }
  std::size_t house_count() const { return houses_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool contains(AgentIndex i, HouseIndex h) const { return cells_[i * houses_ + h] != 0; }
  bool contains(const VirtualAssignment& e) const { return contains(e.agent, e.house); }
  /// Returns true when the element was present.
  bool erase(AgentIndex i, HouseIndex h);
  void insert(AgentIndex i, HouseIndex h);

  /// E_i: houses h with e(i, h) still in E.
  std::vector<HouseIndex> row(AgentIndex i) const;
  std::vector<VirtualAssignment> members() const;

  friend bool operator==(const VirtualAssignmentSet&, const VirtualAssignmentSet&) = default;

 private:
  std::size_t agents_;
  std::size_t houses_;
  std::size_t size_;
  std::vector<char> cells_;
};

/// v'_i(e(j, h)) = v_i(h) / w_j.
Rational virtual_value(const Instance& inst, AgentIndex viewer, const VirtualAssignment& e);

/// Top_i(E): every member of E maximising v'_i, ties included, ascending.
/// Throws Error(EmptySet) when E is empty.
std::vector<VirtualAssignment> top_set(const Instance& inst, AgentIndex i, const VirtualAssignmentSet& e);

/// Repeatedly removes Top_i(E) for the lowest-index agent i whose top set
/// misses its own row E_i, until no agent qualifies or E is empty.
VirtualAssignmentSet prune_dominated(const Instance& inst, VirtualAssignmentSet e);

/// E': edge (i, h) iff e(i, h) is in E and attains agent i's maximum of v'_i over E.
BipartiteGraph candidate_graph(const Instance& inst, const VirtualAssignmentSet& e);

/// Agents sharing a candidate house they value positively have equal weights.
/// Holds for every candidate graph built from a pruned set. Zero-valued tops
/// tie with everything, so agents valuing h at zero are not constrained.
bool shared_top_weights_equal(const Instance& inst, const BipartiteGraph& candidates);

struct SolveStats {
  std::size_t outer_iterations = 0;
  std::size_t prune_steps = 0;
  std::size_t pruned_assignments = 0;
  std::size_t violators_removed = 0;
  std::size_t violator_assignments = 0;
};

/// Hooks for tests and tracing; both receive the live set after it changes.
struct SolveObserver {
  std::function<void(const VirtualAssignmentSet&)> on_update;
  std::function<void(const VirtualAssignmentSet&, const BipartiteGraph&)> on_candidate_graph;
};

struct WefSolution {
  std::optional<Allocation> allocation;  // empty: no weighted envy-free allocation exists
  SolveStats stats;
};

/// Decides whether a weighted envy-free allocation exists and returns one.
/// A returned allocation is Pareto optimal among all weighted envy-free
/// allocations. Worst case O(n^3 m^2) rational comparisons.
WefSolution solve_wef(const Instance& inst, const SolveObserver& observer = {});

}  // namespace wefhouse

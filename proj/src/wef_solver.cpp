#include "wefhouse/wef_solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "wefhouse/error.hpp"

namespace wefhouse {

VirtualAssignmentSet::VirtualAssignmentSet(std::size_t agents, std::size_t houses, bool full)
    : agents_(agents), houses_(houses), size_(full ? agents * houses : 0), cells_(agents * houses, full ? 1 : 0) {}

bool VirtualAssignmentSet::erase(AgentIndex i, HouseIndex h) {
  char& cell = cells_[i * houses_ + h];
  if (!cell) return false;
  cell = 0;
  --size_;
  return true;
}

void VirtualAssignmentSet::insert(AgentIndex i, HouseIndex h) {
  char& cell = cells_[i * houses_ + h];
  if (!cell) {
    cell = 1;
    ++size_;
  }
}

std::vector<HouseIndex> VirtualAssignmentSet::row(AgentIndex i) const {
  std::vector<HouseIndex> out;
  for (HouseIndex h = 0; h < houses_; ++h) {
    if (contains(i, h)) out.push_back(h);
  }
  return out;
}

std::vector<VirtualAssignment> VirtualAssignmentSet::members() const {
  std::vector<VirtualAssignment> out;
  out.reserve(size_);
  for (AgentIndex i = 0; i < agents_; ++i) {
    for (HouseIndex h = 0; h < houses_; ++h) {
      if (contains(i, h)) out.push_back({i, h});
    }
  }
  return out;
}

Rational virtual_value(const Instance& inst, AgentIndex viewer, const VirtualAssignment& e) {
  return inst.utility(viewer, e.house) / inst.weight(e.agent);
}

std::vector<VirtualAssignment> top_set(const Instance& inst, AgentIndex i, const VirtualAssignmentSet& e) {
  if (e.empty()) throw Error(ErrorCode::EmptySet, "Top_i of an empty assignment set");
  std::vector<VirtualAssignment> best;
  Rational best_value;
  for (const auto& member : e.members()) {
    Rational value = virtual_value(inst, i, member);
    if (best.empty() || value > best_value) {
      best.clear();
      best_value = std::move(value);
      best.push_back(member);
    } else if (value == best_value) {
      best.push_back(member);
    }
  }
  return best;
}

namespace {

constexpr std::size_t kEmptyColumn = static_cast<std::size_t>(-1);

// Tracks, for every house, the smallest weight among agents that may still
// receive it. Agent i's maximum of v'_i over E is then max_h v_i(h) / minW(h),
// which keeps each top-set query at O(m) instead of O(nm).
class TopTracker {
 public:
  TopTracker(const Instance& inst, VirtualAssignmentSet set) : inst_(inst), set_(std::move(set)) {
    const std::size_t n = inst.agent_count();
    std::vector<Rational> distinct = inst.weights();
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (const auto& w : distinct) inverse_weight_.push_back(Rational(1) / w);
    rank_.resize(n);
    for (AgentIndex i = 0; i < n; ++i) {
      rank_[i] = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), inst.weight(i)) -
                                          distinct.begin());
    }
    column_min_rank_.assign(inst.house_count(), kEmptyColumn);
    for (HouseIndex h = 0; h < inst.house_count(); ++h) refresh_column(h);
  }

  const VirtualAssignmentSet& set() const { return set_; }
  VirtualAssignmentSet release() && { return std::move(set_); }

  /// Highest v'_i over E; empty optional when E is empty.
  std::optional<Rational> best_value(AgentIndex i) const {
    std::optional<Rational> best;
    for (HouseIndex h = 0; h < inst_.house_count(); ++h) {
      if (column_min_rank_[h] == kEmptyColumn) continue;
      Rational value = column_value(i, h);
      if (!best || value > *best) best = std::move(value);
    }
    return best;
  }

  /// Highest v'_i over E_i (agent i's own row).
  std::optional<Rational> own_best_value(AgentIndex i) const {
    std::optional<Rational> best;
    const Rational& inv = inverse_weight_[rank_[i]];
    for (HouseIndex h = 0; h < inst_.house_count(); ++h) {
      if (!set_.contains(i, h)) continue;
      Rational value = inst_.utility(i, h) * inv;
      if (!best || value > *best) best = std::move(value);
    }
    return best;
  }

  /// Top_i(E) ∩ E_i = ∅ for a non-empty E.
  bool misses_own_row(AgentIndex i) const {
    const auto best = best_value(i);
    if (!best) return false;
    const auto own = own_best_value(i);
    return !own || *own < *best;
  }

  std::size_t remove_top(AgentIndex i) {
    const auto best = best_value(i);
    if (!best) return 0;
    std::size_t removed = 0;
    for (HouseIndex h = 0; h < inst_.house_count(); ++h) {
      const std::size_t min_rank = column_min_rank_[h];
      if (min_rank == kEmptyColumn || column_value(i, h) != *best) continue;
      for (AgentIndex j = 0; j < inst_.agent_count(); ++j) {
        if ((best->is_zero() || rank_[j] == min_rank) && set_.erase(j, h)) ++removed;
      }
      refresh_column(h);
    }
    return removed;
  }

  bool erase(AgentIndex i, HouseIndex h) {
    const bool erased = set_.erase(i, h);
    if (erased && column_min_rank_[h] == rank_[i]) refresh_column(h);
    return erased;
  }

  BipartiteGraph candidates() const {
    BipartiteGraph g(inst_.agent_count(), inst_.house_count());
    for (AgentIndex i = 0; i < inst_.agent_count(); ++i) {
      const auto best = best_value(i);
      if (!best) continue;
      const Rational& inv = inverse_weight_[rank_[i]];
      for (HouseIndex h = 0; h < inst_.house_count(); ++h) {
        if (set_.contains(i, h) && inst_.utility(i, h) * inv == *best) g.add_edge(i, h);
      }
    }
    return g;
  }

 private:
  Rational column_value(AgentIndex i, HouseIndex h) const {
    return inst_.utility(i, h) * inverse_weight_[column_min_rank_[h]];
  }

  void refresh_column(HouseIndex h) {
    std::size_t best = kEmptyColumn;
    for (AgentIndex j = 0; j < inst_.agent_count(); ++j) {
      if (set_.contains(j, h) && (best == kEmptyColumn || rank_[j] < best)) best = rank_[j];
    }
    column_min_rank_[h] = best;
  }

  const Instance& inst_;
  VirtualAssignmentSet set_;
  std::vector<Rational> inverse_weight_;  // by weight rank, ascending weight
  std::vector<std::size_t> rank_;
  std::vector<std::size_t> column_min_rank_;
};

// Lines 4-5 of the filtering loop. Returns the number of Top_i removals.
std::size_t prune(TopTracker& tracker, SolveStats* stats, const SolveObserver* observer) {
  std::size_t steps = 0;
  const std::size_t n = tracker.set().agent_count();
  for (;;) {
    if (tracker.set().empty()) break;
    AgentIndex trigger = n;
    for (AgentIndex i = 0; i < n; ++i) {
      if (tracker.misses_own_row(i)) {
        trigger = i;
        break;
      }
    }
    if (trigger == n) break;
    const std::size_t removed = tracker.remove_top(trigger);
    ++steps;
    if (stats) {
      ++stats->prune_steps;
      stats->pruned_assignments += removed;
    }
    if (observer && observer->on_update) observer->on_update(tracker.set());
  }
  return steps;
}

}  // namespace

VirtualAssignmentSet prune_dominated(const Instance& inst, VirtualAssignmentSet e) {
  TopTracker tracker(inst, std::move(e));
  prune(tracker, nullptr, nullptr);
  return std::move(tracker).release();
}

BipartiteGraph candidate_graph(const Instance& inst, const VirtualAssignmentSet& e) {
  return TopTracker(inst, e).candidates();
}

bool shared_top_weights_equal(const Instance& inst, const BipartiteGraph& candidates) {
  std::vector<std::optional<AgentIndex>> holder(candidates.house_count());
  for (AgentIndex i = 0; i < candidates.agent_count(); ++i) {
    for (HouseIndex h : candidates.neighbors(i)) {
      if (inst.utility(i, h).is_zero()) continue;
      if (!holder[h]) {
        holder[h] = i;
      } else if (inst.weight(*holder[h]) != inst.weight(i)) {
        return false;
      }
    }
  }
  return true;
}

WefSolution solve_wef(const Instance& inst, const SolveObserver& observer) {
  WefSolution solution;
  SolveStats& stats = solution.stats;
  const std::size_t n = inst.agent_count();
  TopTracker tracker(inst, VirtualAssignmentSet::full(inst));

  while (tracker.set().size() >= n) {
    ++stats.outer_iterations;
    prune(tracker, &stats, &observer);

    const BipartiteGraph g = tracker.candidates();
    if (observer.on_candidate_graph) observer.on_candidate_graph(tracker.set(), g);

    auto matched = n_saturating_matching(g);
    if (matched.allocation) {
      solution.allocation = std::move(matched.allocation);
      return solution;
    }

    const HallViolator z = minimal_hall_violator(g, matched.maximum);
    std::size_t removed = 0;
    for (AgentIndex i : z.agents) {
      for (HouseIndex h : g.neighbors(i)) {
        if (tracker.erase(i, h)) ++removed;
      }
    }
    ++stats.violators_removed;
    stats.violator_assignments += removed;
    if (observer.on_update) observer.on_update(tracker.set());
    if (removed == 0) {
      // Only reachable when pruning emptied E; every agent of a non-empty
      // pruned set has at least one candidate edge.
      if (!tracker.set().empty()) throw std::logic_error("Hall violator removed no assignments");
      break;
    }
  }
  return solution;
}

}  // namespace wefhouse

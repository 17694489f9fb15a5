#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "wefhouse/matching.hpp"
#include "wefhouse/model.hpp"

namespace wefhouse {

// ---------------------------------------------------------------------------
// Identical utilities: every allocation is weighted envy-freeable.
// ---------------------------------------------------------------------------

/// Gives the n most valuable houses (ties by index) to agents in descending
/// weight order (ties by index), then pays every agent up to the largest
/// weighted utility so all weighted utilities coincide.
/// Throws Error(NotIdenticalUtilities).
Outcome solve_identical(const Instance& inst);

// ---------------------------------------------------------------------------
// Two agent types.
// ---------------------------------------------------------------------------

struct TwoTypePartition {
  std::vector<AgentIndex> large;  // N_L, ascending
  std::vector<AgentIndex> small;  // N_S, ascending
  Rational large_weight;
  Rational small_weight;
  std::vector<Rational> large_row;
  std::vector<Rational> small_row;
};

/// Groups agents by (weight, utility row). Returns a partition only when there
/// are exactly two groups; the group holding agent 0 is labelled large.
std::optional<TwoTypePartition> detect_two_types(const Instance& inst);

/// Same groups with the large/small labels exchanged.
TwoTypePartition swap_labels(const TwoTypePartition& part);

/// Sorts houses by v_L(h) - v_S(h) descending and gives the top n_L to the
/// large group and the bottom n_S to the small group, provided the boundary
/// houses satisfy the gate inequality. Empty optional: no allocation of the
/// instance is weighted envy-freeable. A partition with an empty group is
/// handled as the identical-utilities case.
/// Throws Error(InconsistentPartition).
std::optional<Allocation> solve_two_types(const Instance& inst, const TwoTypePartition& part);

// ---------------------------------------------------------------------------
// Bi-valued utilities (every v_i(h) in {eps, 1}, m = n).
// ---------------------------------------------------------------------------

/// The low value eps when every utility lies in {eps, 1} with 0 <= eps < 1.
/// An instance whose utilities are all 1 reports eps = 0.
std::optional<Rational> bivalued_epsilon(const Instance& inst);

/// Edges (i, h) with v_i(h) = 1.
BipartiteGraph representing_graph(const Instance& inst);

struct MatchingEnumeration {
  std::size_t count = 0;
  bool truncated = false;  // cap reached or the visitor stopped early
};

/// Visits every maximum-cardinality matching exactly once in a fixed order,
/// stopping after `cap` matchings or when `visit` returns false.
MatchingEnumeration enumerate_maximum_matchings(const BipartiteGraph& g, std::size_t cap,
                                                const std::function<bool(const Matching&)>& visit);

struct BivaluedLimits {
  std::size_t max_matchings = 100'000;
  std::size_t max_candidates = 100'000;
};

struct BivaluedResult {
  enum class Status { Found, NoWefable, Inconclusive };

  Status status = Status::Inconclusive;
  std::optional<Allocation> allocation;
  Rational epsilon;
  std::size_t matchings_examined = 0;
  std::size_t candidates_examined = 0;
};

/// Scans every maximum matching of the representing graph and every way of
/// handing the leftover houses to the unmatched agents; returns the first
/// weighted envy-freeable allocation. Every such allocation is Pareto optimal
/// and therefore matches a maximum matching, so an exhausted scan proves
/// non-existence. Throws Error(NotSquare) or Error(NotBivalued).
BivaluedResult solve_bivalued(const Instance& inst, const BivaluedLimits& limits = {});

// ---------------------------------------------------------------------------
// Two agents with normalised additive utilities.
// ---------------------------------------------------------------------------

/// First ordered pair (h1, h2) with v_1(h1) >= v_2(h1) and v_2(h2) >= v_1(h2).
/// Throws Error(NotTwoAgents), Error(NotNormalized) or Error(SearchFailed).
Allocation solve_normalized_pair(const Instance& inst);

// ---------------------------------------------------------------------------
// Equal weights.
// ---------------------------------------------------------------------------

/// Lexicographically smallest maximum-total-utility assignment; envy-freeable
/// whenever all weights are equal. Throws Error(NotUnweighted).
Allocation unweighted_efable(const Instance& inst);

}  // namespace wefhouse

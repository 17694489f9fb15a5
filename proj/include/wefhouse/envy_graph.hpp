#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "wefhouse/model.hpp"

namespace wefhouse {

/// Complete digraph on agents for a fixed allocation A, with
/// w(i, j) = v_i(A_j) / w_j - v_i(A_i) / w_i and a zero diagonal.
class WeightedEnvyGraph {
 public:
  explicit WeightedEnvyGraph(std::size_t n) : n_(n), weights_(n * n) {}

  std::size_t size() const { return n_; }
  const Rational& weight(AgentIndex i, AgentIndex j) const { return weights_[i * n_ + j]; }
  void set_weight(AgentIndex i, AgentIndex j, Rational w) { weights_[i * n_ + j] = std::move(w); }

  /// Sum of edge weights along a vertex sequence.
  Rational path_weight(const std::vector<AgentIndex>& path) const;

 private:
  std::size_t n_;
  std::vector<Rational> weights_;
};

/// l(i, j): heaviest path from i to j; l(i) = max(0, max_j l(i, j)).
struct PathWeights {
  std::size_t n = 0;
  std::vector<Rational> between;  // row-major n x n; diagonal is the empty path (0)
  std::vector<Rational> from;     // l(i)

  const Rational& at(AgentIndex i, AgentIndex j) const { return between[i * n + j]; }
};

/// A simple cycle of positive total weight, closed (first == last) and rotated
/// to start at its lowest-index agent.
struct PositiveCycle {
  std::vector<AgentIndex> cycle;
  Rational weight;
};

using PathAnalysis = std::variant<PathWeights, PositiveCycle>;

/// Throws Error(InvalidAllocation) for an invalid allocation.
WeightedEnvyGraph build_envy_graph(const Instance& inst, const Allocation& a);

/// All-pairs longest paths by max-plus Floyd-Warshall, O(n^3). Reports a
/// witness cycle as soon as a positive-weight cycle shows up.
PathAnalysis max_path_weights(const WeightedEnvyGraph& g);

/// A is weighted envy-freeable iff its envy graph has no positive cycle.
bool is_wefable(const Instance& inst, const Allocation& a);

/// Weighted-welfare characterisation; computed through the envy graph, which
/// is equivalent and runs in O(n^3) instead of O(n!).
bool is_permutation_resistant_fast(const Instance& inst, const Allocation& a);

/// p*_i = w_i * l(i), the componentwise smallest envy-eliminating subsidy.
/// Throws Error(NotWefable) if A has a positive cycle.
SubsidyVector min_subsidy(const Instance& inst, const Allocation& a);

}  // namespace wefhouse

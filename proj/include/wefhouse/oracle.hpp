#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wefhouse/model.hpp"

namespace wefhouse::oracle {

// Brute-force ground truth for small instances. Everything here is written
// directly against the definitions in model.hpp and never calls the solver,
// the envy graph, or the special-case algorithms.

struct Limits {
  std::size_t max_allocations = 50'000;
  std::size_t max_permutations = 5'040;  // 7!
};

/// m! / (m - n)!, saturating at SIZE_MAX.
std::size_t injection_count(std::size_t n, std::size_t m);

/// Lexicographic enumeration of every injective map from n agents to m houses.
class AllocationIterator {
 public:
  AllocationIterator(std::size_t agents, std::size_t houses);

  /// Writes the next allocation into `out`; false once exhausted.
  bool next(Allocation& out);

 private:
  bool advance();

  std::size_t houses_;
  std::vector<std::size_t> current_;
  std::vector<char> used_;
  bool started_ = false;
  bool done_ = false;
};

/// Every allocation of the instance, lexicographic. Throws Error(CapExceeded).
std::vector<Allocation> all_allocations(const Instance& inst, const Limits& limits = {});

/// First weighted envy-free allocation in lexicographic order.
std::optional<Allocation> oracle_wef_exists(const Instance& inst, const Limits& limits = {});

/// Every weighted envy-free allocation.
std::vector<Allocation> oracle_all_wef(const Instance& inst, const Limits& limits = {});

/// sum_i v_i(A_i)/w_i >= sum_i v_i(A_sigma(i))/w_sigma(i) for all n! permutations.
bool oracle_permutation_resistant(const Instance& inst, const Allocation& a, const Limits& limits = {});

/// First permutation-resistant allocation in lexicographic order.
std::optional<Allocation> oracle_wefable_exists(const Instance& inst, const Limits& limits = {});

/// Enumerates every simple directed cycle of the envy relation and returns the
/// first one (closed vertex list) whose envy sum is positive.
std::optional<std::vector<AgentIndex>> oracle_positive_cycle(const Instance& inst, const Allocation& a,
                                                             std::size_t max_agents = 8);

/// Like oracle_positive_cycle but only over 2-cycles between agents whose
/// (weight, utility row) differ.
bool oracle_positive_cross_type_two_cycle(const Instance& inst, const Allocation& a);

/// (A, P) is weighted envy-free and lowering any positive p_i by min(delta, p_i)
/// breaks it.
bool verify_min_subsidy(const Instance& inst, const Allocation& a, const SubsidyVector& p, const Rational& delta);

/// No allocation Pareto-dominates `a`.
bool oracle_is_pareto_optimal(const Instance& inst, const Allocation& a, const Limits& limits = {});

/// Largest sum_i v_i(A_i) over all allocations.
Rational oracle_max_total_utility(const Instance& inst, const Limits& limits = {});

}  // namespace wefhouse::oracle

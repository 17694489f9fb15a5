#include "wefhouse/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "wefhouse/error.hpp"

namespace wefhouse::oracle {

std::size_t injection_count(std::size_t n, std::size_t m) {
  if (n > m) return 0;
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t factor = m - k;
    if (total > std::numeric_limits<std::size_t>::max() / factor) return std::numeric_limits<std::size_t>::max();
    total *= factor;
  }
  return total;
}

AllocationIterator::AllocationIterator(std::size_t agents, std::size_t houses)
    : houses_(houses), current_(agents), used_(houses, 0) {
  if (agents > houses) {
    done_ = true;
    return;
  }
  for (std::size_t i = 0; i < agents; ++i) {
    current_[i] = i;
    used_[i] = 1;
  }
}

bool AllocationIterator::advance() {
  for (std::size_t k = current_.size(); k-- > 0;) {
    used_[current_[k]] = 0;
    std::size_t candidate = current_[k] + 1;
    while (candidate < houses_ && used_[candidate]) ++candidate;
    if (candidate == houses_) continue;
    current_[k] = candidate;
    used_[candidate] = 1;
    std::size_t fill = 0;
    for (std::size_t j = k + 1; j < current_.size(); ++j) {
      while (used_[fill]) ++fill;
      current_[j] = fill;
      used_[fill] = 1;
    }
    return true;
  }
  return false;
}

bool AllocationIterator::next(Allocation& out) {
  if (done_) return false;
  if (started_ && !advance()) {
    done_ = true;
    return false;
  }
  started_ = true;
  out = Allocation(current_);
  return true;
}

namespace {

void check_allocation_cap(const Instance& inst, const Limits& limits) {
  const std::size_t count = injection_count(inst.agent_count(), inst.house_count());
  if (count > limits.max_allocations) {
    const std::string shown =
        count == std::numeric_limits<std::size_t>::max() ? std::string("too many") : std::to_string(count);
    throw Error(ErrorCode::CapExceeded,
                shown + " allocations exceed the oracle cap of " + std::to_string(limits.max_allocations));
  }
}

Rational envy(const Instance& inst, const Allocation& a, AgentIndex i, AgentIndex j) {
  return inst.utility(i, a[j]) / inst.weight(j) - inst.utility(i, a[i]) / inst.weight(i);
}

template <typename Visit>
void for_each_allocation(const Instance& inst, const Limits& limits, Visit&& visit) {
  check_allocation_cap(inst, limits);
  AllocationIterator it(inst.agent_count(), inst.house_count());
  Allocation a;
  while (it.next(a)) {
    if (!visit(a)) return;
  }
}

}  // namespace

std::vector<Allocation> all_allocations(const Instance& inst, const Limits& limits) {
  std::vector<Allocation> out;
  for_each_allocation(inst, limits, [&](const Allocation& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

std::optional<Allocation> oracle_wef_exists(const Instance& inst, const Limits& limits) {
  std::optional<Allocation> found;
  for_each_allocation(inst, limits, [&](const Allocation& a) {
    if (is_wef_allocation(inst, a)) found = a;
    return !found;
  });
  return found;
}

std::vector<Allocation> oracle_all_wef(const Instance& inst, const Limits& limits) {
  std::vector<Allocation> out;
  for_each_allocation(inst, limits, [&](const Allocation& a) {
    if (is_wef_allocation(inst, a)) out.push_back(a);
    return true;
  });
  return out;
}

bool oracle_permutation_resistant(const Instance& inst, const Allocation& a, const Limits& limits) {
  validate_allocation(inst, a);
  const std::size_t n = inst.agent_count();
  if (injection_count(n, n) > limits.max_permutations) {
    throw Error(ErrorCode::CapExceeded, std::to_string(n) + "! permutations exceed the oracle cap of " +
                                            std::to_string(limits.max_permutations));
  }
  Rational welfare;
  for (AgentIndex i = 0; i < n; ++i) welfare += inst.utility(i, a[i]) / inst.weight(i);

  std::vector<AgentIndex> sigma(n);
  std::iota(sigma.begin(), sigma.end(), AgentIndex{0});
  do {
    Rational permuted;
    for (AgentIndex i = 0; i < n; ++i) permuted += inst.utility(i, a[sigma[i]]) / inst.weight(sigma[i]);
    if (permuted > welfare) return false;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return true;
}

std::optional<Allocation> oracle_wefable_exists(const Instance& inst, const Limits& limits) {
  std::optional<Allocation> found;
  for_each_allocation(inst, limits, [&](const Allocation& a) {
    if (oracle_permutation_resistant(inst, a, limits)) found = a;
    return !found;
  });
  return found;
}

std::optional<std::vector<AgentIndex>> oracle_positive_cycle(const Instance& inst, const Allocation& a,
                                                             std::size_t max_agents) {
  validate_allocation(inst, a);
  const std::size_t n = inst.agent_count();
  if (n > max_agents) {
    throw Error(ErrorCode::CapExceeded, "exhaustive cycle search limited to " + std::to_string(max_agents) + " agents");
  }
  // Each simple cycle is visited once, starting from its smallest vertex.
  std::vector<AgentIndex> path;
  std::vector<char> on_path(n, 0);
  std::optional<std::vector<AgentIndex>> found;

  auto dfs = [&](auto&& self, AgentIndex start, AgentIndex at, const Rational& sum) -> void {
    for (AgentIndex next = start; next < n && !found; ++next) {
      if (next == at) continue;
      if (next == start) {
        if (path.size() >= 2 && (sum + envy(inst, a, at, start)).is_positive()) {
          found = path;
          found->push_back(start);
        }
        continue;
      }
      if (on_path[next]) continue;
      on_path[next] = 1;
      path.push_back(next);
      self(self, start, next, sum + envy(inst, a, at, next));
      path.pop_back();
      on_path[next] = 0;
    }
  };

  for (AgentIndex start = 0; start < n && !found; ++start) {
    path = {start};
    on_path.assign(n, 0);
    on_path[start] = 1;
    dfs(dfs, start, start, Rational(0));
  }
  return found;
}

bool oracle_positive_cross_type_two_cycle(const Instance& inst, const Allocation& a) {
  validate_allocation(inst, a);
  const std::size_t n = inst.agent_count();
  auto same_type = [&](AgentIndex i, AgentIndex j) {
    const auto ri = inst.utility_row(i);
    const auto rj = inst.utility_row(j);
    return inst.weight(i) == inst.weight(j) && std::equal(ri.begin(), ri.end(), rj.begin());
  };
  for (AgentIndex i = 0; i < n; ++i) {
    for (AgentIndex j = i + 1; j < n; ++j) {
      if (!same_type(i, j) && (envy(inst, a, i, j) + envy(inst, a, j, i)).is_positive()) return true;
    }
  }
  return false;
}

bool verify_min_subsidy(const Instance& inst, const Allocation& a, const SubsidyVector& p, const Rational& delta) {
  if (!is_wef_outcome(inst, Outcome{a, p})) return false;
  for (AgentIndex i = 0; i < p.size(); ++i) {
    if (!p[i].is_positive()) continue;
    std::vector<Rational> lowered = p.payments();
    lowered[i] -= std::min(delta, p[i]);
    if (is_wef_outcome(inst, Outcome{a, SubsidyVector(std::move(lowered))})) return false;
  }
  return true;
}

bool oracle_is_pareto_optimal(const Instance& inst, const Allocation& a, const Limits& limits) {
  validate_allocation(inst, a);
  bool dominated = false;
  for_each_allocation(inst, limits, [&](const Allocation& b) {
    dominated = pareto_dominates(inst, b, a);
    return !dominated;
  });
  return !dominated;
}

Rational oracle_max_total_utility(const Instance& inst, const Limits& limits) {
  std::optional<Rational> best;
  for_each_allocation(inst, limits, [&](const Allocation& a) {
    Rational total;
    for (AgentIndex i = 0; i < inst.agent_count(); ++i) total += inst.utility(i, a[i]);
    if (!best || total > *best) best = std::move(total);
    return true;
  });
  return best.value_or(Rational(0));
}

}  // namespace wefhouse::oracle

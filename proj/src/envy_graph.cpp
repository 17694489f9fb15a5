#include "wefhouse/envy_graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "wefhouse/error.hpp"

namespace wefhouse {

Rational WeightedEnvyGraph::path_weight(const std::vector<AgentIndex>& path) const {
  Rational total;
  for (std::size_t t = 0; t + 1 < path.size(); ++t) total += weight(path[t], path[t + 1]);
  return total;
}

WeightedEnvyGraph build_envy_graph(const Instance& inst, const Allocation& a) {
  validate_allocation(inst, a);
  const std::size_t n = inst.agent_count();
  WeightedEnvyGraph g(n);
  for (AgentIndex i = 0; i < n; ++i) {
    const Rational own = inst.utility(i, a[i]) / inst.weight(i);
    for (AgentIndex j = 0; j < n; ++j) {
      if (i != j) g.set_weight(i, j, inst.utility(i, a[j]) / inst.weight(j) - own);
    }
  }
  return g;
}

namespace {

// Bellman-Ford style relaxation from a virtual source joined to every agent.
// A cycle in the predecessor graph after n + 1 rounds is a positive cycle.
PositiveCycle extract_positive_cycle(const WeightedEnvyGraph& g) {
  const std::size_t n = g.size();
  std::vector<Rational> dist(n);
  std::vector<AgentIndex> pred(n, n);
  AgentIndex last = n;
  for (std::size_t round = 0; round <= n; ++round) {
    last = n;
    for (AgentIndex u = 0; u < n; ++u) {
      for (AgentIndex v = 0; v < n; ++v) {
        if (u == v) continue;
        Rational candidate = dist[u] + g.weight(u, v);
        if (candidate > dist[v]) {
          dist[v] = std::move(candidate);
          pred[v] = u;
          last = v;
        }
      }
    }
    if (last == n) break;
  }
  if (last == n) throw std::logic_error("positive cycle reported but relaxation converged");

  AgentIndex x = last;
  for (std::size_t step = 0; step < n; ++step) x = pred[x];

  std::vector<AgentIndex> cycle;
  AgentIndex y = x;
  do {
    cycle.push_back(y);
    y = pred[y];
  } while (y != x);
  std::reverse(cycle.begin(), cycle.end());  // predecessor order -> edge order
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  cycle.push_back(cycle.front());

  PositiveCycle out{std::move(cycle), {}};
  out.weight = g.path_weight(out.cycle);
  if (!out.weight.is_positive()) throw std::logic_error("extracted cycle is not positive");
  return out;
}

}  // namespace

PathAnalysis max_path_weights(const WeightedEnvyGraph& g) {
  const std::size_t n = g.size();
  PathWeights paths;
  paths.n = n;
  paths.between.resize(n * n);
  for (AgentIndex i = 0; i < n; ++i) {
    for (AgentIndex j = 0; j < n; ++j) {
      if (i != j) paths.between[i * n + j] = g.weight(i, j);
    }
  }

  auto& d = paths.between;
  for (AgentIndex k = 0; k < n; ++k) {
    for (AgentIndex i = 0; i < n; ++i) {
      const Rational through = d[i * n + k];
      for (AgentIndex j = 0; j < n; ++j) {
        Rational candidate = through + d[k * n + j];
        if (candidate > d[i * n + j]) d[i * n + j] = std::move(candidate);
      }
      if (d[i * n + i].is_positive()) return extract_positive_cycle(g);
    }
  }

  paths.from.resize(n);
  for (AgentIndex i = 0; i < n; ++i) {
    // The diagonal holds the empty path, so l(i) >= 0.
    paths.from[i] = *std::max_element(d.begin() + static_cast<std::ptrdiff_t>(i * n),
                                      d.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
  }
  return paths;
}

bool is_wefable(const Instance& inst, const Allocation& a) {
  return std::holds_alternative<PathWeights>(max_path_weights(build_envy_graph(inst, a)));
}

bool is_permutation_resistant_fast(const Instance& inst, const Allocation& a) { return is_wefable(inst, a); }

SubsidyVector min_subsidy(const Instance& inst, const Allocation& a) {
  const auto analysis = max_path_weights(build_envy_graph(inst, a));
  if (const auto* cycle = std::get_if<PositiveCycle>(&analysis)) {
    std::string path;
    for (AgentIndex i : cycle->cycle) path += (path.empty() ? "" : ",") + std::to_string(i);
    throw Error(ErrorCode::NotWefable, "positive cycle (" + path + ") of weight " + cycle->weight.to_string());
  }
  const auto& paths = std::get<PathWeights>(analysis);
  std::vector<Rational> payments;
  payments.reserve(inst.agent_count());
  for (AgentIndex i = 0; i < inst.agent_count(); ++i) payments.push_back(inst.weight(i) * paths.from[i]);
  return SubsidyVector(std::move(payments));
}

}  // namespace wefhouse

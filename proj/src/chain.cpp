#include "moran/chain.hpp"

#include <algorithm>
#include <numeric>

namespace moran {

DirectedGraph moran_step(const DirectedGraph& g, const MoranStep& step) {
  const int n = g.n();
  if (step.u < 1 || step.u > n || step.v < 1 || step.v > n || step.u == step.v)
    throw ValidationError("moran_step: invalid step");
  std::set<std::pair<int, int>> edges;
  for (const auto& e : g.edges())
    if (e.first != step.v && e.second != step.v) edges.insert(e);
  edges.insert({step.u, step.v});
  return DirectedGraph(n, std::move(edges));
}

DirectedGraph run_chain(
    const DirectedGraph& g0, long long steps, RngStream& rng,
    const std::function<void(const ChainTraceEntry&, const DirectedGraph&)>&
        on_step) {
  DirectedGraph g = g0;
  for (long long t = 1; t <= steps; ++t) {
    const MoranStep s = random_step(g.n(), rng);
    g = moran_step(g, s);
    if (on_step) on_step(ChainTraceEntry{t, s, is_forest(g)}, g);
  }
  return g;
}

bool is_forest(const DirectedGraph& g) {
  try {
    validate_forest(g);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

RootedForest cannings_step(const RootedForest& f, const OffspringVector& off,
                           RngStream& rng) {
  const int n = f.n();
  if (static_cast<int>(off.xi.size()) != n)
    throw ValidationError("cannings_step: offspring vector size mismatch");
  long long total = 0;
  for (int v = 1; v <= n; ++v) {
    if (off.xi[v - 1] < 0)
      throw ValidationError("cannings_step: negative offspring count");
    total += off.xi[v - 1];
  }
  if (total != n) throw ValidationError("cannings_step: offspring counts must sum to n");

  std::vector<int> dead;
  std::vector<int> slots;  // live vertex v appears xi(v) - 1 times
  for (int v = 1; v <= n; ++v) {
    if (off.xi[v - 1] == 0)
      dead.push_back(v);
    else
      for (int c = 1; c < off.xi[v - 1]; ++c) slots.push_back(v);
  }
  // |slots| == |dead| because the counts sum to n.
  // Uniform assignment: shuffle the mother slots, match to dead vertices in
  // label order.
  for (std::size_t i = slots.size(); i > 1; --i)
    std::swap(slots[i - 1], slots[rng.next_below(i)]);

  std::vector<bool> is_dead(n + 1, false);
  for (int d : dead) is_dead[d] = true;

  std::vector<int> parent(n, 0);
  for (int v = 1; v <= n; ++v) {
    const int p = f.parent(v);
    if (!is_dead[v] && p != 0 && !is_dead[p]) parent[v - 1] = p;
  }
  for (std::size_t i = 0; i < dead.size(); ++i) parent[dead[i] - 1] = slots[i];
  return RootedForest(n, std::move(parent));
}

}  // namespace moran

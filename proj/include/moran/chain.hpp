#pragma once

#include <functional>
#include <vector>

#include "moran/forest.hpp"
#include "moran/rng.hpp"

namespace moran {

// One transition of the chain: vertex v is disconnected from all of its
// neighbors, then the edge u -> v is added.
struct MoranStep {
  int u;
  int v;
};

// Exchangeable offspring counts of a Cannings transition; must sum to n.
struct OffspringVector {
  std::vector<int> xi;  // xi[v-1] for vertex v
};

DirectedGraph moran_step(const DirectedGraph& g, const MoranStep& step);

struct ChainTraceEntry {
  long long t;
  MoranStep step;
  bool is_forest;
};

// Applies `steps` uniformly random transitions. If on_step is set it is
// called after every transition with the running state.
DirectedGraph run_chain(
    const DirectedGraph& g0, long long steps, RngStream& rng,
    const std::function<void(const ChainTraceEntry&, const DirectedGraph&)>&
        on_step = nullptr);

RootedForest cannings_step(const RootedForest& f, const OffspringVector& xi,
                           RngStream& rng);

// Uniform ordered pair of distinct vertices.
inline MoranStep random_step(int n, RngStream& rng) {
  const int u = rng.uniform_int(1, n);
  return MoranStep{u, rng.uniform_excluding(n, u)};
}

bool is_forest(const DirectedGraph& g);

}  // namespace moran

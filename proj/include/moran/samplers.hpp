#pragma once

#include <cstdint>
#include <vector>

#include "moran/forest.hpp"
#include "moran/rng.hpp"

namespace moran {

// Attachment vector of the uniform attachment construction:
// u[l] uniform on {1..n} \ {l}, all entries independent.
struct UAVector {
  int n;
  std::vector<int> u;  // 1-based: u[l-1] is the attachment of arrival l

  int at(int l) const { return u[l - 1]; }
  void validate() const;
};

UAVector sample_ua_vector(int n, RngStream& rng);

// Pre-relabel forest on arrival indices: arrival l attaches to u[l] iff
// u[l] < l, so every edge is increasing.
RootedForest ua_pre_relabel_forest(const UAVector& u);

struct UAForestRecord {
  RootedForest forest;       // final forest, after uniform relabeling
  RootedForest pre_relabel;  // forest on arrival indices
  UAVector u;
  std::vector<int> sigma;    // sigma[l-1] = label given to the l-th arrival
  std::vector<int> arrival;  // arrival[v-1] = B_v = sigma^{-1}(v)

  int steps_remaining(int v) const { return forest.n() - arrival[v - 1]; }  // L_v
};

UAForestRecord sample_ua(int n, RngStream& rng);

// Backward construction: consume i.i.d. pairs (V_t, W_t) backwards in time
// until every vertex has been disconnected once.
struct BackwardSample {
  RootedForest forest;
  long long pairs_consumed;
};

BackwardSample sample_backward(int n, RngStream& rng);

// Uniform over the m^{m-1} rooted labeled trees on {1..m}.
RootedForest sample_uniform_rooted_tree(int m, RngStream& rng);

// Theorem-1 route: uniform rooted tree on {1..n-1}, decreasing edges removed,
// vertex n attached to a uniform vertex, then a uniform relabeling.
RootedForest sample_via_uniform_tree(int n, RngStream& rng);

// Local weak limit: spine plus Poisson(1) Galton-Watson trees with uniform
// marks, edges u -> v pruned when V_u > V_v.
struct LocalLimitSample {
  int focal_degree;
  long long component_size;
  long long marks_used;
};

LocalLimitSample sample_local_limit(RngStream& rng, long long node_budget = 1000000);

struct Vertex1Record {
  int tree_size;        // T^(1)
  int root_steps;       // H^(1)
  int descending_size;  // the size of the subtree descending from vertex 1
};

Vertex1Record vertex1_record(const UAForestRecord& rec);

// ---------------------------------------------------------------------------
// Low-overhead per-sample statistics used by the Monte Carlo harness. These
// work directly on the attachment vector; tree sizes and degrees do not
// depend on the relabeling, and label-dependent quantities use the fact that
// sigma^{-1}(v) is uniform.
// ---------------------------------------------------------------------------

struct FastForestStats {
  int num_trees;
  int max_degree;
  int max_tree_size;
  int degree_of_random_vertex;   // degree of a fixed vertex (by exchangeability)
  int uniform_tree_size;         // T^U
  int vertex1_tree_size;         // T^(1)
  int vertex1_root_steps;        // H^(1)
};

FastForestStats sample_ua_stats(int n, RngStream& rng);

}  // namespace moran

#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "moran/errors.hpp"

namespace moran {

// Arbitrary labeled digraph on {1..n}; the transient state space of the chain.
// No self-loops, no duplicate edges.
class DirectedGraph {
 public:
  DirectedGraph(int n, std::set<std::pair<int, int>> edges);

  int n() const { return n_; }
  const std::set<std::pair<int, int>>& edges() const { return edges_; }

  bool has_edge(int u, int v) const { return edges_.count({u, v}) > 0; }

  bool operator==(const DirectedGraph& other) const = default;

 private:
  int n_;
  std::set<std::pair<int, int>> edges_;
};

// Rooted forest on {1..n} stored as a parent map. parent(v) == 0 means v is a
// root; parent(v) == u means there is an edge u -> v (mother to daughter).
class RootedForest {
 public:
  // parent has size n, 1-based semantics: parent[v-1] is the mother of v.
  RootedForest(int n, std::vector<int> parent);

  int n() const { return n_; }
  int parent(int v) const { return parent_[v - 1]; }
  const std::vector<int>& parent_array() const { return parent_; }

  std::vector<int> roots() const;
  int root_of(int v) const;
  // Vertices of the tree containing v.
  std::vector<int> tree_of(int v) const;
  // Size of the subtree descending from v (v plus all its descendants).
  int descendants_of(int v) const;

  int num_edges() const;

  DirectedGraph to_digraph() const;

  bool operator==(const RootedForest& other) const = default;
  bool operator<(const RootedForest& other) const {
    return parent_ < other.parent_;
  }

 private:
  int n_;
  std::vector<int> parent_;
};

// Forest view of g, or CycleDetected / MultipleParents if g is not a forest.
RootedForest validate_forest(const DirectedGraph& g);

struct ForestStats {
  int n = 0;
  int num_trees = 0;
  int num_edges = 0;
  std::vector<int> tree_sizes;   // sorted descending
  std::vector<int> in_degree;    // per vertex, 1-based at index v-1
  std::vector<int> out_degree;
  std::vector<int> degree;       // in + out
  int max_degree = 0;
  int max_tree_size = 0;
};

ForestStats stats(const RootedForest& f);

// Text format: "n p_1 ... p_n", 0 marking roots.
std::string serialize(const RootedForest& f);
RootedForest deserialize(const std::string& line);

// JSON rendering with fixed key names.
std::string stats_to_json(const ForestStats& s);

}  // namespace moran

#include "moran/forest.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace moran {

DirectedGraph::DirectedGraph(int n, std::set<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 1) throw ValidationError("DirectedGraph: n must be >= 1");
  for (const auto& [u, v] : edges_) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw ValidationError("DirectedGraph: edge endpoint out of range");
    if (u == v) throw ValidationError("DirectedGraph: self-loop");
  }
}

RootedForest::RootedForest(int n, std::vector<int> parent)
    : n_(n), parent_(std::move(parent)) {
  if (n < 1) throw ValidationError("RootedForest: n must be >= 1");
  if (static_cast<int>(parent_.size()) != n)
    throw ValidationError("RootedForest: parent array size mismatch");
  for (int v = 1; v <= n; ++v) {
    const int p = parent_[v - 1];
    if (p < 0 || p > n) throw ValidationError("RootedForest: parent out of range");
    if (p == v) throw ValidationError("RootedForest: self-parent");
  }
  // Every parent chain must reach a root in <= n steps.
  for (int v = 1; v <= n; ++v) {
    int cur = v;
    int steps = 0;
    while (parent_[cur - 1] != 0) {
      cur = parent_[cur - 1];
      if (++steps > n) throw CycleDetected("RootedForest: parent map has a cycle");
    }
  }
}

std::vector<int> RootedForest::roots() const {
  std::vector<int> r;
  for (int v = 1; v <= n_; ++v)
    if (parent_[v - 1] == 0) r.push_back(v);
  return r;
}

int RootedForest::root_of(int v) const {
  while (parent_[v - 1] != 0) v = parent_[v - 1];
  return v;
}

std::vector<int> RootedForest::tree_of(int v) const {
  const int r = root_of(v);
  std::vector<int> members;
  for (int w = 1; w <= n_; ++w)
    if (root_of(w) == r) members.push_back(w);
  return members;
}

int RootedForest::descendants_of(int v) const {
  int count = 0;
  for (int w = 1; w <= n_; ++w) {
    int cur = w;
    for (;;) {
      if (cur == v) {
        ++count;
        break;
      }
      cur = parent_[cur - 1];
      if (cur == 0) break;
    }
  }
  return count;
}

int RootedForest::num_edges() const {
  int e = 0;
  for (int v = 1; v <= n_; ++v)
    if (parent_[v - 1] != 0) ++e;
  return e;
}

DirectedGraph RootedForest::to_digraph() const {
  std::set<std::pair<int, int>> edges;
  for (int v = 1; v <= n_; ++v)
    if (parent_[v - 1] != 0) edges.insert({parent_[v - 1], v});
  return DirectedGraph(n_, std::move(edges));
}

RootedForest validate_forest(const DirectedGraph& g) {
  std::vector<int> parent(g.n(), 0);
  for (const auto& [u, v] : g.edges()) {
    if (parent[v - 1] != 0)
      throw MultipleParents("vertex " + std::to_string(v) + " has two incoming edges");
    parent[v - 1] = u;
  }
  return RootedForest(g.n(), std::move(parent));  // throws CycleDetected on cycles
}

ForestStats stats(const RootedForest& f) {
  const int n = f.n();
  ForestStats s;
  s.n = n;
  s.in_degree.assign(n, 0);
  s.out_degree.assign(n, 0);
  std::vector<int> size(n + 1, 0);
  // Tree sizes by root-chasing; n is small enough everywhere this is used
  // on the exact path, and the samplers have their own O(n) statistics path.
  for (int v = 1; v <= n; ++v) {
    const int p = f.parent(v);
    if (p != 0) {
      s.in_degree[v - 1] += 1;
      s.out_degree[p - 1] += 1;
      ++s.num_edges;
    }
    ++size[f.root_of(v)];
  }
  s.degree.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    s.degree[v] = s.in_degree[v] + s.out_degree[v];
    s.max_degree = std::max(s.max_degree, s.degree[v]);
  }
  for (int r = 1; r <= n; ++r)
    if (size[r] > 0) s.tree_sizes.push_back(size[r]);
  std::sort(s.tree_sizes.rbegin(), s.tree_sizes.rend());
  s.num_trees = static_cast<int>(s.tree_sizes.size());
  s.max_tree_size = s.tree_sizes.empty() ? 0 : s.tree_sizes.front();
  return s;
}

std::string serialize(const RootedForest& f) {
  std::ostringstream out;
  out << f.n();
  for (int v = 1; v <= f.n(); ++v) out << ' ' << f.parent(v);
  return out.str();
}

RootedForest deserialize(const std::string& line) {
  std::istringstream in(line);
  int n = 0;
  if (!(in >> n)) throw ParseError("forest line: missing vertex count");
  if (n < 1) throw ParseError("forest line: vertex count must be >= 1");
  std::vector<int> parent(n);
  for (int v = 0; v < n; ++v)
    if (!(in >> parent[v])) throw ParseError("forest line: expected " +
                                             std::to_string(n) + " parent entries");
  std::string rest;
  if (in >> rest) throw ParseError("forest line: trailing tokens");
  return RootedForest(n, std::move(parent));
}

std::string stats_to_json(const ForestStats& s) {
  nlohmann::json j;
  j["n"] = s.n;
  j["num_trees"] = s.num_trees;
  j["num_edges"] = s.num_edges;
  j["tree_sizes"] = s.tree_sizes;
  j["max_degree"] = s.max_degree;
  j["max_tree_size"] = s.max_tree_size;
  return j.dump();
}

}  // namespace moran

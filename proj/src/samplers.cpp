#include "moran/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "moran/chain.hpp"

namespace moran {

void UAVector::validate() const {
  if (n < 2) throw DomainError("UAVector: n must be >= 2");
  if (static_cast<int>(u.size()) != n) throw ValidationError("UAVector: size mismatch");
  for (int l = 1; l <= n; ++l)
    if (u[l - 1] < 1 || u[l - 1] > n || u[l - 1] == l)
      throw ValidationError("UAVector: entry out of range at l=" + std::to_string(l));
}

UAVector sample_ua_vector(int n, RngStream& rng) {
  if (n < 2) throw DomainError("sample_ua_vector: the Moran forest needs n >= 2");
  UAVector v{n, std::vector<int>(n)};
  for (int l = 1; l <= n; ++l) v.u[l - 1] = rng.uniform_excluding(n, l);
  return v;
}

RootedForest ua_pre_relabel_forest(const UAVector& v) {
  v.validate();
  std::vector<int> parent(v.n, 0);
  for (int l = 2; l <= v.n; ++l)
    if (v.at(l) < l) parent[l - 1] = v.at(l);
  return RootedForest(v.n, std::move(parent));
}

namespace {

std::vector<int> uniform_permutation(int n, RngStream& rng) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  for (std::size_t i = p.size(); i > 1; --i)
    std::swap(p[i - 1], p[rng.next_below(i)]);
  return p;
}

}  // namespace

UAForestRecord sample_ua(int n, RngStream& rng) {
  UAVector v = sample_ua_vector(n, rng);
  RootedForest pre = ua_pre_relabel_forest(v);
  std::vector<int> sigma = uniform_permutation(n, rng);
  std::vector<int> parent(n, 0), arrival(n, 0);
  for (int l = 1; l <= n; ++l) {
    arrival[sigma[l - 1] - 1] = l;
    const int p = pre.parent(l);
    if (p != 0) parent[sigma[l - 1] - 1] = sigma[p - 1];
  }
  return UAForestRecord{RootedForest(n, std::move(parent)), std::move(pre),
                        std::move(v), std::move(sigma), std::move(arrival)};
}

BackwardSample sample_backward(int n, RngStream& rng) {
  if (n < 2) throw DomainError("sample_backward: n must be >= 2");
  // Scan the pair sequence backwards from the focal time. The first time a
  // vertex appears as W is its birth (largest tau); older arrows to it are
  // already erased.
  std::vector<int> rank(n + 1, -1);   // backward first-encounter order, 0 = latest birth
  std::vector<int> mother(n + 1, 0);
  int seen = 0;
  long long pairs = 0;
  while (seen < n) {
    const MoranStep s = random_step(n, rng);  // (V_t, W_t) = (s.u, s.v)
    ++pairs;
    if (rank[s.v] < 0) {
      rank[s.v] = seen++;
      mother[s.v] = s.u;
    }
  }
  std::vector<int> parent(n, 0);
  for (int w = 1; w <= n; ++w)
    if (rank[mother[w]] > rank[w])  // tau(m(w)) < tau(w)
      parent[w - 1] = mother[w];
  return BackwardSample{RootedForest(n, std::move(parent)), pairs};
}

RootedForest sample_uniform_rooted_tree(int m, RngStream& rng) {
  if (m < 1) throw DomainError("sample_uniform_rooted_tree: m must be >= 1");
  if (m == 1) return RootedForest(1, {0});

  // Uniform Pruefer word of length m-2 decodes to a uniform unrooted tree;
  // a uniform root then gives all m^{m-1} rooted trees equal weight.
  std::vector<int> word(m - 2);
  for (auto& w : word) w = rng.uniform_int(1, m);

  std::vector<int> deg(m + 1, 1);
  for (int w : word) ++deg[w];
  std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
  for (int vtx = 1; vtx <= m; ++vtx)
    if (deg[vtx] == 1) leaves.push(vtx);

  std::vector<std::vector<int>> adj(m + 1);
  for (int w : word) {
    const int leaf = leaves.top();
    leaves.pop();
    adj[leaf].push_back(w);
    adj[w].push_back(leaf);
    deg[leaf] = 0;
    if (--deg[w] == 1) leaves.push(w);
  }
  const int a = leaves.top();
  leaves.pop();
  const int b = leaves.top();
  adj[a].push_back(b);
  adj[b].push_back(a);

  const int root = rng.uniform_int(1, m);
  std::vector<int> parent(m, 0);
  std::vector<int> stack{root};
  std::vector<bool> visited(m + 1, false);
  visited[root] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!visited[w]) {
        visited[w] = true;
        parent[w - 1] = v;
        stack.push_back(w);
      }
  }
  return RootedForest(m, std::move(parent));
}

RootedForest sample_via_uniform_tree(int n, RngStream& rng) {
  if (n < 2) throw DomainError("sample_via_uniform_tree: n must be >= 2");
  const int m = n - 1;
  RootedForest tree = sample_uniform_rooted_tree(m, rng);
  std::vector<int> parent(n, 0);
  for (int v = 1; v <= m; ++v) {
    const int p = tree.parent(v);
    if (p != 0 && p < v) parent[v - 1] = p;  // keep increasing edges only
  }
  parent[n - 1] = rng.uniform_int(1, m);  // the last arrival always attaches
  const std::vector<int> pi = uniform_permutation(n, rng);
  std::vector<int> relabeled(n, 0);
  for (int v = 1; v <= n; ++v)
    if (parent[v - 1] != 0) relabeled[pi[v - 1] - 1] = pi[parent[v - 1] - 1];
  return RootedForest(n, std::move(relabeled));
}

namespace {

int poisson1(RngStream& rng, long long& marks) {
  // Knuth's product method with rate 1.
  const double limit = std::exp(-1.0);
  int k = -1;
  double prod = 1.0;
  do {
    prod *= rng.uniform01();
    ++marks;
    ++k;
  } while (prod > limit);
  return k;
}

}  // namespace

LocalLimitSample sample_local_limit(RngStream& rng, long long node_budget) {
  LocalLimitSample out{0, 1, 1};
  const double v0 = rng.uniform01();

  // Vertices of the pruned component pending Galton-Watson expansion.
  std::vector<double> pending{v0};

  // Spine: the edge u_{i+1} -> u_i survives pruning iff V_{u_{i+1}} < V_{u_i}.
  double spine_mark = v0;
  bool first = true;
  for (;;) {
    const double next = rng.uniform01();
    ++out.marks_used;
    if (next >= spine_mark) break;
    ++out.component_size;
    if (first) {
      ++out.focal_degree;
      first = false;
    }
    pending.push_back(next);
    spine_mark = next;
  }

  bool focal = true;  // the first pending entry is u_0 itself
  std::size_t head = 0;
  while (head < pending.size()) {
    const double mark = pending[head++];
    const bool at_focal = focal && head == 1;
    const int children = poisson1(rng, out.marks_used);
    for (int c = 0; c < children; ++c) {
      const double child_mark = rng.uniform01();
      ++out.marks_used;
      if (child_mark > mark) {  // edge kept: mark increases away from u_0
        ++out.component_size;
        if (out.component_size > node_budget)
          throw BudgetExceeded("sample_local_limit: component exceeded node budget");
        if (at_focal) ++out.focal_degree;
        pending.push_back(child_mark);
      }
    }
    focal = false;
  }
  return out;
}

Vertex1Record vertex1_record(const UAForestRecord& rec) {
  const int n = rec.forest.n();
  const std::vector<int> members = rec.forest.tree_of(1);
  int min_arrival = n + 1;
  for (int v : members) min_arrival = std::min(min_arrival, rec.arrival[v - 1]);
  return Vertex1Record{static_cast<int>(members.size()), n - min_arrival,
                       rec.forest.descendants_of(1)};
}

FastForestStats sample_ua_stats(int n, RngStream& rng) {
  if (n < 2) throw DomainError("sample_ua_stats: n must be >= 2");
  // Everything here lives on arrival indices; tree sizes and degrees are
  // invariant under the final relabeling, and sigma^{-1}(v) of a fixed label
  // is a uniform arrival index.
  std::vector<int> parent(n + 1, 0), outdeg(n + 1, 0), sz(n + 1, 1);
  for (int l = 1; l <= n; ++l) {
    const int u = rng.uniform_excluding(n, l);
    if (u < l) {
      parent[l] = u;
      ++outdeg[u];
    }
  }
  // Parents arrive before children, so a single descending sweep accumulates
  // subtree sizes.
  for (int l = n; l >= 1; --l)
    if (parent[l] != 0) sz[parent[l]] += sz[l];

  FastForestStats s{0, 0, 0, 0, 0, 0, 0};
  std::vector<int> roots;
  for (int l = 1; l <= n; ++l) {
    const int deg = outdeg[l] + (parent[l] != 0 ? 1 : 0);
    s.max_degree = std::max(s.max_degree, deg);
    if (parent[l] == 0) {
      roots.push_back(l);
      s.max_tree_size = std::max(s.max_tree_size, sz[l]);
    }
  }
  s.num_trees = static_cast<int>(roots.size());
  s.uniform_tree_size = sz[roots[rng.next_below(roots.size())]];

  int b = rng.uniform_int(1, n);  // arrival index of vertex 1
  while (parent[b] != 0) b = parent[b];
  s.vertex1_tree_size = sz[b];
  s.vertex1_root_steps = n - b;

  const int c = rng.uniform_int(1, n);  // arrival index of a second fixed vertex
  s.degree_of_random_vertex = outdeg[c] + (parent[c] != 0 ? 1 : 0);
  return s;
}

}  // namespace moran

#include "moran/bijection.hpp"

#include <algorithm>

namespace moran {

namespace {

void check_size(int n, std::size_t have) {
  if (n < 2) throw DomainError("bijection: n must be >= 2");
  if (have != static_cast<std::size_t>(n - 2))
    throw ValidationError("bijection: expected n-2 entries");
}

}  // namespace

void RestrictedVector::validate() const {
  check_size(n, entries.size());
  for (int l = 2; l <= n - 1; ++l) {
    const int u = entry(l);
    if (u < 1 || u > n || u == l)
      throw ValidationError("RestrictedVector: entry out of range at l=" + std::to_string(l));
  }
}

void CompressedVector::validate() const {
  check_size(n, entries.size());
  for (int l = 2; l <= n - 1; ++l) {
    const int w = entry(l);
    if (w < 1 || w > n - 1)
      throw ValidationError("CompressedVector: entry out of range at l=" + std::to_string(l));
  }
}

CompressedVector theta(const RestrictedVector& v) {
  v.validate();
  CompressedVector out{v.n, v.entries};
  for (int l = 2; l <= v.n - 1; ++l)
    if (v.entry(l) > l) out.entries[l - 2] -= 1;
  return out;
}

RestrictedVector theta_inv(const CompressedVector& v) {
  v.validate();
  RestrictedVector out{v.n, v.entries};
  for (int l = 2; l <= v.n - 1; ++l)
    if (v.entry(l) >= l) out.entries[l - 2] += 1;
  return out;
}

std::vector<std::vector<int>> functional_cycles(const CompressedVector& v) {
  v.validate();
  const int m = v.n - 1;
  // parent[x] = w_x for x >= 2, parent[1] = 0.
  std::vector<int> parent(m + 1, 0);
  for (int l = 2; l <= m; ++l) parent[l] = v.entry(l);

  std::vector<int> state(m + 1, 0);  // 0 unvisited, 1 on current walk, 2 done
  std::vector<std::vector<int>> cycles;
  for (int start = 1; start <= m; ++start) {
    if (state[start] != 0) continue;
    std::vector<int> walk;
    int x = start;
    while (x != 0 && state[x] == 0) {
      state[x] = 1;
      walk.push_back(x);
      x = parent[x];
    }
    if (x != 0 && state[x] == 1) {
      // Found a new cycle: the walk suffix starting at x, which follows
      // parent pointers. Reverse to get edge direction, rotate max first.
      auto it = std::find(walk.begin(), walk.end(), x);
      std::vector<int> cyc(it, walk.end());
      std::reverse(cyc.begin(), cyc.end());
      auto mx = std::max_element(cyc.begin(), cyc.end());
      std::rotate(cyc.begin(), mx, cyc.end());
      cycles.push_back(std::move(cyc));
    }
    for (int y : walk) state[y] = 2;
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return cycles;
}

RootedForest psi(const CompressedVector& v) {
  const auto cycles = functional_cycles(v);
  const int m = v.n - 1;
  std::vector<int> parent(m, 0);
  for (int l = 2; l <= m; ++l) parent[l - 1] = v.entry(l);
  parent[0] = 0;

  // Rewire each cycle's max-outgoing edge m_i -> s_i to m_i -> s_{i-1},
  // chaining the cycles onto the path that ends at vertex 1.
  int prev = 1;  // s_0
  for (const auto& cyc : cycles) {
    const int mi = cyc.front();
    const int si = cyc.size() == 1 ? mi : cyc[1];
    parent[prev - 1] = mi;
    prev = si;
  }
  parent[prev - 1] = 0;  // root = s_k
  return RootedForest(m, std::move(parent));
}

std::vector<int> psi_path_word(const CompressedVector& v) {
  std::vector<int> word{1};
  for (const auto& cyc : functional_cycles(v))
    word.insert(word.end(), cyc.begin(), cyc.end());
  return word;
}

CompressedVector psi_inv(const RootedForest& tree) {
  const int m = tree.n();
  if (tree.roots().size() != 1)
    throw ValidationError("psi_inv: input must be a single rooted tree");
  CompressedVector out{m + 1, std::vector<int>(std::max(0, m - 1))};
  for (int x = 2; x <= m; ++x) out.entries[x - 2] = tree.parent(x);

  // Ascending path from vertex 1 to the root; its left-to-right maxima are
  // the cycle maxima m_1 < ... < m_k.
  std::vector<int> path;
  for (int x = 1; x != 0; x = tree.parent(x)) path.push_back(x);

  std::vector<std::vector<int>> segments;
  int best = 0;
  for (int x : path) {
    if (x > best) {
      best = x;
      segments.emplace_back();
    }
    segments.back().push_back(x);
  }
  // segments[0] == {1}; each later segment is a cycle traversed in parent
  // order: (m_i, a_1, ..., s_i). Undo the rewiring by closing each cycle.
  for (std::size_t i = 1; i < segments.size(); ++i) {
    const auto& seg = segments[i];
    for (std::size_t j = 0; j + 1 < seg.size(); ++j)
      out.entries[seg[j] - 2] = seg[j + 1];
    out.entries[seg.back() - 2] = seg.front();
  }
  out.validate();
  return out;
}

RootedForest phi(const RestrictedVector& v) { return psi(theta(v)); }

RestrictedVector phi_inv(const RootedForest& tree) {
  return theta_inv(psi_inv(tree));
}

std::vector<std::pair<int, int>> increasing_attachment_edges(const RestrictedVector& v) {
  v.validate();
  std::vector<std::pair<int, int>> edges;
  for (int l = 2; l <= v.n - 1; ++l)
    if (v.entry(l) < l) edges.emplace_back(v.entry(l), l);
  return edges;
}

std::vector<std::pair<int, int>> increasing_edges(const RootedForest& f) {
  std::vector<std::pair<int, int>> edges;
  for (int x = 1; x <= f.n(); ++x) {
    const int p = f.parent(x);
    if (p != 0 && p < x) edges.emplace_back(p, x);
  }
  return edges;
}

}  // namespace moran

#include "moran/oracle.hpp"

#include <algorithm>
#include <queue>

#include "moran/chain.hpp"

namespace moran {

Rational ExactForestDistribution::total() const {
  Rational s = 0;
  for (const auto& [f, p] : prob) s += p;
  return s;
}

Rational ExactForestDistribution::at(const RootedForest& f) const {
  const auto it = prob.find(f);
  return it == prob.end() ? Rational(0) : it->second;
}

Rational tv_distance(const ExactForestDistribution& a,
                     const ExactForestDistribution& b) {
  Rational s = 0;
  for (const auto& [f, p] : a.prob) {
    Rational d = p - b.at(f);
    if (d < 0) d = -d;
    s += d;
  }
  for (const auto& [f, p] : b.prob)
    if (a.prob.find(f) == a.prob.end()) s += p;
  return s / 2;
}

ExactForestDistribution ua_exact(int n) {
  if (n < 2) throw DomainError("ua_exact: n must be >= 2");
  if (n > 5) throw TooLarge("ua_exact: enumeration limited to n <= 5");

  BigInt fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  const Rational weight = Rational(1, ipow(BigInt(n - 1), n) * fact);

  ExactForestDistribution dist;
  dist.n = n;

  // Odometer over attachment vectors: u[l] ranges over {1..n} \ {l}.
  std::vector<int> u(n + 1, 0);
  for (int l = 1; l <= n; ++l) u[l] = (l == 1) ? 2 : 1;
  std::vector<int> sigma(n);
  for (;;) {
    std::vector<int> pre(n + 1, 0);
    for (int l = 2; l <= n; ++l)
      if (u[l] < l) pre[l] = u[l];

    for (int i = 0; i < n; ++i) sigma[i] = i + 1;
    do {
      std::vector<int> parent(n, 0);
      for (int l = 2; l <= n; ++l)
        if (pre[l] != 0) parent[sigma[l - 1] - 1] = sigma[pre[l] - 1];
      dist.prob[RootedForest(n, std::move(parent))] += weight;
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    int l = n;
    for (; l >= 1; --l) {
      ++u[l];
      if (u[l] == l) ++u[l];
      if (u[l] <= n) break;
      u[l] = (l == 1) ? 2 : 1;
    }
    if (l == 0) break;
  }
  return dist;
}

std::vector<RootedForest> enumerate_forests(int n) {
  std::vector<RootedForest> out;
  std::vector<int> p(n, 0);
  for (;;) {
    bool self = false, has_edge = false;
    for (int v = 1; v <= n; ++v) {
      if (p[v - 1] == v) self = true;
      if (p[v - 1] != 0) has_edge = true;
    }
    if (!self && has_edge) {
      try {
        out.emplace_back(n, p);
      } catch (const CycleDetected&) {
      }
    }
    int i = 0;
    while (i < n && p[i] == n) p[i++] = 0;
    if (i == n) break;
    ++p[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

ExactForestDistribution stationary_solve(int n) {
  if (n < 2) throw DomainError("stationary_solve: n must be >= 2");
  if (n > 4) throw TooLarge("stationary_solve: state space limited to n <= 4");

  const std::vector<RootedForest> states = enumerate_forests(n);
  const int m = static_cast<int>(states.size());
  std::map<RootedForest, int> index;
  for (int i = 0; i < m; ++i) index[states[i]] = i;

  const Rational step_weight = Rational(1, BigInt(n) * (n - 1));
  std::vector<std::vector<Rational>> K(m, std::vector<Rational>(m, Rational(0)));
  for (int i = 0; i < m; ++i) {
    const DirectedGraph g = states[i].to_digraph();
    for (int u = 1; u <= n; ++u)
      for (int v = 1; v <= n; ++v) {
        if (u == v) continue;
        const RootedForest next = validate_forest(moran_step(g, MoranStep{u, v}));
        const auto it = index.find(next);
        if (it == index.end())
          throw InternalCheckError("stationary_solve: step left the state space");
        K[i][it->second] += step_weight;
      }
    Rational row = 0;
    for (int j = 0; j < m; ++j) row += K[i][j];
    if (row != 1) throw SolverDegenerate("stationary_solve: kernel row sum != 1");
  }

  // pi K = pi with sum pi = 1: replace the first balance equation by the
  // normalization row, then eliminate over the rationals.
  std::vector<std::vector<Rational>> A(m, std::vector<Rational>(m + 1, Rational(0)));
  for (int i = 0; i < m; ++i) A[0][i] = 1;
  A[0][m] = 1;
  for (int j = 1; j < m; ++j)
    for (int i = 0; i < m; ++i)
      A[j][i] = K[i][j] - Rational(i == j ? 1 : 0);

  for (int col = 0; col < m; ++col) {
    int piv = -1;
    for (int r = col; r < m; ++r)
      if (A[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw SolverDegenerate("stationary_solve: singular system");
    std::swap(A[col], A[piv]);
    const Rational d = A[col][col];
    for (int c = col; c <= m; ++c) A[col][c] /= d;
    for (int r = 0; r < m; ++r) {
      if (r == col || A[r][col] == 0) continue;
      const Rational f = A[r][col];
      for (int c = col; c <= m; ++c) A[r][c] -= f * A[col][c];
    }
  }

  ExactForestDistribution dist;
  dist.n = n;
  for (int i = 0; i < m; ++i) dist.prob[states[i]] = A[i][m];
  return dist;
}

std::vector<std::vector<int>> prufer_decode(int m, const std::vector<int>& word) {
  if (static_cast<int>(word.size()) != std::max(0, m - 2))
    throw ValidationError("prufer_decode: word must have length m-2");
  std::vector<std::vector<int>> adj(m + 1);
  if (m == 1) return adj;
  std::vector<int> deg(m + 1, 1);
  for (int w : word) ++deg[w];
  std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
  for (int v = 1; v <= m; ++v)
    if (deg[v] == 1) leaves.push(v);
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
  return adj;
}

RootedForest orient_tree(const std::vector<std::vector<int>>& adj, int root) {
  const int m = static_cast<int>(adj.size()) - 1;
  std::vector<int> parent(m, 0);
  std::vector<bool> visited(m + 1, false);
  std::vector<int> stack{root};
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

std::vector<BigInt> count_trees_by_increasing_edges(int m) {
  if (m < 1) throw DomainError("count_trees_by_increasing_edges: m must be >= 1");
  if (m > 7)
    throw TooLarge("count_trees_by_increasing_edges: enumeration limited to m <= 7");
  std::vector<BigInt> table(m, 0);
  if (m == 1) {
    table[0] = 1;
    return table;
  }
  std::vector<int> word(m - 2, 1);
  for (;;) {
    const auto adj = prufer_decode(m, word);
    for (int root = 1; root <= m; ++root) {
      const RootedForest tree = orient_tree(adj, root);
      int k = 0;
      for (int v = 1; v <= m; ++v) {
        const int p = tree.parent(v);
        if (p != 0 && p < v) ++k;
      }
      ++table[k];
    }
    std::size_t i = 0;
    while (i < word.size() && word[i] == m) word[i++] = 1;
    if (i == word.size()) break;
    ++word[i];
  }
  return table;
}

RationalPmf marginal(const ExactForestDistribution& dist,
                     const std::function<int(const RootedForest&)>& statistic) {
  std::map<int, Rational> acc;
  for (const auto& [f, p] : dist.prob) acc[statistic(f)] += p;
  const int lo = acc.begin()->first;
  const int hi = acc.rbegin()->first;
  std::vector<Rational> prob(hi - lo + 1, Rational(0));
  for (const auto& [k, p] : acc) prob[k - lo] = p;
  return RationalPmf(lo, std::move(prob));
}

}  // namespace moran

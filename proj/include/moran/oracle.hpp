#pragma once

#include <functional>
#include <map>
#include <vector>

#include "moran/forest.hpp"
#include "moran/pmf.hpp"
#include "moran/rational.hpp"

namespace moran {

// Exact distribution over rooted forests, rational weights, brute force only.
struct ExactForestDistribution {
  int n = 0;
  std::map<RootedForest, Rational> prob;

  Rational total() const;
  Rational at(const RootedForest& f) const;
};

Rational tv_distance(const ExactForestDistribution& a,
                     const ExactForestDistribution& b);

// Enumerates all (n-1)^n attachment vectors times n! relabelings, each with
// equal weight. Ground truth for the Moran forest at n <= 5.
ExactForestDistribution ua_exact(int n);

// All non-empty rooted forests on {1..n}.
std::vector<RootedForest> enumerate_forests(int n);

// Builds the full transition kernel of the chain restricted to non-empty
// rooted forests and solves pi K = pi, sum pi = 1 with rational elimination.
ExactForestDistribution stationary_solve(int n);

// a(m, k) by brute force: every Pruefer word times every root, counting
// increasing edges of each rooted tree.
std::vector<BigInt> count_trees_by_increasing_edges(int m);

// Decode a Pruefer word over {1..m} (length m-2) into tree adjacency lists.
std::vector<std::vector<int>> prufer_decode(int m, const std::vector<int>& word);

// Orient an adjacency structure from the given root into a parent array.
RootedForest orient_tree(const std::vector<std::vector<int>>& adj, int root);

// Pushforward of an exact distribution through an integer statistic.
RationalPmf marginal(const ExactForestDistribution& dist,
                     const std::function<int(const RootedForest&)>& statistic);

}  // namespace moran

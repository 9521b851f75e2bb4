#pragma once

#include <vector>

#include "moran/forest.hpp"

namespace moran {

// Attachment entries u_l for l = 2..n-1 with u_l in {1..n} \ {l}.
// Stored with entry(l) addressing; internally index l-2.
struct RestrictedVector {
  int n;
  std::vector<int> entries;  // size n-2

  int entry(int l) const { return entries[l - 2]; }
  void validate() const;
};

// Entries w_l in {1..n-1} for l = 2..n-1; the image of theta.
struct CompressedVector {
  int n;
  std::vector<int> entries;  // size n-2

  int entry(int l) const { return entries[l - 2]; }
  void validate() const;
};

// Entrywise shift closing the gap at l: u_l -> u_l - 1{u_l > l}.
CompressedVector theta(const RestrictedVector& v);
RestrictedVector theta_inv(const CompressedVector& v);

// Cycle decomposition of the functional digraph of a compressed vector.
// Each cycle is listed in edge direction starting from its largest element,
// cycles ordered by increasing largest element.
std::vector<std::vector<int>> functional_cycles(const CompressedVector& v);

// Rewires the cycles of the functional digraph into a single rooted tree on
// {1..n-1}. The increasing edges of the output are exactly the pairs
// (w_l, l) with w_l < l.
RootedForest psi(const CompressedVector& v);
CompressedVector psi_inv(const RootedForest& tree);

// The word (1, C_1, ..., C_k) encoding the path from the root to vertex 1;
// its left-to-right maxima mark the cycle starts.
std::vector<int> psi_path_word(const CompressedVector& v);

RootedForest phi(const RestrictedVector& v);
RestrictedVector phi_inv(const RootedForest& tree);

// Edges of the UA pre-relabel forest restricted to {1..n-1}: (u_l, l) for
// every l with u_l < l.
std::vector<std::pair<int, int>> increasing_attachment_edges(const RestrictedVector& v);

// Increasing edges of a rooted forest (edges u -> v away from a root with u < v).
std::vector<std::pair<int, int>> increasing_edges(const RootedForest& f);

}  // namespace moran

#pragma once

// e_S-monotone paths (S a suffix block of [n]) and their lift to generic
// monotone paths that satisfy the enhanced-steps criterion.

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "mpp/hypersimplex.hpp"

namespace mpp {

struct ESPath {
  int n = 0;
  int k = 0;
  int s = 0;                              // S = [n-s+1, n]
  std::vector<Support> bases;             // B_1 .. B_{m+1}
  std::vector<std::pair<int, int>> swaps; // (a_i ∉ S, b_i ∈ S)

  friend bool operator==(const ESPath&, const ESPath&) = default;
};

// Sorting permutation that maps an arbitrary S ⊆ [n] onto the suffix
// [n-|S|+1, n]: result[i-1] is the new label of coordinate i.
std::vector<int> suffix_normalization(int n, const std::vector<int>& subset);

// Every e_S path: B_1 ranges over the minimisers of |B ∩ S| in lexicographic
// order, then swaps in lexicographic (a, b) order. Throws InvalidParameter
// unless 1 <= s <= n-1 and 1 <= k <= n-1.
std::vector<ESPath> enumerate_es_paths(int n, int k, int s);

// Throws InvalidParameter when the bases/swaps are inconsistent.
void validate_es_path(const ESPath& path);

// Prefix block x_p -> a (added elements in decreasing order of the middle step
// that later removes them; elements that never leave go first), the middle
// block a_i -> b_i, and a suffix block b -> y_q (removed elements in
// decreasing order of the step that added them; elements present from B_1 go
// last). The freed x's and the incoming y's are both taken in decreasing
// order; with that choice every lift checked on n <= 6, k <= 3 is coherent.
MonotonePath lift(const ESPath& path);

}  // namespace mpp

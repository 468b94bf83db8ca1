#pragma once

// Diagonal-avoiding lattice paths in [n]^k and their bijection with monotone
// paths on Δ(n,k). A lattice path keeps track of *which coordinate* moved, so
// the same vertex may appear under different orderings of its support.

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "mpp/hypersimplex.hpp"

namespace mpp {

using LatticePoint = std::vector<int>;

class LatticePath {
 public:
  // Validates start (k, k-1, ..., 1), final coordinate set {n-k+1..n},
  // distinct coordinates per point and one strictly increasing coordinate per
  // step. Throws InvalidLatticePath.
  LatticePath(int n, int k, std::vector<LatticePoint> points);

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t length() const { return points_.size(); }
  const std::vector<LatticePoint>& points() const { return points_; }
  const LatticePoint& operator[](std::size_t i) const { return points_[i]; }

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
  friend std::strong_ordering operator<=>(const LatticePath& a, const LatticePath& b) {
    if (auto cmp = a.n_ <=> b.n_; cmp != 0) return cmp;
    if (auto cmp = a.k_ <=> b.k_; cmp != 0) return cmp;
    return a.points_ <=> b.points_;
  }

 private:
  int n_;
  int k_;
  std::vector<LatticePoint> points_;
};

LatticePoint lattice_start(int k);

// Enhanced steps read off coordinate changes; `common` holds the unchanged
// coordinates, sorted.
std::vector<EnhancedStep> lattice_steps(const LatticePath& path);

// Builds the lattice path with the given steps starting at (k, ..., 1).
// Throws InvalidLatticePath when a step does not apply.
LatticePath lattice_from_steps(int n, int k, const std::vector<EnhancedStep>& steps);

LatticePath lattice_path_of(const MonotonePath& path);
MonotonePath path_of_lattice(const LatticePath& path);

// Restriction of a dimension-2 path of size n+1 (>= 4) to size n: cap the
// value n+1 to n, retarget the final point, then drop repeated points.
// Throws Unsupported for k != 2.
LatticePath restrict_path(const LatticePath& path);

struct DaPathCounts {
  Integer total;
  // Dimension 2 only: d = paths whose last step is (x -> n over n-1), s = rest.
  std::optional<Integer> ending_with_top_step;
  std::optional<Integer> other;
};

// Totals by dynamic programming over the C(n,k) vertices. Throws
// ResourceLimit when C(n,k) exceeds `max_vertices`.
DaPathCounts count_all_da_paths(int n, int k, std::size_t max_vertices = 2'000'000);

}  // namespace mpp

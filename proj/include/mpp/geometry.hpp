#pragma once

// The monotone path polytope M(n,k) as the convex hull of the points ψ(P),
// one per monotone path, and an exact vertex test.

#include <cstddef>
#include <vector>

#include "mpp/hypersimplex.hpp"

namespace mpp {

struct EmbeddedPoint {
  RationalVector coords;
  // Index of the source path in canonical enumeration order.
  std::size_t source = 0;
};

// Σ_j ⟨v_j − v_{j−1}, c⟩ / (2⟨v_max − v_min, c⟩) · (v_j + v_{j−1}).
// Coordinates are in the sorted frame of `c`.
EmbeddedPoint psi_embed(const MonotonePath& path, const Direction& c, std::size_t source = 0);

// True iff cloud[index] is not a convex combination of the other points of
// the cloud that differ from it. Exact LP feasibility.
bool is_extreme(std::size_t index, const std::vector<EmbeddedPoint>& cloud);

struct PolytopeVertexReport {
  std::vector<MonotonePath> paths;
  std::vector<EmbeddedPoint> points;  // points[i] is ψ(paths[i])
  std::vector<bool> is_vertex;        // per path
  std::vector<bool> lp_coherent;      // per path
  std::size_t distinct_points = 0;
  std::size_t merged_paths = 0;       // paths whose point coincides with an earlier one
  std::size_t vertex_count = 0;       // distinct extreme points
  std::size_t disagreements = 0;      // is_vertex != lp_coherent
};

// Embeds every monotone path, merges coincident points, tests each distinct
// point for extremeness and compares with the LP coherence oracle.
// Throws ResourceLimit beyond `max_paths`. threads > 1 uses the OpenMP kernels.
PolytopeVertexReport mpp_vertices(int n, int k, const Direction& c, std::size_t max_paths = 200'000,
                                  int threads = 1);

}  // namespace mpp

#pragma once

// Deciding coherence of monotone paths on Δ(n,k).
//
// A secondary direction ω captures a path when, at every vertex v_i, the next
// vertex v_{i+1} strictly maximises the slope ⟨ω, J − v_i⟩ / ⟨c, J − v_i⟩ over
// all k-sets J of larger c-weight. Clearing the (positive) denominators turns
// each comparison into one strict linear inequality ⟨a, ω⟩ > 0; the set of
// capturing ω is the open cone cut out by those rows.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mpp/hypersimplex.hpp"

namespace mpp {

struct CaptureCone {
  int n = 0;
  std::vector<RationalVector> strict_rows;  // each row a means ⟨a, ω⟩ > 0
};

struct CoherenceCertificate {
  bool coherent = false;
  std::optional<RationalVector> witness;  // present iff coherent
};

CaptureCone capture_cone(const MonotonePath& path, const Direction& c);

// Exact decision: maximise δ s.t. ⟨a, ω⟩ >= δ for every row and -1 <= ω_i <= 1.
// The cone is scale invariant, so it is non-empty iff the optimum is positive.
CoherenceCertificate is_coherent_lp(const MonotonePath& path, const Direction& c);

// Checks ⟨a, ω⟩ > 0 row by row, independently of the LP.
bool strictly_inside(const CaptureCone& cone, const RationalVector& omega);

// Greedy upper path of the shadow on span(c, ω). Throws NonGenericOmega when
// two improving neighbours tie for the maximal slope.
MonotonePath captured_path(const RationalVector& omega, const Direction& c, int n, int k);

struct StepPair {
  std::size_t first = 0;   // 0-based index of the earlier step (i -> j over A)
  std::size_t second = 0;  // 0-based index of the later step  (x -> y over Z)
};

// Enhanced-steps criterion: for every pair (i -> j over A) ≺ (x -> y over Z)
// with x < j, require j ∈ Z or x ∈ A. Returns the first violating pair, or
// nullopt when the criterion holds.
std::optional<StepPair> criterion_violation(const MonotonePath& path);

inline bool satisfies_criterion(const MonotonePath& path) { return !criterion_violation(path).has_value(); }

struct GapSearchResult {
  std::optional<MonotonePath> path;
  int n = 0;                   // size at which the path was found
  std::size_t examined = 0;    // monotone paths streamed
  std::size_t lp_calls = 0;    // criterion-passing paths sent to the LP
};

// First monotone path (n ascending from k+1, canonical order within each n)
// that satisfies the criterion but is not LP-coherent. Throws ResourceLimit
// if more than `max_paths` paths would be streamed.
GapSearchResult search_criterion_gap(int k, int n_max, std::size_t max_paths = 20'000'000);

}  // namespace mpp

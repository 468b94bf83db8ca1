#pragma once

// Vertices, edges and monotone paths of the hypersimplex Δ(n,k).
//
// Indices are 1-based. A Direction is always stored sorted, so that for any
// edge S -> (S \ {x}) ∪ {y} the step is improving exactly when x < y.

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "mpp/rational.hpp"

namespace mpp {

class Direction {
 public:
  // Sorts `values` increasingly. permutation()[i] is the caller's 1-based
  // coordinate that ended up at sorted position i + 1.
  static Direction from_values(RationalVector values);

  int n() const { return static_cast<int>(values_.size()); }
  const Rational& operator[](int index) const { return values_[index - 1]; }
  const RationalVector& values() const { return values_; }
  const std::vector<int>& permutation() const { return permutation_; }
  bool is_identity_permutation() const;

 private:
  Direction(RationalVector values, std::vector<int> permutation)
      : values_(std::move(values)), permutation_(std::move(permutation)) {}

  RationalVector values_;
  std::vector<int> permutation_;
};

// c = (1, 2, ..., n).
Direction default_direction(int n);

// Support of a 0/1 vertex of Δ(n,k): a strictly increasing k-subset of [n].
class Support {
 public:
  Support(int n, std::vector<int> elems);

  static Support lowest(int n, int k);   // {1..k}
  static Support highest(int n, int k);  // {n-k+1..n}

  int n() const { return n_; }
  int k() const { return static_cast<int>(elems_.size()); }
  const std::vector<int>& elems() const { return elems_; }
  bool contains(int index) const;

  // (this \ {out}) ∪ {in}; requires out ∈ this, in ∉ this.
  Support swapped(int out, int in) const;

  std::vector<int> indicator() const;  // length-n 0/1 vector

  friend bool operator==(const Support&, const Support&) = default;
  friend std::strong_ordering operator<=>(const Support& a, const Support& b) {
    if (auto cmp = a.n_ <=> b.n_; cmp != 0) return cmp;
    return a.elems_ <=> b.elems_;
  }

 private:
  int n_;
  std::vector<int> elems_;
};

// "flip x to y with common support Z".
struct EnhancedStep {
  int x = 0;
  int y = 0;
  std::vector<int> common;  // Z, strictly increasing

  friend bool operator==(const EnhancedStep&, const EnhancedStep&) = default;
};

class MonotonePath {
 public:
  // Validates endpoints, edge adjacency and that every step is improving.
  MonotonePath(int n, int k, std::vector<Support> supports);

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t length() const { return supports_.size(); }
  const std::vector<Support>& supports() const { return supports_; }
  const Support& operator[](std::size_t i) const { return supports_[i]; }

  friend bool operator==(const MonotonePath&, const MonotonePath&) = default;
  friend std::strong_ordering operator<=>(const MonotonePath& a, const MonotonePath& b) {
    if (auto cmp = a.n_ <=> b.n_; cmp != 0) return cmp;
    if (auto cmp = a.k_ <=> b.k_; cmp != 0) return cmp;
    return a.supports_ <=> b.supports_;
  }

 private:
  int n_;
  int k_;
  std::vector<Support> supports_;
};

Rational weight(const Support& support, const Direction& c);

// Neighbours T = (S \ {x}) ∪ {y} with c_x < c_y, in lexicographic order of T.
std::vector<Support> improving_neighbors(const Support& support, const Direction& c);

void validate_dimensions(int n, int k);

// Return false from the visitor to stop the stream early.
using PathVisitor = std::function<bool(const MonotonePath&)>;

// Depth-first stream of every monotone path from {1..k} to {n-k+1..n},
// ordered lexicographically by the sequence of (x, y) swaps. Returns the
// number of paths visited.
std::size_t enumerate_monotone_paths(int n, int k, const Direction& c, const PathVisitor& visit);

// Materialises the stream; throws ResourceLimit beyond `max_paths`.
std::vector<MonotonePath> collect_monotone_paths(int n, int k, const Direction& c,
                                                 std::size_t max_paths = 5'000'000);

// Count-only mode: number of monotone paths, by dynamic programming over the
// vertex DAG (no path is materialised).
Integer count_monotone_paths(int n, int k);

std::vector<EnhancedStep> enhanced_steps(const MonotonePath& path);

// Inverse of enhanced_steps. Throws InvalidStepSequence on a broken chain or
// wrong endpoints.
MonotonePath path_from_steps(int n, int k, const std::vector<EnhancedStep>& steps);

}  // namespace mpp

#pragma once

// Inductive generation of coherent lattice paths of dimension 2.
//
// Every coherent path of size n >= 4 ends in exactly one of three ways, and
// each of those admits a fixed number of coherent extensions to size n+1
// (3, 4 and 5 respectively) whose restriction is the original path.

#include <cstddef>
#include <functional>
#include <vector>

#include "mpp/lattice.hpp"

namespace mpp {

enum class EndingKind { TypeI, TypeII, TypeIII };

struct EndingType {
  EndingKind kind = EndingKind::TypeI;
  int x = 0;
  // TypeII: y_1 < ... < y_m = n-1 (m >= 3). TypeIII: {y}.
  std::vector<int> ys;
};

const char* to_string(EndingKind kind);

// Dimension-2 criterion on lattice steps: for (i -> j over a) ≺ (x -> y over z)
// with x < j, require j = z or x = a. Throws Unsupported for k != 2.
bool is_coherent_lattice_path(const LatticePath& path);

// Throws ClassificationError when no ending matches (or more than one does),
// and InvalidParameter for size < 4 or k != 2.
EndingType classify(const LatticePath& path);

// All coherent size-(n+1) paths restricting to `path`, in case order
// (a), (b), ... Each child is validated as a diagonal-avoiding path.
std::vector<LatticePath> extend(const LatticePath& path);

// Coherent paths of size `n` in canonical order: n = 3 and n = 4 by filtering
// all diagonal-avoiding paths, then repeated extension.
std::vector<LatticePath> generate_coherent(int n);

// Depth-first variant that never holds a whole level in memory. Return false
// from the visitor to stop early.
void for_each_coherent(int n, const std::function<bool(const LatticePath&)>& visit);

// Size-n descendants of `root` under repeated extension, in the same order as
// for_each_coherent. Returns false if the visitor stopped the walk.
bool for_each_descendant(const LatticePath& root, int n, const std::function<bool(const LatticePath&)>& visit);

// Number of coherent paths of size n per ending type, by streaming.
struct TypeCensus {
  std::size_t type_i = 0;
  std::size_t type_ii = 0;
  std::size_t type_iii = 0;
  std::size_t total() const { return type_i + type_ii + type_iii; }
};
TypeCensus census_by_type(const std::vector<LatticePath>& paths);

}  // namespace mpp

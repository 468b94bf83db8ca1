#pragma once

// Data-parallel loops over independent items. `omp` versions split the items
// across OpenMP threads; `serial` versions are the reference used by the
// tests and the benchmark. Both return results in input order.

#include <cstddef>
#include <functional>
#include <vector>

#include "mpp/geometry.hpp"
#include "mpp/hypersimplex.hpp"
#include "mpp/lattice.hpp"

namespace mpp {

struct CoherenceVerdict {
  bool lp = false;
  bool criterion = false;
};

namespace serial {
std::vector<CoherenceVerdict> coherence_census(const std::vector<MonotonePath>& paths, const Direction& c);
std::vector<bool> extremeness_census(const std::vector<EmbeddedPoint>& cloud);
// Children of every parent, parents in order, children in case order.
std::vector<LatticePath> extend_level(const std::vector<LatticePath>& parents);
}  // namespace serial

namespace omp {
// threads <= 0 leaves the OpenMP default.
std::vector<CoherenceVerdict> coherence_census(const std::vector<MonotonePath>& paths, const Direction& c,
                                               int threads = 0);
std::vector<bool> extremeness_census(const std::vector<EmbeddedPoint>& cloud, int threads = 0);
std::vector<LatticePath> extend_level(const std::vector<LatticePath>& parents, int threads = 0);

// Same stream and order as the serial for_each_coherent: subtrees below a
// fixed frontier are expanded in parallel in blocks, then visited in order.
void for_each_coherent(int n, const std::function<bool(const LatticePath&)>& visit, int threads = 0);
}  // namespace omp

}  // namespace mpp

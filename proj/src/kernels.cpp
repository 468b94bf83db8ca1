#include "mpp/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <mutex>

#include "mpp/coherence.hpp"
#include "mpp/generator.hpp"

namespace mpp {

namespace {

CoherenceVerdict verdict(const MonotonePath& path, const Direction& c) {
  return {is_coherent_lp(path, c).coherent, satisfies_criterion(path)};
}

// Runs body(i) for i in [0, count) across threads; the first exception thrown
// by any iteration is rethrown after the loop.
template <class Body>
void parallel_for(std::size_t count, int threads, Body body) {
  std::exception_ptr error;
  std::mutex error_mutex;
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
  for (long long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

namespace serial {

std::vector<CoherenceVerdict> coherence_census(const std::vector<MonotonePath>& paths, const Direction& c) {
  std::vector<CoherenceVerdict> out;
  out.reserve(paths.size());
  for (const auto& p : paths) out.push_back(verdict(p, c));
  return out;
}

std::vector<bool> extremeness_census(const std::vector<EmbeddedPoint>& cloud) {
  std::vector<bool> out;
  out.reserve(cloud.size());
  for (std::size_t i = 0; i < cloud.size(); ++i) out.push_back(is_extreme(i, cloud));
  return out;
}

std::vector<LatticePath> extend_level(const std::vector<LatticePath>& parents) {
  std::vector<LatticePath> out;
  for (const auto& p : parents)
    for (auto& child : extend(p)) out.push_back(std::move(child));
  return out;
}

}  // namespace serial

namespace omp {

std::vector<CoherenceVerdict> coherence_census(const std::vector<MonotonePath>& paths, const Direction& c,
                                               int threads) {
  std::vector<CoherenceVerdict> out(paths.size());
  parallel_for(paths.size(), threads, [&](std::size_t i) { out[i] = verdict(paths[i], c); });
  return out;
}

std::vector<bool> extremeness_census(const std::vector<EmbeddedPoint>& cloud, int threads) {
  // vector<bool> packs bits, so concurrent writes go through a char buffer.
  std::vector<char> flags(cloud.size(), 0);
  parallel_for(cloud.size(), threads, [&](std::size_t i) { flags[i] = is_extreme(i, cloud) ? 1 : 0; });
  return {flags.begin(), flags.end()};
}

std::vector<LatticePath> extend_level(const std::vector<LatticePath>& parents, int threads) {
  std::vector<std::vector<LatticePath>> children(parents.size());
  parallel_for(parents.size(), threads, [&](std::size_t i) { children[i] = extend(parents[i]); });
  std::vector<LatticePath> out;
  for (auto& group : children)
    for (auto& child : group) out.push_back(std::move(child));
  return out;
}

void for_each_coherent(int n, const std::function<bool(const LatticePath&)>& visit, int threads) {
  constexpr int frontier_size = 6;
  if (n <= frontier_size) {
    mpp::for_each_coherent(n, visit);
    return;
  }
  const auto frontier = generate_coherent(frontier_size);
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
  const std::size_t block = 8 * static_cast<std::size_t>(nthreads);
  for (std::size_t start = 0; start < frontier.size(); start += block) {
    const std::size_t count = std::min(block, frontier.size() - start);
    std::vector<std::vector<LatticePath>> buffers(count);
    parallel_for(count, threads, [&](std::size_t i) {
      for_each_descendant(frontier[start + i], n, [&](const LatticePath& p) {
        buffers[i].push_back(p);
        return true;
      });
    });
    for (const auto& buffer : buffers)
      for (const auto& p : buffer)
        if (!visit(p)) return;
  }
}

}  // namespace omp

}  // namespace mpp

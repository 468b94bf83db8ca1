#include "mpp/geometry.hpp"

#include <map>

#include "mpp/coherence.hpp"
#include "mpp/kernels.hpp"
#include "mpp/lp.hpp"

namespace mpp {

EmbeddedPoint psi_embed(const MonotonePath& path, const Direction& c, std::size_t source) {
  const int n = path.n();
  const Rational span = 2 * (weight(path.supports().back(), c) - weight(path.supports().front(), c));
  EmbeddedPoint p{RationalVector(static_cast<std::size_t>(n), 0), source};
  for (std::size_t j = 1; j < path.length(); ++j) {
    const Support& a = path[j - 1];
    const Support& b = path[j];
    const Rational w = (weight(b, c) - weight(a, c)) / span;
    for (int e : a.elems()) p.coords[e - 1] += w;
    for (int e : b.elems()) p.coords[e - 1] += w;
  }
  return p;
}

bool is_extreme(std::size_t index, const std::vector<EmbeddedPoint>& cloud) {
  const auto& target = cloud[index].coords;
  std::vector<const RationalVector*> others;
  for (std::size_t i = 0; i < cloud.size(); ++i)
    if (i != index && cloud[i].coords != target) others.push_back(&cloud[i].coords);
  if (others.empty()) return true;

  // Σ λ_i s_i = p, Σ λ_i = 1, λ >= 0.
  const std::size_t d = target.size();
  lp::Matrix A(d + 1, RationalVector(others.size()));
  RationalVector b(d + 1);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t i = 0; i < others.size(); ++i) A[r][i] = (*others[i])[r];
    b[r] = target[r];
  }
  for (std::size_t i = 0; i < others.size(); ++i) A[d][i] = 1;
  b[d] = 1;
  return !lp::find_nonnegative_solution(A, b).has_value();
}

PolytopeVertexReport mpp_vertices(int n, int k, const Direction& c, std::size_t max_paths, int threads) {
  PolytopeVertexReport report;
  report.paths = collect_monotone_paths(n, k, c, max_paths);
  const std::size_t count = report.paths.size();

  std::map<RationalVector, std::size_t> first_with;
  std::vector<std::size_t> representative(count);
  std::vector<EmbeddedPoint> distinct;
  for (std::size_t i = 0; i < count; ++i) {
    report.points.push_back(psi_embed(report.paths[i], c, i));
    auto [it, inserted] = first_with.emplace(report.points[i].coords, distinct.size());
    if (inserted) distinct.push_back(report.points[i]);
    else ++report.merged_paths;
    representative[i] = it->second;
  }
  report.distinct_points = distinct.size();

  const bool parallel = threads > 1;
  const std::vector<bool> extreme =
      parallel ? omp::extremeness_census(distinct, threads) : serial::extremeness_census(distinct);
  for (bool e : extreme)
    if (e) ++report.vertex_count;
  const auto verdicts = parallel ? omp::coherence_census(report.paths, c, threads)
                                 : serial::coherence_census(report.paths, c);
  for (std::size_t i = 0; i < count; ++i) {
    report.is_vertex.push_back(extreme[representative[i]]);
    report.lp_coherent.push_back(verdicts[i].lp);
    if (report.is_vertex.back() != report.lp_coherent.back()) ++report.disagreements;
  }
  return report;
}

}  // namespace mpp

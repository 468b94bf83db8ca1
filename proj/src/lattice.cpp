#include "mpp/lattice.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "mpp/errors.hpp"

namespace mpp {

namespace {

std::vector<int> sorted_copy(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<int> others(const LatticePoint& point, std::size_t skip) {
  std::vector<int> out;
  for (std::size_t q = 0; q < point.size(); ++q)
    if (q != skip) out.push_back(point[q]);
  return sorted_copy(std::move(out));
}

}  // namespace

LatticePoint lattice_start(int k) {
  LatticePoint p(k);
  for (int q = 0; q < k; ++q) p[q] = k - q;
  return p;
}

LatticePath::LatticePath(int n, int k, std::vector<LatticePoint> points)
    : n_(n), k_(k), points_(std::move(points)) {
  if (n < 2 || k < 1 || k > n - 1)
    throw InvalidLatticePath("no lattice path of size " + std::to_string(n) + " and dimension " + std::to_string(k));
  if (points_.empty()) throw InvalidLatticePath("empty lattice path");
  if (points_.front() != lattice_start(k)) throw InvalidLatticePath("lattice path does not start at (k, ..., 1)");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    if (static_cast<int>(p.size()) != k) throw InvalidLatticePath("point has the wrong dimension");
    for (int v : p)
      if (v < 1 || v > n) throw InvalidLatticePath("coordinate outside [1, n]");
    auto s = sorted_copy(p);
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw InvalidLatticePath("point " + std::to_string(i + 1) + " touches a diagonal");
    if (i == 0) continue;
    const auto& prev = points_[i - 1];
    int changed = 0;
    bool increasing = true;
    for (int q = 0; q < k; ++q) {
      if (p[q] != prev[q]) {
        ++changed;
        increasing = increasing && p[q] > prev[q];
      }
    }
    if (changed != 1 || !increasing)
      throw InvalidLatticePath("step " + std::to_string(i) + " must increase exactly one coordinate");
  }
  auto last = sorted_copy(points_.back());
  for (int q = 0; q < k; ++q)
    if (last[q] != n - k + 1 + q) throw InvalidLatticePath("lattice path does not end at {n-k+1..n}");
}

std::vector<EnhancedStep> lattice_steps(const LatticePath& path) {
  std::vector<EnhancedStep> steps;
  for (std::size_t i = 0; i + 1 < path.length(); ++i) {
    const auto& a = path[i];
    const auto& b = path[i + 1];
    for (std::size_t q = 0; q < a.size(); ++q)
      if (a[q] != b[q]) steps.push_back({a[q], b[q], others(a, q)});
  }
  return steps;
}

LatticePath lattice_from_steps(int n, int k, const std::vector<EnhancedStep>& steps) {
  std::vector<LatticePoint> points{lattice_start(k)};
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& step = steps[i];
    LatticePoint next = points.back();
    auto it = std::find(next.begin(), next.end(), step.x);
    if (it == next.end())
      throw InvalidLatticePath("step " + std::to_string(i + 1) + " leaves a value not in the current point");
    const auto q = static_cast<std::size_t>(it - next.begin());
    if (others(next, q) != step.common)
      throw InvalidLatticePath("step " + std::to_string(i + 1) + " has the wrong common coordinates");
    *it = step.y;
    points.push_back(std::move(next));
  }
  return LatticePath(n, k, std::move(points));
}

LatticePath lattice_path_of(const MonotonePath& path) {
  return lattice_from_steps(path.n(), path.k(), enhanced_steps(path));
}

MonotonePath path_of_lattice(const LatticePath& path) {
  std::vector<Support> supports;
  supports.reserve(path.length());
  for (const auto& p : path.points()) supports.emplace_back(path.n(), sorted_copy(p));
  try {
    return MonotonePath(path.n(), path.k(), std::move(supports));
  } catch (const Error& e) {
    throw InvalidLatticePath(e.what());
  }
}

LatticePath restrict_path(const LatticePath& path) {
  if (path.k() != 2) throw Unsupported("restriction is only defined for dimension 2");
  const int big = path.n();
  const int n = big - 1;
  if (big < 4) throw InvalidParameter("restriction needs size n+1 >= 4");

  std::vector<LatticePoint> pts = path.points();
  for (auto& p : pts)
    for (auto& v : p)
      if (v == big) v = n;

  // The final point is now (n, n); its predecessor carries n in exactly one
  // coordinate, which decides how the endpoint is retargeted.
  const std::size_t r = pts.size();
  const auto& before = pts[r - 2];
  const bool second_is_n = before[1] == n && before[0] != n;
  const bool first_is_n = before[0] == n && before[1] != n;
  if (second_is_n == first_is_n) throw std::logic_error("restriction: ambiguous endpoint retargeting");
  pts[r - 1] = second_is_n ? LatticePoint{n - 1, n} : LatticePoint{n, n - 1};

  std::vector<LatticePoint> out;
  out.reserve(r);
  for (auto& p : pts)
    if (out.empty() || out.back() != p) out.push_back(std::move(p));
  return LatticePath(n, 2, std::move(out));
}

DaPathCounts count_all_da_paths(int n, int k, std::size_t max_vertices) {
  validate_dimensions(n, k);
  Integer vertices = 1;
  for (int i = 0; i < k; ++i) vertices = vertices * (n - i) / (i + 1);
  if (vertices > static_cast<unsigned long>(max_vertices))
    throw ResourceLimit("C(" + std::to_string(n) + "," + std::to_string(k) + ") vertices exceed the budget");

  // Forward DP: ways[S] = number of monotone paths from {1..k} to S. The
  // index sum strictly increases along improving edges.
  std::map<std::vector<int>, Integer> ways;
  std::vector<std::vector<int>> order;
  std::vector<int> comb(k);
  for (int i = 0; i < k; ++i) comb[i] = i + 1;
  while (true) {
    order.push_back(comb);
    int i = k - 1;
    while (i >= 0 && comb[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
  auto sum = [](const std::vector<int>& v) {
    int s = 0;
    for (int x : v) s += x;
    return s;
  };
  std::stable_sort(order.begin(), order.end(), [&](const auto& a, const auto& b) { return sum(a) < sum(b); });
  ways[order.front()] = 1;
  for (const auto& v : order) {
    const Integer here = ways[v];
    if (here == 0) continue;
    const Support s(n, v);
    for (int x : v)
      for (int y = x + 1; y <= n; ++y)
        if (!s.contains(y)) ways[s.swapped(x, y).elems()] += here;
  }
  DaPathCounts out;
  out.total = ways[Support::highest(n, k).elems()];
  if (k == 2) {
    Integer d = 0;
    for (int x = 1; x < n - 1; ++x) d += ways[{x, n - 1}];
    out.ending_with_top_step = d;
    out.other = out.total - d;
  }
  return out;
}

}  // namespace mpp

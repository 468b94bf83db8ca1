#include "mpp/hypersimplex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "mpp/errors.hpp"

namespace mpp {

Direction Direction::from_values(RationalVector values) {
  const int n = static_cast<int>(values.size());
  if (n < 2) throw InvalidParameter("direction needs n >= 2 entries, got " + std::to_string(n));
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return values[a] < values[b]; });
  RationalVector sorted;
  std::vector<int> permutation;
  sorted.reserve(n);
  permutation.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (i > 0 && values[order[i]] == values[order[i - 1]])
      throw InvalidParameter("direction is not generic: coordinates " + std::to_string(order[i - 1] + 1) +
                             " and " + std::to_string(order[i] + 1) + " coincide");
    sorted.push_back(values[order[i]]);
    permutation.push_back(order[i] + 1);
  }
  return Direction(std::move(sorted), std::move(permutation));
}

bool Direction::is_identity_permutation() const {
  for (int i = 0; i < n(); ++i)
    if (permutation_[i] != i + 1) return false;
  return true;
}

Direction default_direction(int n) {
  if (n < 2) throw InvalidParameter("default direction needs n >= 2, got " + std::to_string(n));
  RationalVector values;
  for (int i = 1; i <= n; ++i) values.emplace_back(i);
  return Direction::from_values(std::move(values));
}

Support::Support(int n, std::vector<int> elems) : n_(n), elems_(std::move(elems)) {
  if (n_ < 1) throw InvalidSupport("support over [n] needs n >= 1");
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i] < 1 || elems_[i] > n_)
      throw InvalidSupport("support index " + std::to_string(elems_[i]) + " outside [1, " +
                           std::to_string(n_) + "]");
    if (i > 0 && elems_[i - 1] >= elems_[i]) throw InvalidSupport("support is not strictly increasing");
  }
}

Support Support::lowest(int n, int k) {
  std::vector<int> e(k);
  std::iota(e.begin(), e.end(), 1);
  return Support(n, std::move(e));
}

Support Support::highest(int n, int k) {
  std::vector<int> e(k);
  std::iota(e.begin(), e.end(), n - k + 1);
  return Support(n, std::move(e));
}

bool Support::contains(int index) const {
  return std::binary_search(elems_.begin(), elems_.end(), index);
}

Support Support::swapped(int out, int in) const {
  std::vector<int> e;
  e.reserve(elems_.size());
  for (int v : elems_)
    if (v != out) e.push_back(v);
  e.insert(std::upper_bound(e.begin(), e.end(), in), in);
  return Support(n_, std::move(e));
}

std::vector<int> Support::indicator() const {
  std::vector<int> v(n_, 0);
  for (int i : elems_) v[i - 1] = 1;
  return v;
}

void validate_dimensions(int n, int k) {
  if (n < 2 || k < 1 || k > n - 1)
    throw InvalidParameter("need 1 <= k <= n-1, got n=" + std::to_string(n) + ", k=" + std::to_string(k));
}

namespace {

// Single swap difference between two supports of equal size, if any.
std::optional<std::pair<int, int>> edge_swap(const Support& from, const Support& to) {
  int out = 0, in = 0, outs = 0, ins = 0;
  for (int v : from.elems())
    if (!to.contains(v)) out = v, ++outs;
  for (int v : to.elems())
    if (!from.contains(v)) in = v, ++ins;
  if (outs != 1 || ins != 1) return std::nullopt;
  return std::pair{out, in};
}

std::vector<int> without(const std::vector<int>& elems, int drop) {
  std::vector<int> out;
  out.reserve(elems.size());
  for (int v : elems)
    if (v != drop) out.push_back(v);
  return out;
}

}  // namespace

MonotonePath::MonotonePath(int n, int k, std::vector<Support> supports)
    : n_(n), k_(k), supports_(std::move(supports)) {
  validate_dimensions(n, k);
  if (supports_.size() < 2) throw InvalidStepSequence("a monotone path has at least two vertices");
  for (const auto& s : supports_)
    if (s.n() != n || s.k() != k) throw InvalidSupport("support does not belong to Δ(n,k)");
  if (supports_.front() != Support::lowest(n, k)) throw InvalidStepSequence("path does not start at v_min");
  if (supports_.back() != Support::highest(n, k)) throw InvalidStepSequence("path does not end at v_max");
  for (std::size_t i = 0; i + 1 < supports_.size(); ++i) {
    auto swap = edge_swap(supports_[i], supports_[i + 1]);
    if (!swap) throw InvalidStepSequence("consecutive supports are not adjacent");
    if (swap->first >= swap->second) throw InvalidStepSequence("step is not improving");
  }
}

Rational weight(const Support& support, const Direction& c) {
  if (support.n() != c.n()) throw InvalidSupport("support and direction dimensions differ");
  Rational sum = 0;
  for (int i : support.elems()) sum += c[i];
  return sum;
}

std::vector<Support> improving_neighbors(const Support& support, const Direction& c) {
  if (support.n() != c.n()) throw InvalidSupport("support and direction dimensions differ");
  std::vector<Support> out;
  for (int x : support.elems())
    for (int y = x + 1; y <= support.n(); ++y)
      if (!support.contains(y)) out.push_back(support.swapped(x, y));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct DfsState {
  int n;
  int k;
  const PathVisitor* visit;
  std::vector<Support> stack;
  Support target;
  std::size_t visited = 0;
  bool stopped = false;

  void run() {
    if (stopped) return;
    const Support top = stack.back();
    if (top == target) {
      ++visited;
      if (!(*visit)(MonotonePath(n, k, stack))) stopped = true;
      return;
    }
    // (x, y) lexicographic: x ascending over the support, y ascending.
    for (int x : top.elems()) {
      for (int y = x + 1; y <= n; ++y) {
        if (top.contains(y)) continue;
        stack.push_back(top.swapped(x, y));
        run();
        stack.pop_back();
        if (stopped) return;
      }
    }
  }
};

}  // namespace

std::size_t enumerate_monotone_paths(int n, int k, const Direction& c, const PathVisitor& visit) {
  validate_dimensions(n, k);
  if (c.n() != n) throw InvalidParameter("direction has " + std::to_string(c.n()) + " entries, need " +
                                         std::to_string(n));
  DfsState state{n, k, &visit, {Support::lowest(n, k)}, Support::highest(n, k)};
  state.run();
  return state.visited;
}

std::vector<MonotonePath> collect_monotone_paths(int n, int k, const Direction& c, std::size_t max_paths) {
  std::vector<MonotonePath> out;
  bool overflow = false;
  enumerate_monotone_paths(n, k, c, [&](const MonotonePath& p) {
    if (out.size() >= max_paths) {
      overflow = true;
      return false;
    }
    out.push_back(p);
    return true;
  });
  if (overflow)
    throw ResourceLimit("more than " + std::to_string(max_paths) + " monotone paths on Δ(" +
                        std::to_string(n) + "," + std::to_string(k) + ")");
  return out;
}

Integer count_monotone_paths(int n, int k) {
  validate_dimensions(n, k);
  // Process vertices by decreasing index-sum: every improving edge raises it.
  std::map<std::vector<int>, Integer> ways;
  std::vector<Support> vertices;
  std::vector<int> comb(k);
  std::iota(comb.begin(), comb.end(), 1);
  while (true) {
    vertices.emplace_back(n, comb);
    int i = k - 1;
    while (i >= 0 && comb[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
  auto index_sum = [](const Support& s) { return std::accumulate(s.elems().begin(), s.elems().end(), 0); };
  std::stable_sort(vertices.begin(), vertices.end(),
                   [&](const Support& a, const Support& b) { return index_sum(a) > index_sum(b); });
  const Direction c = default_direction(n);
  const Support top = Support::highest(n, k);
  for (const auto& v : vertices) {
    if (v == top) {
      ways[v.elems()] = 1;
      continue;
    }
    Integer total = 0;
    for (const auto& w : improving_neighbors(v, c)) total += ways[w.elems()];
    ways[v.elems()] = total;
  }
  return ways[Support::lowest(n, k).elems()];
}

std::vector<EnhancedStep> enhanced_steps(const MonotonePath& path) {
  std::vector<EnhancedStep> steps;
  steps.reserve(path.length() - 1);
  for (std::size_t i = 0; i + 1 < path.length(); ++i) {
    auto swap = edge_swap(path[i], path[i + 1]);
    steps.push_back({swap->first, swap->second, without(path[i].elems(), swap->first)});
  }
  return steps;
}

MonotonePath path_from_steps(int n, int k, const std::vector<EnhancedStep>& steps) {
  if (n < 2 || k < 1 || k > n - 1)
    throw InvalidStepSequence("no monotone path exists on Δ(" + std::to_string(n) + "," + std::to_string(k) + ")");
  std::vector<Support> supports{Support::lowest(n, k)};
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& step = steps[i];
    const Support& cur = supports.back();
    if (!cur.contains(step.x) || step.y < 1 || step.y > n || cur.contains(step.y))
      throw InvalidStepSequence("step " + std::to_string(i + 1) + " does not chain from the previous vertex");
    if (without(cur.elems(), step.x) != step.common)
      throw InvalidStepSequence("step " + std::to_string(i + 1) + " has the wrong common support");
    supports.push_back(cur.swapped(step.x, step.y));
  }
  if (supports.back() != Support::highest(n, k)) throw InvalidStepSequence("step sequence does not end at v_max");
  try {
    return MonotonePath(n, k, std::move(supports));
  } catch (const InvalidStepSequence&) {
    throw;
  } catch (const Error& e) {
    throw InvalidStepSequence(e.what());
  }
}

}  // namespace mpp

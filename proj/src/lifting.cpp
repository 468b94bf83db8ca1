#include "mpp/lifting.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mpp/errors.hpp"

namespace mpp {

std::vector<int> suffix_normalization(int n, const std::vector<int>& subset) {
  std::vector<bool> in(n + 1, false);
  for (int v : subset) {
    if (v < 1 || v > n) throw InvalidParameter("subset element outside [1, n]");
    in[v] = true;
  }
  std::vector<int> label(n);
  int next_out = 1;
  int next_in = n - static_cast<int>(std::count(in.begin() + 1, in.end(), true)) + 1;
  for (int i = 1; i <= n; ++i) label[i - 1] = in[i] ? next_in++ : next_out++;
  return label;
}

namespace {

int count_in_suffix(const Support& b, int first_of_s) {
  return static_cast<int>(
      std::count_if(b.elems().begin(), b.elems().end(), [&](int v) { return v >= first_of_s; }));
}

void extend_es(int first_of_s, int steps_left, ESPath& current, std::vector<ESPath>& out) {
  if (steps_left == 0) {
    out.push_back(current);
    return;
  }
  const Support here = current.bases.back();
  for (int a : here.elems()) {
    if (a >= first_of_s) continue;
    for (int b = first_of_s; b <= here.n(); ++b) {
      if (here.contains(b)) continue;
      current.bases.push_back(here.swapped(a, b));
      current.swaps.emplace_back(a, b);
      extend_es(first_of_s, steps_left - 1, current, out);
      current.bases.pop_back();
      current.swaps.pop_back();
    }
  }
}

}  // namespace

std::vector<ESPath> enumerate_es_paths(int n, int k, int s) {
  validate_dimensions(n, k);
  if (s < 1 || s > n - 1) throw InvalidParameter("need 1 <= s <= n-1, got s=" + std::to_string(s));
  const int first_of_s = n - s + 1;
  const int low = std::max(0, k - (n - s));
  const int high = std::min(k, s);
  std::vector<ESPath> out;
  std::vector<int> comb(k);
  std::iota(comb.begin(), comb.end(), 1);
  while (true) {
    Support b1(n, comb);
    if (count_in_suffix(b1, first_of_s) == low) {
      ESPath current{n, k, s, {b1}, {}};
      extend_es(first_of_s, high - low, current, out);
    }
    int i = k - 1;
    while (i >= 0 && comb[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
  return out;
}

void validate_es_path(const ESPath& p) {
  validate_dimensions(p.n, p.k);
  if (p.s < 1 || p.s > p.n - 1) throw InvalidParameter("need 1 <= s <= n-1");
  const int first_of_s = p.n - p.s + 1;
  if (p.bases.size() != p.swaps.size() + 1) throw InvalidParameter("bases and swaps disagree in length");
  const int low = std::max(0, p.k - (p.n - p.s));
  const int high = std::min(p.k, p.s);
  if (count_in_suffix(p.bases.front(), first_of_s) != low) throw InvalidParameter("B_1 does not minimise |B ∩ S|");
  if (count_in_suffix(p.bases.back(), first_of_s) != high) throw InvalidParameter("last base does not maximise |B ∩ S|");
  std::vector<int> seen;
  for (std::size_t i = 0; i < p.swaps.size(); ++i) {
    const auto [a, b] = p.swaps[i];
    if (a >= first_of_s || b < first_of_s) throw InvalidParameter("swap must take a ∉ S to b ∈ S");
    if (!p.bases[i].contains(a) || p.bases[i].contains(b)) throw InvalidParameter("swap does not apply to its base");
    if (p.bases[i].swapped(a, b) != p.bases[i + 1]) throw InvalidParameter("bases do not follow the swaps");
    seen.push_back(a);
    seen.push_back(b);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw InvalidParameter("swap indices are not pairwise distinct");
}

MonotonePath lift(const ESPath& p) {
  validate_es_path(p);
  const int n = p.n;
  const int k = p.k;
  const std::size_t m = p.swaps.size();
  const Support& first = p.bases.front();
  const Support& last = p.bases.back();
  const Support low = Support::lowest(n, k);
  const Support high = Support::highest(n, k);

  // Middle-step index at which each B_1 element leaves (m = never), and at
  // which each final element arrived (-1 = present from B_1).
  auto leaves_at = [&](int v) {
    for (std::size_t i = 0; i < m; ++i)
      if (p.swaps[i].first == v) return static_cast<long>(i);
    return static_cast<long>(m);
  };
  auto arrives_at = [&](int v) {
    for (std::size_t i = 0; i < m; ++i)
      if (p.swaps[i].second == v) return static_cast<long>(i);
    return -1L;
  };

  std::vector<int> added;  // B_1 \ [k]
  for (int v : first.elems())
    if (!low.contains(v)) added.push_back(v);
  std::stable_sort(added.begin(), added.end(), [&](int a, int b) { return leaves_at(a) > leaves_at(b); });
  std::vector<int> removed;  // [k] \ B_1, decreasing
  for (int v : low.elems())
    if (!first.contains(v)) removed.insert(removed.begin(), v);

  std::vector<int> leaving;  // B_{m+1} \ [n-k+1, n]
  for (int v : last.elems())
    if (!high.contains(v)) leaving.push_back(v);
  std::stable_sort(leaving.begin(), leaving.end(), [&](int a, int b) { return arrives_at(a) > arrives_at(b); });
  std::vector<int> entering;  // [n-k+1, n] \ B_{m+1}, decreasing
  for (int v : high.elems())
    if (!last.contains(v)) entering.insert(entering.begin(), v);

  std::vector<std::pair<int, int>> swaps;
  for (std::size_t i = 0; i < added.size(); ++i) swaps.emplace_back(removed[i], added[i]);
  swaps.insert(swaps.end(), p.swaps.begin(), p.swaps.end());
  for (std::size_t i = 0; i < leaving.size(); ++i) swaps.emplace_back(leaving[i], entering[i]);

  std::vector<EnhancedStep> steps;
  Support cur = low;
  for (const auto& [x, y] : swaps) {
    std::vector<int> common;
    for (int v : cur.elems())
      if (v != x) common.push_back(v);
    steps.push_back({x, y, std::move(common)});
    cur = cur.swapped(x, y);
  }
  return path_from_steps(n, k, steps);
}

}  // namespace mpp

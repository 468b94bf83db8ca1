// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mpp/coherence.hpp"
#include "mpp/counting.hpp"
#include "mpp/generator.hpp"
#include "mpp/geometry.hpp"
#include "mpp/kernels.hpp"
#include "mpp/lattice.hpp"
#include "mpp/lifting.hpp"

using namespace mpp;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Integer big(std::size_t v) { return Integer(std::to_string(v)); }

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail.clear();
  else o.detail += "; ";
  o.pass = false;
  o.detail += why;
}

// LP verdicts for Δ(n,2), shared by several criteria.
std::map<int, std::vector<std::pair<MonotonePath, CoherenceVerdict>>> k2_census;

const std::vector<std::pair<MonotonePath, CoherenceVerdict>>& census_k2(int n) {
  auto it = k2_census.find(n);
  if (it != k2_census.end()) return it->second;
  const auto c = default_direction(n);
  const auto paths = collect_monotone_paths(n, 2, c);
  const auto verdicts = omp::coherence_census(paths, c);
  auto& out = k2_census[n];
  for (std::size_t i = 0; i < paths.size(); ++i) out.emplace_back(paths[i], verdicts[i]);
  return out;
}

MonotonePath path4(std::vector<std::vector<int>> sets) {
  std::vector<Support> s;
  for (auto& e : sets) s.emplace_back(4, e);
  return MonotonePath(4, 2, s);
}

Outcome enumeration_counts() {
  Outcome o;
  const auto a = collect_monotone_paths(3, 2, default_direction(3)).size();
  const auto b = collect_monotone_paths(4, 2, default_direction(4)).size();
  o.detail = "(3,2): " + std::to_string(a) + ", (4,2): " + std::to_string(b);
  if (a != 2 || b != 10) fail(o, o.detail + ", expected 2 and 10");
  return o;
}

Outcome coherence_census_42() {
  Outcome o;
  const auto c = default_direction(4);
  std::set<MonotonePath> non_coherent;
  std::size_t coherent = 0;
  for (const auto& p : collect_monotone_paths(4, 2, c)) {
    if (is_coherent_lp(p, c).coherent) ++coherent;
    else non_coherent.insert(p);
  }
  const std::set<MonotonePath> expected{path4({{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}),
                                        path4({{1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}})};
  o.detail = std::to_string(coherent) + " coherent; non-coherent set matches the two listed paths";
  if (coherent != 8) fail(o, std::to_string(coherent) + " coherent, expected 8");
  if (non_coherent != expected) fail(o, "non-coherent paths differ from the listed pair");
  return o;
}

Outcome criterion_equals_lp_k2() {
  Outcome o;
  std::ostringstream d;
  std::size_t total = 0, disagreements = 0;
  for (int n = 4; n <= 7; ++n) {
    for (const auto& [p, v] : census_k2(n)) {
      ++total;
      if (v.lp != v.criterion) ++disagreements;
    }
  }
  d << disagreements << " disagreements over " << total << " paths, n = 4..7";
  o.detail = d.str();
  if (disagreements) fail(o, o.detail);
  return o;
}

Outcome soundness_k3() {
  Outcome o;
  std::size_t total = 0, unsound = 0, lp_false_crit_true = 0;
  for (int n = 4; n <= 6; ++n) {
    const auto c = default_direction(n);
    const auto paths = collect_monotone_paths(n, 3, c);
    const auto v = omp::coherence_census(paths, c);
    for (const auto& x : v) {
      ++total;
      if (x.lp && !x.criterion) ++unsound;
      if (!x.lp && x.criterion) ++lp_false_crit_true;
    }
  }
  const auto gap = search_criterion_gap(3, 8);
  std::ostringstream d;
  d << unsound << " criterion-false/LP-true of " << total << " (n <= 6); " << lp_false_crit_true
    << " criterion-true/LP-false; gap search: ";
  if (gap.path) d << "found at n = " << gap.n << " after " << gap.examined << " paths";
  else d << "none";
  o.detail = d.str();
  if (unsound) fail(o, o.detail);
  if (!gap.path) fail(o, "gap search found nothing for n <= 8");
  return o;
}

Outcome generator_totals() {
  Outcome o;
  std::ostringstream d;
  for (int n = 4; n <= 8; ++n) {
    const auto size = generate_coherent(n).size();
    d << (n > 4 ? ", " : "") << size;
    if (big(size) != count_total(n)) fail(o, "n = " + std::to_string(n) + " generated " + std::to_string(size));
  }
  for (int n = 4; n <= 7; ++n) {
    const auto gen = generate_coherent(n);
    const std::set<LatticePath> generated(gen.begin(), gen.end());
    std::set<LatticePath> image;
    for (const auto& [p, v] : census_k2(n))
      if (v.lp) image.insert(lattice_path_of(p));
    if (generated != image) fail(o, "generated set differs from the coherent image at n = " + std::to_string(n));
  }
  if (o.pass) o.detail = "totals " + d.str() + "; sets equal the coherent image for n <= 7";
  return o;
}

// Reference table rows, lengths from 3 on.
const std::map<int, std::vector<long>> kReferenceRows{
    {4, {4, 4}},
    {5, {4, 16, 12, 1}},
    {6, {4, 28, 56, 38, 7}},
    {7, {4, 40, 132, 195, 129, 32, 1}},
    {8, {4, 52, 240, 556, 694, 448, 129, 10}},
    {9, {4, 64, 380, 1205, 2250, 2496, 1571, 501, 61, 1}},
    {10, {4, 76, 552, 2226, 5565, 8896, 9019, 5564, 1914, 304, 13}},
    {11, {4, 88, 756, 3703, 11627, 21416, 34622, 32725, 19881, 7236, 1375, 99, 1}},
};

Outcome length_table() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto polys = length_polys_up_to(11);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::vector<std::string> notes;
  for (const auto& [n, reference] : kReferenceRows) {
    const auto row = length_row(polys[static_cast<std::size_t>(n - 4)]);
    if (row.size() != reference.size()) {
      fail(o, "row " + std::to_string(n) + " has " + std::to_string(row.size()) + " entries");
      continue;
    }
    Integer reference_sum = 0;
    for (long v : reference) reference_sum += v;
    std::map<std::size_t, std::size_t> histogram;
    bool have_histogram = false;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] == reference[i]) continue;
      const int length = static_cast<int>(i) + 3;
      // A differing entry is accepted only when exhaustive generation confirms
      // the computed value and the reference row fails to sum to the total.
      if (!have_histogram) {
        for_each_coherent(n, [&](const LatticePath& p) {
          ++histogram[p.length()];
          return true;
        });
        have_histogram = true;
      }
      const bool enumerated = big(histogram[static_cast<std::size_t>(length)]) == row[i];
      const bool sum_broken = reference_sum != count_total(n);
      const std::string where = "v(" + std::to_string(n) + "," + std::to_string(length) + ")";
      if (enumerated && sum_broken)
        notes.push_back(where + " is " + std::to_string(reference[i]) + " in the table, enumeration gives " + row[i].get_str() +
                        " and the table row sums to " + reference_sum.get_str() + " != " + count_total(n).get_str());
      else
        fail(o, where + " = " + row[i].get_str() + ", reference " + std::to_string(reference[i]));
    }
  }
  if (seconds >= 1) fail(o, "took " + std::to_string(seconds) + " s");
  if (o.pass) {
    o.detail = "rows n = 4..11 reproduced";
    for (const auto& note : notes) o.detail += "; reference table typo: " + note;
  }
  return o;
}

Outcome extremal_lengths() {
  Outcome o;
  const std::map<int, std::pair<long, long>> expected{{5, {6, 1}}, {6, {7, 7}}, {8, {10, 10}}, {9, {12, 1}}, {10, {13, 13}}};
  std::ostringstream d;
  for (const auto& [n, want] : expected) {
    const auto e = max_coherent_length(n);
    d << (n > 5 ? ", " : "") << "n=" << n << ":(" << e.length << "," << e.top_count << ")";
    if (e.length != want.first || e.top_count != want.second) fail(o, "n = " + std::to_string(n));
  }
  if (o.pass) o.detail = d.str();
  return o;
}

Outcome structural_identities() {
  Outcome o;
  const auto counts = count_vectors_up_to(300);
  const auto polys = length_polys_up_to(300);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const auto& s = counts[i];
    const auto n = std::to_string(s.n);
    if (2 * s.t != 2 * s.q + s.c) fail(o, "2t != 2q + c at n = " + n);
    if (s.c != s.t + 1) fail(o, "c != t + 1 at n = " + n);
    if (s.total() != count_total(s.n)) fail(o, "recursion != closed form at n = " + n);
    if (polys[i].total().evaluate(1) != s.total()) fail(o, "V(1) != t+q+c at n = " + n);
  }
  if (o.pass) o.detail = "n = 4..300, total(300) has " + std::to_string(count_total(300).get_str().size()) + " digits";
  return o;
}

Outcome geometry_vertices() {
  Outcome o;
  struct Case {
    int n, k;
    long vertices;
  };
  std::ostringstream d;
  for (const auto& t : {Case{3, 2, 2}, Case{4, 2, 8}, Case{5, 2, 33}, Case{4, 3, -1}, Case{5, 3, -1}}) {
    const auto r = mpp_vertices(t.n, t.k, default_direction(t.n), 200'000, 0);
    d << (t.n == 3 ? "" : ", ") << "(" << t.n << "," << t.k << "):" << r.vertex_count;
    if (r.merged_paths) d << " [" << r.merged_paths << " merged]";
    if (t.vertices >= 0 && static_cast<long>(r.vertex_count) != t.vertices)
      fail(o, "(" + std::to_string(t.n) + "," + std::to_string(t.k) + ") has " + std::to_string(r.vertex_count) + " vertices");
    if (r.disagreements) fail(o, std::to_string(r.disagreements) + " extremeness/LP disagreements");
  }
  if (o.pass) o.detail = d.str() + "; extremeness == LP everywhere";
  return o;
}

Outcome lifting() {
  Outcome o;
  std::size_t lifts = 0, k3_lp = 0, k3_total = 0;
  for (int n = 3; n <= 6; ++n)
    for (int k = 1; k <= 3 && k < n; ++k) {
      const auto c = default_direction(n);
      for (int s = 1; s < n; ++s)
        for (const auto& p : enumerate_es_paths(n, k, s)) {
          ++lifts;
          const auto up = lift(p);
          if (!satisfies_criterion(up)) fail(o, "a lift fails the criterion");
          if (k == 2) {
            if (!is_coherent_lp(up, c).coherent) fail(o, "a k = 2 lift is not coherent");
            const auto& sup = up.supports();
            if (std::search(sup.begin(), sup.end(), p.bases.begin(), p.bases.end()) == sup.end())
              fail(o, "a k = 2 lift does not contain its bases consecutively");
          }
          if (k == 3) {
            ++k3_total;
            k3_lp += is_coherent_lp(up, c).coherent;
          }
        }
    }
  if (o.pass)
    o.detail = std::to_string(lifts) + " lifts checked; k = 3 lifts LP-coherent: " + std::to_string(k3_lp) + "/" +
               std::to_string(k3_total) + " (recorded only)";
  return o;
}

Outcome growth_and_catalan() {
  Outcome o;
  std::ostringstream d;
  for (int n = 4; n <= 9; ++n) {
    const auto a = count_all_da_paths(n, 2);
    const auto b = count_all_da_paths(n + 1, 2);
    const auto &dn = *a.ending_with_top_step, &sn = *a.other, &dn1 = *b.ending_with_top_step;
    if (dn1 != dn + 2 * sn) fail(o, "d(n+1) != d(n) + 2 s(n) at n = " + std::to_string(n));
    if (dn1 < 5 * dn) fail(o, "d(n+1) < 5 d(n) at n = " + std::to_string(n));
  }
  for (int n = 3; n <= 5; ++n) {
    std::size_t longest = 0, max_len = 0;
    enumerate_monotone_paths(n, 2, default_direction(n), [&](const MonotonePath& p) {
      if (p.length() > max_len) {
        max_len = p.length();
        longest = 0;
      }
      longest += p.length() == max_len;
      return true;
    });
    d << (n > 3 ? ", " : "") << catalan_longest_count(n);
    if (max_len != static_cast<std::size_t>(2 * n - 3)) fail(o, "longest path length at n = " + std::to_string(n));
    if (big(longest) != catalan_longest_count(n)) fail(o, "Catalan count at n = " + std::to_string(n));
  }
  if (o.pass) o.detail = "growth identities n = 4..10; longest-path counts " + d.str();
  return o;
}

Outcome log_concavity() {
  Outcome o;
  for (const auto& s : length_polys_up_to(150))
    if (!is_log_concave(s.total().coefficients())) fail(o, "not log-concave at n = " + std::to_string(s.n));
  if (o.pass) o.detail = "V_n log-concave for n = 4..150";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"enumeration counts", enumeration_counts},
      {"coherence census on (4,2)", coherence_census_42},
      {"criterion equals LP for k = 2", criterion_equals_lp_k2},
      {"criterion soundness and gap for k = 3", soundness_k3},
      {"generator totals and image", generator_totals},
      {"length table", length_table},
      {"extremal lengths", extremal_lengths},
      {"structural identities", structural_identities},
      {"polytope vertices", geometry_vertices},
      {"lifting", lifting},
      {"growth and Catalan counts", growth_and_catalan},
      {"log-concavity", log_concavity},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %s (%.2fs): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), seconds,
                o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

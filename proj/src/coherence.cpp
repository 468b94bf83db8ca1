#include "mpp/coherence.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mpp/errors.hpp"
#include "mpp/lp.hpp"

namespace mpp {

namespace {

std::vector<Support> all_supports(int n, int k) {
  std::vector<Support> out;
  std::vector<int> comb(k);
  std::iota(comb.begin(), comb.end(), 1);
  while (true) {
    out.emplace_back(n, comb);
    int i = k - 1;
    while (i >= 0 && comb[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
  return out;
}

// Indicator difference χ(to) − χ(from).
RationalVector difference(const Support& from, const Support& to) {
  RationalVector d(from.n(), Rational(0));
  for (int i : to.elems()) d[i - 1] += 1;
  for (int i : from.elems()) d[i - 1] -= 1;
  return d;
}

}  // namespace

CaptureCone capture_cone(const MonotonePath& path, const Direction& c) {
  const int n = path.n();
  if (c.n() != n) throw InvalidParameter("direction and path dimensions differ");
  CaptureCone cone{n, {}};
  const auto supports = all_supports(n, path.k());
  for (std::size_t i = 0; i + 1 < path.length(); ++i) {
    const Support& here = path[i];
    const Support& next = path[i + 1];
    const Rational w_here = weight(here, c);
    const Rational d_next = weight(next, c) - w_here;
    const RationalVector step = difference(here, next);
    for (const auto& J : supports) {
      if (J == next) continue;
      const Rational d_J = weight(J, c) - w_here;
      if (sgn(d_J) <= 0) continue;
      // (ω·step)/d_next > (ω·(J−here))/d_J  ⇔  d_J·(ω·step) − d_next·(ω·(J−here)) > 0
      const RationalVector other = difference(here, J);
      RationalVector row(n);
      for (int p = 0; p < n; ++p) row[p] = d_J * step[p] - d_next * other[p];
      cone.strict_rows.push_back(std::move(row));
    }
  }
  return cone;
}

bool strictly_inside(const CaptureCone& cone, const RationalVector& omega) {
  if (static_cast<int>(omega.size()) != cone.n) return false;
  return std::all_of(cone.strict_rows.begin(), cone.strict_rows.end(),
                     [&](const RationalVector& row) { return sgn(dot(row, omega)) > 0; });
}

CoherenceCertificate is_coherent_lp(const MonotonePath& path, const Direction& c) {
  const CaptureCone cone = capture_cone(path, c);
  const int n = cone.n;
  if (cone.strict_rows.empty()) return {true, RationalVector(n, Rational(0))};

  // Variables: p (n), q (n), δ; ω = p − q with 0 <= p, q <= 1 and 0 <= δ <= 1.
  // δ >= 0 loses nothing since ω = 0 already reaches δ = 0.
  const std::size_t vars = 2 * static_cast<std::size_t>(n) + 1;
  const std::size_t delta = vars - 1;
  lp::Matrix A;
  RationalVector b;
  A.reserve(cone.strict_rows.size() + vars);
  for (const auto& row : cone.strict_rows) {
    RationalVector r(vars, Rational(0));
    for (int i = 0; i < n; ++i) {
      r[i] = -row[i];
      r[n + i] = row[i];
    }
    r[delta] = 1;
    A.push_back(std::move(r));
    b.emplace_back(0);
  }
  for (std::size_t j = 0; j < vars; ++j) {
    RationalVector r(vars, Rational(0));
    r[j] = 1;
    A.push_back(std::move(r));
    b.emplace_back(1);
  }
  RationalVector objective(vars, Rational(0));
  objective[delta] = 1;

  const lp::Solution sol = lp::maximize(A, b, objective);
  if (sol.status != lp::Status::Optimal) throw std::logic_error("bounded coherence LP reported unbounded");
  if (sgn(sol.objective) <= 0) return {false, std::nullopt};
  RationalVector omega(n);
  for (int i = 0; i < n; ++i) omega[i] = sol.x[i] - sol.x[n + i];
  return {true, std::move(omega)};
}

MonotonePath captured_path(const RationalVector& omega, const Direction& c, int n, int k) {
  validate_dimensions(n, k);
  if (static_cast<int>(omega.size()) != n || c.n() != n)
    throw InvalidParameter("omega must have exactly n = " + std::to_string(n) + " entries");
  std::vector<Support> supports{Support::lowest(n, k)};
  const Support target = Support::highest(n, k);
  while (supports.back() != target) {
    const Support& here = supports.back();
    const auto neighbors = improving_neighbors(here, c);
    std::size_t best = 0;
    Rational best_slope;
    bool tie = false;
    std::size_t tied_with = 0;
    for (std::size_t j = 0; j < neighbors.size(); ++j) {
      const RationalVector d = difference(here, neighbors[j]);
      Rational slope = dot(d, omega) / dot(d, c.values());
      if (j == 0 || slope > best_slope) {
        best = j;
        best_slope = std::move(slope);
        tie = false;
      } else if (slope == best_slope) {
        tie = true;
        tied_with = j;
      }
    }
    if (tie) {
      auto name = [](const Support& s) {
        std::string out = "{";
        for (std::size_t i = 0; i < s.elems().size(); ++i) out += (i ? "," : "") + std::to_string(s.elems()[i]);
        return out + "}";
      };
      throw NonGenericOmega("slope tie at " + name(here) + " between " + name(neighbors[best]) + " and " +
                            name(neighbors[tied_with]));
    }
    supports.push_back(neighbors[best]);
  }
  return MonotonePath(n, k, std::move(supports));
}

std::optional<StepPair> criterion_violation(const MonotonePath& path) {
  const auto steps = enhanced_steps(path);
  auto has = [](const std::vector<int>& set, int v) { return std::binary_search(set.begin(), set.end(), v); };
  for (std::size_t a = 0; a < steps.size(); ++a) {
    const auto& early = steps[a];
    for (std::size_t b = a + 1; b < steps.size(); ++b) {
      const auto& late = steps[b];
      if (late.x < early.y && !has(late.common, early.y) && !has(early.common, late.x)) return StepPair{a, b};
    }
  }
  return std::nullopt;
}

GapSearchResult search_criterion_gap(int k, int n_max, std::size_t max_paths) {
  if (k < 3) throw InvalidParameter("the criterion is exact for k <= 2; gap search needs k >= 3");
  GapSearchResult result;
  for (int n = k + 1; n <= n_max; ++n) {
    const Direction c = default_direction(n);
    bool over_budget = false;
    enumerate_monotone_paths(n, k, c, [&](const MonotonePath& p) {
      if (result.examined >= max_paths) {
        over_budget = true;
        return false;
      }
      ++result.examined;
      if (!satisfies_criterion(p)) return true;
      ++result.lp_calls;
      if (is_coherent_lp(p, c).coherent) return true;
      result.path = p;
      result.n = n;
      return false;
    });
    if (result.path) return result;
    if (over_budget)
      throw ResourceLimit("gap search exceeded " + std::to_string(max_paths) + " paths before finding a gap");
  }
  return result;
}

}  // namespace mpp

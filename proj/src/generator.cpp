#include "mpp/generator.hpp"

#include <string>

#include "mpp/errors.hpp"

namespace mpp {

const char* to_string(EndingKind kind) {
  switch (kind) {
    case EndingKind::TypeI: return "I";
    case EndingKind::TypeII: return "II";
    case EndingKind::TypeIII: return "III";
  }
  return "?";
}

namespace {

// Dimension-2 step (from -> to over other).
struct Step2 {
  int from;
  int to;
  int other;
};

std::vector<Step2> steps2(const LatticePath& path) {
  std::vector<Step2> out;
  for (const auto& s : lattice_steps(path)) out.push_back({s.x, s.y, s.common.front()});
  return out;
}

LatticePath build(int n, const std::vector<Step2>& steps) {
  std::vector<EnhancedStep> full;
  full.reserve(steps.size());
  for (const auto& s : steps) full.push_back({s.from, s.to, {s.other}});
  return lattice_from_steps(n, 2, full);
}

void require_dimension_two(const LatticePath& path) {
  if (path.k() != 2) throw Unsupported("coherent lattice paths are defined in dimension 2 only");
}

}  // namespace

bool is_coherent_lattice_path(const LatticePath& path) {
  require_dimension_two(path);
  const auto steps = steps2(path);
  for (std::size_t a = 0; a < steps.size(); ++a)
    for (std::size_t b = a + 1; b < steps.size(); ++b) {
      const auto& e = steps[a];
      const auto& l = steps[b];
      if (l.from < e.to && e.to != l.other && l.from != e.other) return false;
    }
  return true;
}

EndingType classify(const LatticePath& path) {
  require_dimension_two(path);
  const int n = path.n();
  if (n < 4) throw InvalidParameter("ending types are defined for size >= 4");
  const auto steps = steps2(path);
  const std::size_t r = steps.size();

  std::vector<EndingType> matches;
  const Step2& last = steps[r - 1];
  if (last.to == n && last.other == n - 1 && last.from < n - 1) matches.push_back({EndingKind::TypeI, last.from, {}});

  // Ending block (x -> n over y_1), (y_1 -> y_2 over n), ..., (y_{m-1} -> n-1 over n).
  if (last.to == n - 1 && last.other == n) {
    std::size_t first = r - 1;
    while (first > 0 && steps[first - 1].other == n) --first;
    if (first > 0) {
      const Step2& entry = steps[first - 1];
      std::vector<int> ys{entry.other};
      bool chained = entry.to == n;
      for (std::size_t i = first; i < r && chained; ++i) {
        chained = steps[i].from == ys.back();
        ys.push_back(steps[i].to);
      }
      const std::size_t m = ys.size();
      if (chained) {
        if (m >= 3 && entry.from < n - 1) matches.push_back({EndingKind::TypeII, entry.from, ys});
        if (m == 2 && entry.from < n && ys.front() < n - 1)
          matches.push_back({EndingKind::TypeIII, entry.from, {ys.front()}});
      }
    }
  }
  if (matches.size() != 1)
    throw ClassificationError(matches.empty() ? "path matches no ending type" : "path matches several ending types");
  return matches.front();
}

std::vector<LatticePath> extend(const LatticePath& path) {
  const int n = path.n();
  const int N = n + 1;
  const EndingType type = classify(path);
  const auto S = steps2(path);
  std::vector<std::vector<Step2>> children;

  auto appended = [](std::vector<Step2> base, std::initializer_list<Step2> extra) {
    base.insert(base.end(), extra.begin(), extra.end());
    return base;
  };
  auto drop_last = [](std::vector<Step2> base, std::size_t count) {
    base.resize(base.size() - count);
    return base;
  };

  switch (type.kind) {
    case EndingKind::TypeI: {
      const int x = type.x;
      const auto prefix = drop_last(S, 1);
      children.push_back(appended(S, {{n - 1, N, n}}));
      children.push_back(appended(S, {{n, N, n - 1}, {n - 1, n, N}}));
      children.push_back(appended(prefix, {{x, N, n - 1}, {n - 1, n, N}}));
      break;
    }
    case EndingKind::TypeII: {
      const int x = type.x;
      const auto& y = type.ys;  // y[0..m-1], y[m-1] = n-1
      const std::size_t m = y.size();
      const auto prefix = drop_last(S, m);
      children.push_back(appended(S, {{n - 1, N, n}}));
      children.push_back(appended(drop_last(S, 1), {{y[m - 2], N, n}}));
      {
        auto c = appended(prefix, {{x, N, y[0]}});
        for (std::size_t p = 0; p + 2 < m; ++p) c.push_back({y[p], y[p + 1], N});
        c.push_back({y[m - 2], n - 1, N});
        c.push_back({n - 1, n, N});
        children.push_back(std::move(c));
      }
      {
        auto d = appended(prefix, {{x, N, y[0]}});
        for (std::size_t p = 0; p + 2 < m; ++p) d.push_back({y[p], y[p + 1], N});
        d.push_back({y[m - 2], n, N});
        children.push_back(std::move(d));
      }
      break;
    }
    case EndingKind::TypeIII: {
      const int x = type.x;
      const int y = type.ys.front();
      const auto prefix = drop_last(S, 2);
      const auto without_last = drop_last(S, 1);
      children.push_back(appended(S, {{n - 1, N, n}}));
      children.push_back(appended(without_last, {{y, N, n}}));
      children.push_back(appended(without_last, {{n, N, y}, {y, n, N}}));
      children.push_back(appended(prefix, {{x, N, y}, {y, n - 1, N}, {n - 1, n, N}}));
      children.push_back(appended(prefix, {{x, N, y}, {y, n, N}}));
      break;
    }
  }

  std::vector<LatticePath> out;
  out.reserve(children.size());
  for (const auto& steps : children) out.push_back(build(N, steps));
  return out;
}

namespace {

std::vector<LatticePath> filtered_base(int n) {
  std::vector<LatticePath> out;
  const Direction c = default_direction(n);
  enumerate_monotone_paths(n, 2, c, [&](const MonotonePath& p) {
    LatticePath l = lattice_path_of(p);
    if (is_coherent_lattice_path(l)) out.push_back(std::move(l));
    return true;
  });
  return out;
}

}  // namespace

std::vector<LatticePath> generate_coherent(int n) {
  if (n < 3) throw InvalidParameter("coherent lattice paths are generated for n >= 3");
  if (n <= 4) return filtered_base(n);
  std::vector<LatticePath> level = filtered_base(4);
  for (int size = 4; size < n; ++size) {
    std::vector<LatticePath> next;
    next.reserve(level.size() * 4);
    for (const auto& parent : level)
      for (auto& child : extend(parent)) next.push_back(std::move(child));
    level = std::move(next);
  }
  return level;
}

bool for_each_descendant(const LatticePath& root, int n, const std::function<bool(const LatticePath&)>& visit) {
  if (root.n() == n) return visit(root);
  if (root.n() > n) throw InvalidParameter("descendant size is below the root size");
  for (const auto& child : extend(root))
    if (!for_each_descendant(child, n, visit)) return false;
  return true;
}

void for_each_coherent(int n, const std::function<bool(const LatticePath&)>& visit) {
  if (n < 3) throw InvalidParameter("coherent lattice paths are generated for n >= 3");
  if (n <= 4) {
    for (const auto& p : filtered_base(n))
      if (!visit(p)) return;
    return;
  }
  for (const auto& root : filtered_base(4))
    if (!for_each_descendant(root, n, visit)) return;
}

TypeCensus census_by_type(const std::vector<LatticePath>& paths) {
  TypeCensus census;
  for (const auto& p : paths) {
    switch (classify(p).kind) {
      case EndingKind::TypeI: ++census.type_i; break;
      case EndingKind::TypeII: ++census.type_ii; break;
      case EndingKind::TypeIII: ++census.type_iii; break;
    }
  }
  return census;
}

}  // namespace mpp

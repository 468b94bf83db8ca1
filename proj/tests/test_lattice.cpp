#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mpp/coherence.hpp"
#include "mpp/errors.hpp"
#include "mpp/lattice.hpp"

using namespace mpp;

namespace {
EnhancedStep st(int x, int y, int z) { return {x, y, {z}}; }
}  // namespace

TEST_CASE("lattice path of a monotone path") {
  const MonotonePath p(3, 2, {Support(3, {1, 2}), Support(3, {1, 3}), Support(3, {2, 3})});
  const auto l = lattice_path_of(p);
  CHECK(l.points() == std::vector<LatticePoint>{{2, 1}, {3, 1}, {3, 2}});
  CHECK(path_of_lattice(l) == p);

  const MonotonePath e(2, 1, {Support(2, {1}), Support(2, {2})});
  CHECK(lattice_path_of(e).points() == std::vector<LatticePoint>{{1}, {2}});
  CHECK(lattice_start(3) == LatticePoint{3, 2, 1});
}

TEST_CASE("bijection and length preservation") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k <= 3 && k < n; ++k)
      enumerate_monotone_paths(n, k, default_direction(n), [&](const MonotonePath& p) {
        const auto l = lattice_path_of(p);
        CHECK(l.length() == p.length());
        CHECK(path_of_lattice(l) == p);
        CHECK(lattice_path_of(path_of_lattice(l)) == l);
        CHECK(lattice_steps(l) == enhanced_steps(p));
        return true;
      });
}

TEST_CASE("lattice path validation") {
  CHECK_THROWS_AS(LatticePath(3, 2, {{1, 2}, {3, 2}}), InvalidLatticePath);
  CHECK_THROWS_AS(LatticePath(3, 2, {{2, 1}, {2, 2}, {3, 2}}), InvalidLatticePath);
  CHECK_THROWS_AS(LatticePath(3, 2, {{2, 1}, {3, 1}}), InvalidLatticePath);
  CHECK_THROWS_AS(LatticePath(3, 2, {{2, 1}, {3, 2}}), InvalidLatticePath);
  CHECK_THROWS_AS(LatticePath(3, 2, {{2, 1}, {2, 3}, {1, 3}}), InvalidLatticePath);
  CHECK_THROWS_AS(lattice_from_steps(3, 2, {st(3, 2, 1)}), InvalidLatticePath);
  CHECK(lattice_from_steps(3, 2, {st(1, 3, 2)}).points() == std::vector<LatticePoint>{{2, 1}, {2, 3}});
}

TEST_CASE("restriction of the worked example") {
  const auto big = lattice_from_steps(8, 2, {st(2, 4, 1), st(1, 2, 4), st(4, 8, 2), st(2, 4, 8), st(4, 5, 8), st(5, 7, 8)});
  const auto small = restrict_path(big);
  CHECK(small.n() == 7);
  CHECK(lattice_steps(small) ==
        std::vector<EnhancedStep>{st(2, 4, 1), st(1, 2, 4), st(4, 7, 2), st(2, 4, 7), st(4, 5, 7), st(5, 6, 7)});
}

TEST_CASE("restriction always yields a valid path, coherent from coherent") {
  for (int n = 4; n <= 7; ++n)
    enumerate_monotone_paths(n, 2, default_direction(n), [&](const MonotonePath& p) {
      const auto r = restrict_path(lattice_path_of(p));
      CHECK(r.n() == n - 1);
      CHECK(r.length() <= p.length());
      const auto rp = path_of_lattice(r);
      if (satisfies_criterion(p)) CHECK(satisfies_criterion(rp));
      return true;
    });
}

TEST_CASE("restriction is only for dimension 2") {
  const auto l = lattice_path_of(collect_monotone_paths(4, 1, default_direction(4)).front());
  CHECK_THROWS_AS(restrict_path(l), Unsupported);
  const auto l3 = lattice_path_of(collect_monotone_paths(5, 3, default_direction(5)).front());
  CHECK_THROWS_AS(restrict_path(l3), Unsupported);
}

TEST_CASE("diagonal-avoiding path totals") {
  CHECK(count_all_da_paths(3, 2).total == 2);
  CHECK(count_all_da_paths(4, 2).total == 10);
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k <= 3 && k < n; ++k) {
      std::size_t seen = 0, ending = 0;
      enumerate_monotone_paths(n, k, default_direction(n), [&](const MonotonePath& p) {
        ++seen;
        const auto steps = enhanced_steps(p);
        if (k == 2 && steps.back().y == n && steps.back().common == std::vector<int>{n - 1}) ++ending;
        return true;
      });
      const auto counts = count_all_da_paths(n, k);
      CHECK(counts.total == Integer(std::to_string(seen)));
      if (k == 2) {
        REQUIRE(counts.ending_with_top_step);
        CHECK(*counts.ending_with_top_step == Integer(std::to_string(ending)));
        CHECK(*counts.ending_with_top_step + *counts.other == counts.total);
      } else {
        CHECK_FALSE(counts.ending_with_top_step);
      }
    }
  CHECK_THROWS_AS(count_all_da_paths(30, 15, 1000), ResourceLimit);
}

TEST_CASE("growth of the split counts") {
  for (int n = 4; n <= 9; ++n) {
    const auto a = count_all_da_paths(n, 2);
    const auto b = count_all_da_paths(n + 1, 2);
    CHECK(*b.ending_with_top_step == *a.ending_with_top_step + 2 * *a.other);
    CHECK(*b.other >= 2 * *a.ending_with_top_step + 4 * *a.other);
    CHECK(*b.ending_with_top_step >= 5 * *a.ending_with_top_step);
  }
}

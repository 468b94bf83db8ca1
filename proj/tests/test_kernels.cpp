#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mpp/errors.hpp"
#include "mpp/generator.hpp"
#include "mpp/kernels.hpp"

using namespace mpp;

TEST_CASE("coherence census") {
  for (int k = 2; k <= 3; ++k) {
    const auto c = default_direction(5);
    const auto paths = collect_monotone_paths(5, k, c);
    const auto s = serial::coherence_census(paths, c);
    for (int threads : {1, 2, 4}) {
      const auto p = omp::coherence_census(paths, c, threads);
      REQUIRE(p.size() == s.size());
      for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(p[i].lp == s[i].lp);
        CHECK(p[i].criterion == s[i].criterion);
      }
    }
  }
}

TEST_CASE("extremeness census") {
  const auto c = default_direction(4);
  std::vector<EmbeddedPoint> cloud;
  std::size_t i = 0;
  for (const auto& p : collect_monotone_paths(4, 2, c)) cloud.push_back(psi_embed(p, c, i++));
  CHECK(omp::extremeness_census(cloud, 3) == serial::extremeness_census(cloud));
}

TEST_CASE("generator level and stream") {
  const auto level = generate_coherent(6);
  const auto s = serial::extend_level(level);
  CHECK(s == generate_coherent(7));
  CHECK(omp::extend_level(level, 3) == s);

  for (int n = 5; n <= 9; ++n) {
    std::vector<LatticePath> a, b;
    for_each_coherent(n, [&](const LatticePath& p) {
      a.push_back(p);
      return true;
    });
    omp::for_each_coherent(n, [&](const LatticePath& p) {
      b.push_back(p);
      return true;
    }, 3);
    CHECK(a == b);
  }
  std::size_t seen = 0;
  omp::for_each_coherent(9, [&](const LatticePath&) { return ++seen < 5; }, 2);
  CHECK(seen == 5);
}

TEST_CASE("exceptions cross the parallel region") {
  // Lattice paths of dimension 3 cannot be extended.
  const auto bad = lattice_path_of(collect_monotone_paths(5, 3, default_direction(5)).front());
  std::vector<LatticePath> parents(8, bad);
  CHECK_THROWS_AS(omp::extend_level(parents, 4), Unsupported);
}

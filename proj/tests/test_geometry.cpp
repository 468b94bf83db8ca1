#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mpp/coherence.hpp"
#include "mpp/geometry.hpp"

using namespace mpp;

TEST_CASE("midpoint of a single edge") {
  const MonotonePath p(2, 1, {Support(2, {1}), Support(2, {2})});
  const auto e = psi_embed(p, default_direction(2));
  CHECK(e.coords == RationalVector{Rational(1, 2), Rational(1, 2)});
  CHECK(is_extreme(0, {e}));
}

TEST_CASE("embedded points lie on the hyperplane sum = k") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n && k <= 3; ++k) {
      const auto c = default_direction(n);
      enumerate_monotone_paths(n, k, c, [&](const MonotonePath& p) {
        Rational sum = 0;
        for (const auto& x : psi_embed(p, c).coords) sum += x;
        CHECK(sum == k);
        return true;
      });
    }
}

TEST_CASE("extremeness of simple clouds") {
  std::vector<EmbeddedPoint> cloud{{{0, 0}, 0}, {{2, 0}, 1}, {{0, 2}, 2}, {{Rational(1, 2), Rational(1, 2)}, 3}, {{1, 1}, 4}};
  CHECK(is_extreme(0, cloud));
  CHECK(is_extreme(1, cloud));
  CHECK(is_extreme(2, cloud));
  CHECK_FALSE(is_extreme(3, cloud));
  CHECK_FALSE(is_extreme(4, cloud));
  // A duplicate of an extreme point does not hide it.
  cloud.push_back({{0, 0}, 5});
  CHECK(is_extreme(0, cloud));
}

TEST_CASE("vertices of small monotone path polytopes") {
  struct Case {
    int n, k;
    std::size_t vertices;
  };
  for (const auto& t : {Case{3, 2, 2}, Case{4, 2, 8}, Case{5, 2, 33}, Case{4, 3, 4}, Case{5, 3, 33}, Case{4, 1, 4},
                        Case{5, 1, 8}}) {
    const auto r = mpp_vertices(t.n, t.k, default_direction(t.n));
    CHECK(r.vertex_count == t.vertices);
    CHECK(r.disagreements == 0);
    CHECK(r.points.size() == r.paths.size());
    CHECK(r.distinct_points + r.merged_paths == r.paths.size());
    for (std::size_t i = 0; i < r.paths.size(); ++i) CHECK(r.is_vertex[i] == r.lp_coherent[i]);
  }
}

TEST_CASE("(4,2) octagon excludes exactly the two long non-coherent paths") {
  const auto r = mpp_vertices(4, 2, default_direction(4));
  for (std::size_t i = 0; i < r.paths.size(); ++i)
    if (!r.is_vertex[i]) CHECK(r.paths[i].length() == 5);
}

TEST_CASE("parallel vertex test matches serial") {
  const auto a = mpp_vertices(5, 2, default_direction(5), 200'000, 1);
  const auto b = mpp_vertices(5, 2, default_direction(5), 200'000, 4);
  CHECK(a.is_vertex == b.is_vertex);
  CHECK(a.lp_coherent == b.lp_coherent);
}

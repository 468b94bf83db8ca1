#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "mpp/errors.hpp"
#include "mpp/io.hpp"

using namespace mpp;
using io::Json;

TEST_CASE("path JSON round trip") {
  for (const auto& p : collect_monotone_paths(5, 2, default_direction(5))) {
    const Json j = io::to_json(p);
    CHECK(io::path_from_json(Json::parse(j.dump())) == p);
  }
  const MonotonePath p(3, 2, {Support(3, {1, 2}), Support(3, {2, 3})});
  CHECK(io::to_json(p).dump() == R"({"k":2,"n":3,"supports":[[1,2],[2,3]]})");
}

TEST_CASE("step and lattice JSON") {
  const EnhancedStep s{2, 3, {1, 4}};
  CHECK(io::to_json(s).dump() == R"({"Z":[1,4],"x":2,"y":3})");
  CHECK(io::step_from_json(io::to_json(s)) == s);
  const auto l = lattice_path_of(collect_monotone_paths(4, 2, default_direction(4))[3]);
  CHECK(io::lattice_from_json(Json::parse(io::to_json(l).dump())) == l);
}

TEST_CASE("certificate JSON") {
  const CoherenceCertificate yes{true, RationalVector{Rational(-1), Rational(1, 2), Rational(0)}};
  CHECK(io::to_json(yes).dump() == R"({"coherent":true,"omega":["-1/1","1/2","0/1"]})");
  const auto back = io::certificate_from_json(io::to_json(yes));
  CHECK(back.coherent);
  CHECK(*back.witness == *yes.witness);
  const CoherenceCertificate no{false, std::nullopt};
  CHECK(io::to_json(no).dump() == R"({"coherent":false})");
  CHECK_FALSE(io::certificate_from_json(io::to_json(no)).witness);
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS_AS(io::path_from_json(Json::parse(R"({"n":3,"k":2})")), InvalidParameter);
  CHECK_THROWS_AS(io::path_from_json(Json::parse(R"({"n":"x","k":2,"supports":[]})")), InvalidParameter);
  CHECK_THROWS(io::path_from_json(Json::parse(R"({"n":3,"k":2,"supports":[[1,2],[1,2]]})")));
  CHECK_THROWS_AS(io::rationals_from_json(Json::parse(R"(["1/0"])")), InvalidParameter);
  CHECK_THROWS_AS(io::rationals_from_json(Json::parse(R"([1])")), InvalidParameter);
}

TEST_CASE("labels and CSV") {
  CHECK(io::support_label(Support(4, {1, 3, 4})) == "134");
  CHECK(io::support_label(Support(12, {1, 10})) == "1,10");
  std::ostringstream os;
  io::write_csv_row(os, {"a", "b,c", "d\"e"});
  CHECK(os.str() == "a,\"b,c\",\"d\"\"e\"\n");
}

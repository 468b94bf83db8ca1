#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
  std::vector<std::string> lines() const {
    std::vector<std::string> v;
    std::istringstream is(out);
    for (std::string line; std::getline(is, line);) v.push_back(line);
    return v;
  }
};

Run run(const std::string& args) {
  const std::string cmd = std::string(MPP_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST_CASE("enumerate") {
  auto r = run("enumerate --n 4 --k 2 --coherent-only --oracle lp");
  CHECK(r.status == 0);
  CHECK(r.lines().size() == 8);
  r = run("enumerate --n 3 --k 2");
  CHECK(r.status == 0);
  REQUIRE(r.lines().size() == 2);
  const auto j = nlohmann::json::parse(r.lines()[0]);
  CHECK(j["n"] == 3);
  CHECK(j["supports"].size() == 2);

  r = run("enumerate --n 4 --k 2 --oracle both");
  CHECK(r.status == 0);
  REQUIRE(r.lines().size() == 10);
  for (const auto& line : r.lines()) {
    const auto rec = nlohmann::json::parse(line);
    CHECK(rec["lp"] == rec["criterion"]);
  }
}

TEST_CASE("enumerate with both oracles on k = 3 warns but succeeds") {
  const auto r = run("enumerate --n 5 --k 3 --oracle both --format csv");
  CHECK(r.status == 0);
  CHECK(r.lines().size() == 63);
  CHECK(r.lines()[0] == "index,length,supports,lp,criterion");
}

TEST_CASE("enumerate maps a user direction back") {
  const auto r = run("enumerate --n 3 --k 1 --c 3,2,1");
  REQUIRE(r.lines().size() == 2);
  CHECK(nlohmann::json::parse(r.lines()[0])["supports"].front() == std::vector<int>{3});
  CHECK(nlohmann::json::parse(r.lines()[0])["supports"].back() == std::vector<int>{1});
}

TEST_CASE("count") {
  auto r = run("count --n 5");
  CHECK(r.status == 0);
  CHECK(r.lines() == std::vector<std::string>{"n,t,q,c,total", "5,13,6,14,33"});
  r = run("count --n 11 --by-length");
  CHECK(r.status == 0);
  std::vector<std::string> counts;
  for (std::size_t i = 1; i < r.lines().size(); ++i) {
    const auto& line = r.lines()[i];
    counts.push_back(line.substr(line.rfind(',') + 1));
  }
  CHECK(counts == std::vector<std::string>{"4", "88", "756", "3703", "11627", "24416", "34622", "32725", "19881",
                                           "7236", "1375", "99", "1"});
  r = run("count --n 300");
  CHECK(r.status == 0);
  CHECK(r.lines().size() == 2);
  r = run("count --n-max 8 --format json");
  CHECK(r.lines().size() == 5);
  CHECK(nlohmann::json::parse(r.lines().back())["total"] == "2133");
}

TEST_CASE("embed") {
  auto r = run("embed --n 2 --k 1");
  CHECK(r.status == 0);
  CHECK(r.lines() == std::vector<std::string>{"coord_1,coord_2,is_vertex", "1/2,1/2,true"});
  r = run("embed --n 3 --k 2");
  CHECK(r.lines().size() == 3);
  r = run("embed --n 5 --k 2");
  std::size_t vertices = 0;
  for (const auto& line : r.lines()) vertices += line.size() > 5 && line.substr(line.size() - 4) == "true";
  CHECK(vertices == 33);
}

TEST_CASE("capture") {
  auto r = run("capture --n 4 --k 2 --omega 0,1,3,100");
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["supports"] == nlohmann::json::parse("[[1,2],[1,4],[3,4]]"));
  CHECK(j["lp"] == true);
  CHECK(run("capture --n 4 --k 2 --omega 0,0,0,0").status == 4);
  CHECK(run("capture --n 4 --k 2 --omega 0,1").status == 2);
}

TEST_CASE("gap search") {
  auto r = run("gap-search --k 3 --n-max 8");
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 5);
  CHECK(j["criterion"] == true);
  CHECK(j["lp"] == false);
  CHECK(run("gap-search --k 2 --n-max 8").status == 2);
  r = run("gap-search --k 3 --n-max 4");
  CHECK(r.status == 0);
  CHECK(r.out == "none\n");
  CHECK(run("gap-search --k 3 --n-max 8 --max-paths 3").status == 3);
}

TEST_CASE("generate") {
  auto r = run("generate --n 6");
  CHECK(r.status == 0);
  CHECK(r.lines().size() == 133);
  const auto threaded = run("generate --n 8 --threads 3");
  const auto single = run("generate --n 8");
  CHECK(threaded.out == single.out);
  CHECK(single.lines().size() == 2133);
  r = run("generate --n 4 --format csv");
  CHECK(r.lines().size() == 9);
  CHECK(r.lines()[0] == "index,type,length,points");
}

TEST_CASE("usage errors and determinism") {
  CHECK(run("enumerate --n 4 --k 7").status == 2);
  CHECK(run("enumerate --n 4").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("enumerate --n 4 --k 2 --format xml").status == 2);
  CHECK(run("enumerate --n 4 --k 2 --c 1,1,2,3").status == 2);
  CHECK(run("enumerate --n 7 --k 3 --max-paths 10").status == 3);
  CHECK(run("count --n 3").status == 2);
  CHECK(run("enumerate --n 5 --k 2 --oracle both --threads 4").out == run("enumerate --n 5 --k 2 --oracle both").out);
  CHECK(run("--help").status == 0);
}

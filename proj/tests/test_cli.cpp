#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hatgame/artifacts.hpp"
#include "hatgame/cli.hpp"

using namespace hatgame;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hatgame");
  std::ostringstream out;
  std::ostringstream err;
  const int status = run_command(args, out, err);
  return {status, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("hatgame_test_" + name);
}

}  // namespace

TEST_CASE("enumerate writes 324 records deterministically") {
  const auto first = temp_path("sets1.json");
  const auto second = temp_path("sets2.json");
  auto r = run({"enumerate", "--players", "3", "--colors", "3", "--size", "12", "--out", first.string()});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("324 adequate sets") != std::string::npos);
  r = run({"enumerate", "--size", "12", "--workers", "3", "--out", second.string()});
  REQUIRE(r.status == 0);
  CHECK(slurp(first) == slurp(second));
  std::ifstream in(first);
  CHECK(read_set_list(in).sets.size() == 324);

  const auto patterns = temp_path("patterns.csv");
  r = run({"patterns", "--in", first.string(), "--out", patterns.string()});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("75 patterns") != std::string::npos);
  const std::string csv = slurp(patterns);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 76);

  r = run({"dominance", "--in", first.string()});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("dominant patterns: 3") != std::string::npos);
  CHECK(r.out.find(" 1 3 3 1 0 0 0 3 0 1") != std::string::npos);
  for (const auto& p : {first, second, patterns}) std::filesystem::remove(p);
}

TEST_CASE("solve and classify report the anchors") {
  auto r = run({"solve", "--probs", "0.7,0.2,0.1", "--mode", "exhaustive"});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("value: 0.758 (exact 379/500)") != std::string::npos);
  CHECK(r.out.find("optimal sets: 3") != std::string::npos);
  CHECK(r.out.find("4 5 7 8 9 13 14 16 17 18 20 24") != std::string::npos);

  r = run({"solve", "--probs", "1/3,1/3,1/3", "--mode", "closed_form"});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("exact 5/9") != std::string::npos);

  r = run({"classify", "--probs", "0.35,0.33,0.32"});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("region: C") != std::string::npos);
  CHECK(r.out.find("value: 0.5649") != std::string::npos);

  const auto out = temp_path("solution.json");
  r = run({"solve", "--probs", "1/2,1/3,1/6", "--out", out.string()});
  REQUIRE(r.status == 0);
  std::ifstream in(out);
  CHECK(read_solution(in).optimal.size() == 3);
  std::filesystem::remove(out);
}

TEST_CASE("strategy, simulate, min-das, complexity, region-map") {
  auto r = run({"strategy", "--codes", "0,2,6,13,14,16,17,18,22,23,25,26", "--probs", "1/3,1/3,1/3"});
  REQUIRE(r.status == 0);
  CHECK(r.out.rfind("\t00\t01\t02\t10\t11\t12\t20\t21\t22\n1\t1\t\t\t\t0\t0\t\t0\t0\n", 0) == 0);
  CHECK(r.out.find("win probability: 0.555555555555556 (exact 5/9)") != std::string::npos);

  r = run({"strategy", "--codes", "4 5 7 8 9 13 14 16 17 18 20 24", "--format", "json"});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("\"kind\":\"decision_matrix\"") != std::string::npos);

  const std::vector<std::string> sim{"simulate", "--codes", "4,5,7,8,9,13,14,16,17,18,20,24",
                                     "--probs", "0.7,0.2,0.1", "--trials", "20000", "--seed", "9"};
  r = run(sim);
  REQUIRE(r.status == 0);
  CHECK(r.out.find("exact: 0.758") != std::string::npos);
  CHECK(run(sim).out == r.out);

  r = run({"min-das", "--players", "4", "--colors", "2"});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("min das: 4") != std::string::npos);
  CHECK(r.out.find("uniform win probability: 3/4") != std::string::npos);

  r = run({"complexity", "--players", "3", "--colors", "3", "--size", "12"});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("brute force: 18014398509481984 (1.80144E+16)") != std::string::npos);
  CHECK(r.out.find("reduced: 281474976710656 (2.81475E+14)") != std::string::npos);
  CHECK(r.out.find("adequate set method: 17383860") != std::string::npos);

  r = run({"region-map", "--step", "0.1"});
  REQUIRE(r.status == 0);
  CHECK(r.out.rfind("p,r,label,psi\n", 0) == 0);
}

TEST_CASE("exit statuses") {
  CHECK(run({}).status == 1);
  CHECK(run({"bogus"}).status == 1);
  CHECK(run({"classify", "--probs", "0.5,0.4,0.1", "--bogus"}).status == 1);
  CHECK(run({"classify", "--probs", "0.5,0.4,0.2"}).status == 1);
  CHECK(run({"classify", "--probs", "0.5,0.5"}).status == 1);
  CHECK(run({"enumerate", "--players", "7", "--colors", "2", "--size", "3"}).status == 2);
  CHECK(run({"min-das", "--players", "2", "--colors", "6"}).status == 2);
  CHECK(run({"strategy", "--codes", "0,1,2"}).status == 1);
  CHECK(run({"simulate", "--codes", "0,2,6,13,14,16,17,18,22,23,25,26", "--probs", "1/3,1/3,1/3",
             "--trials", "0"}).status == 1);
  CHECK(run({"patterns", "--in", "/nonexistent/file.json"}).status == 1);
  CHECK(run({"solve", "--probs", "0.7,0.2,0.1", "--mode", "magic"}).status == 1);
  CHECK(run({"--help"}).status == 0);
}

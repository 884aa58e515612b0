#include <doctest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "dualcox/cli.hpp"
#include "dualcox/verify.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = dualcox::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("info") {
  const Result r = run({"info", "A2", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"type\":\"A2\",\"rank\":2,\"n_pos_roots\":3,\"order\":6}\n");
  const Result big = run({"info", "E8", "--json"});
  CHECK(big.code == 0);
  CHECK(nlohmann::json::parse(big.out).count("order") == 0);
  CHECK(nlohmann::json::parse(run({"info", "E8", "--json", "--cap", "1000000000"}).out)["order"] ==
        696729600);
  const Result subs = run({"info", "G2", "--with-subgroups", "--json"});
  CHECK(nlohmann::json::parse(subs.out)["subgroups"].size() ==
        dualcox::verify::subgroups_from_subsets(dualcox::build_group("G2")).size());
}

TEST_CASE("reflen") {
  CHECK(run({"reflen", "A2", "-w", ""}).out == "0\n");
  CHECK(run({"reflen", "D4", "-w", "s1 (s2 s1 s2) (s2 s0 s2) s3"}).out == "4\n");
  CHECK(run({"reflen", "B4", "-c", "(1,-2,-1,2)(3,4,-3,-4)"}).out == "4\n");
  CHECK(run({"reflen", "A3", "-c", "(1,2,3)"}).out == "2\n");
}

TEST_CASE("cycledec over all orbits in G2") {
  const Result r = run({"cycledec", "G2", "-w", "s t s t", "--all-orbits", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["orbits"].size() == 2);
  for (const auto& o : j["orbits"]) {
    CHECK(o["decomposition"]["factors"].size() == 1);
    CHECK(o["decomposition"]["ambient"]["type"] == "A2");
  }
  CHECK(j["orbits"][0]["decomposition"]["ambient"]["reflections"] !=
        j["orbits"][1]["decomposition"]["ambient"]["reflections"]);
  CHECK(j["factors_coincide"] == true);
  CHECK(j["closures_pairwise_distinct"] == true);
}

TEST_CASE("cycledec in type A") {
  const Result r = run({"cycledec", "A4", "-c", "(1,3)(2,5,4)", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["factors"].size() == 2);
  // (4,5) is simple and lies in the closure of the 3-cycle, so that factor sorts first.
  CHECK(j["factors"][0]["cycles"] == "(2,5,4)");
  CHECK(j["factors"][1]["cycles"] == "(1,3)");
}

TEST_CASE("other verbs") {
  CHECK(run({"perm", "D4", "-w", "s1 (s2 s1 s2) (s2 s0 s2) s3"}).out == "(1,-2,-1,2)(3,4,-3,-4)\n");
  CHECK(run({"indec", "A3", "-w", "0 2"}).out == "decomposable\n");
  CHECK(run({"indec", "D4", "-w", "s1 (s2 s1 s2) (s2 s0 s2) s3"}).out == "indecomposable\n");
  CHECK(run({"reds", "A2", "-w", "0 1"}).out.rfind("3 reduced expressions\n", 0) == 0);
  CHECK(run({"orbits", "G2", "-w", "s t s t"}).out.rfind("2 orbits\n", 0) == 0);
  CHECK(run({"closure", "A3", "-w", "0 2"}).out == "A1xA1 {t0 t2} parabolic\n");
  CHECK(run({"verify", "g2-orbits"}).code == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({"info", "Q7"}).code == 2);
  CHECK(run({"reflen", "A2", "-w", "s7"}).code == 2);
  CHECK(run({"reflen", "A2"}).code == 2);
  CHECK(run({"frobnicate", "A2"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"verify", "nonsense"}).code == 2);
  CHECK(run({"reflen", "A2", "-w", "0", "--cap", "0"}).code == 2);
  const Result refused = run({"cycledec", "G2", "-w", "s t s t"});
  CHECK(refused.code == 1);
  CHECK(refused.err.find("not a parabolic quasi-Coxeter element") != std::string::npos);
  const Result capped = run({"reds", "A4", "-w", "0 1 2 3", "--cap", "10"});
  CHECK(capped.code == 1);
  CHECK(capped.err.find("--cap") != std::string::npos);
  CHECK(run({"perm", "G2", "-w", "s"}).code == 1);
  const Result json_error = run({"reds", "A4", "-w", "0 1 2 3", "--cap", "10", "--json"});
  CHECK(nlohmann::json::parse(json_error.out)["error"]["kind"] == "domain");
}

TEST_CASE("environment cap") {
  setenv("DUALCOX_CAP", "10", 1);
  CHECK(run({"reds", "A4", "-w", "0 1 2 3"}).code == 1);
  CHECK(run({"reds", "A4", "-w", "0 1 2 3", "--cap", "1000"}).code == 0);
  setenv("DUALCOX_CAP", "ten", 1);
  CHECK(run({"reflen", "A2", "-w", "0"}).code == 2);
  unsetenv("DUALCOX_CAP");
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"cycledec", "B4", "-c", "(1,-2,-1,2)(3,4,-3,-4)", "--all-orbits", "--json"};
  const Result a = run(args);
  const Result b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

}

#include "bgmu/catalog.hpp"
#include "bgmu/json_io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using namespace bgmu;
using json = nlohmann::json;

namespace {

std::string bgmu_bin() {
  const char* p = std::getenv("BGMU_BIN");
  REQUIRE_MESSAGE(p != nullptr, "BGMU_BIN must point at the CLI binary");
  return p;
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  RunResult r;
  std::string cmd = bgmu_bin() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.output.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("root datum JSON round trip") {
  for (const char* family : {"GL", "SL", "PGL", "Sp", "SO_odd", "U"}) {
    RootDatum rd = build_group({family, 3});
    RootDatum back = root_datum_from_json_string(root_datum_to_json_string(rd));
    CHECK(back.rank() == rd.rank());
    CHECK(back.simple_roots() == rd.simple_roots());
    CHECK(back.simple_coroots() == rd.simple_coroots());
    CHECK(back.weight_lifts() == rd.weight_lifts());
    CHECK(back.galois_generators().size() == rd.galois_generators().size());
  }
  CHECK_THROWS_AS(root_datum_from_json_string("not json"), std::invalid_argument);
  CHECK_THROWS_AS(root_datum_from_json_string("{\"rank\": -1}"),
                  std::invalid_argument);
}

TEST_CASE("rational serialization is lowest-terms p/q") {
  CHECK(rat_string(Rat(4, 6)) == "2/3");
  CHECK(rat_string(Rat(-4, 6)) == "-2/3");
  CHECK(rat_string(Rat(8, 4)) == "2");
  CHECK(rat_string(Rat(0)) == "0");
  CHECK(parse_int_vector("4, 0") == IntVec{4, 0});
  CHECK_THROWS_AS(parse_int_vector("4,,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_int_vector("a,b"), std::invalid_argument);
}

TEST_CASE("enumerate subcommand emits the expected JSON") {
  RunResult r = run_cli("enumerate --family GL --n 2 --mu 4,0 --b-kappa 2,2");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.output);
  CHECK(doc["group"] == "GL2");
  REQUIRE(doc["strata"].size() == 3);
  CHECK(doc["strata"][0]["basic"] == true);
  CHECK(doc["strata"][1]["newton"] == json::array({"1", "-1"}));
  CHECK(doc["strata"][2]["hn_decomposable"] == true);
  // deterministic byte-identical output
  RunResult again = run_cli("enumerate --family GL --n 2 --mu 4,0 --b-kappa 2,2");
  CHECK(again.output == r.output);
}

TEST_CASE("poset dot output and orientation flip") {
  RunResult dot = run_cli("poset --family GL --n 2 --mu 4,0 --b-kappa 2,2 --format dot");
  REQUIRE(dot.exit_code == 0);
  CHECK(dot.output.find("digraph") != std::string::npos);
  CHECK(dot.output.find("n0 -> n1") != std::string::npos);
  RunResult flipped = run_cli(
      "poset --family GL --n 2 --mu 4,0 --b-kappa 2,2 --format dot --bun-order");
  CHECK(flipped.output.find("n1 -> n0") != std::string::npos);
  CHECK(flipped.output.find("n0 -> n1") == std::string::npos);
}

TEST_CASE("cells, b-of-lambda and minimal-lambda subcommands") {
  RunResult cells = run_cli("cells --family GL --n 2 --mu 4,0 --b-kappa 2,2");
  REQUIRE(cells.exit_code == 0);
  json cdoc = json::parse(cells.output);
  REQUIRE(cdoc["cells"].size() == 5);
  int excluded = 0;
  for (const auto& c : cdoc["cells"])
    if (c["wa_excluded"].get<bool>()) ++excluded;
  CHECK(excluded == 2);

  RunResult bol = run_cli("b-of-lambda --family GL --n 7 --lambda 1,0,0,1,0,1,0");
  REQUIRE(bol.exit_code == 0);
  json bdoc = json::parse(bol.output);
  CHECK(bdoc["class"]["newton"] ==
        json::array({"1/2", "1/2", "1/2", "1/2", "1/3", "1/3", "1/3"}));

  RunResult ml = run_cli("minimal-lambda --family GL --n 7 --kappa 4,0,0,0,0,0,0");
  REQUIRE(ml.exit_code == 0);
  json mdoc = json::parse(ml.output);
  CHECK(mdoc["lambda"] ==
        json::array({"1", "1", "0", "1", "0", "1", "0"}));
}

TEST_CASE("hn-report subcommand") {
  RunResult r = run_cli("hn-report --family GL --n 2 --mu 4,0 --b-kappa 2,2");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.output);
  CHECK(doc["fully_hn_decomposable"] == false);
  REQUIRE(doc["strata"].size() == 3);
  CHECK(doc["strata"][2]["hn_decomposable"] == true);
  CHECK(doc["strata"][2]["levi_membership_verified"] == true);
}

TEST_CASE("group file input") {
  std::string path = "cli_test_group.json";
  {
    std::ofstream out(path);
    out << root_datum_to_json_string(build_group({"GL", 2}));
  }
  RunResult r = run_cli("enumerate --group " + path + " --mu 4,0 --b-kappa 2,2");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.output)["strata"].size() == 3);
  std::remove(path.c_str());
}

TEST_CASE("exit codes distinguish bad input") {
  CHECK(run_cli("enumerate --family GL --n 2 --mu 0,1 --b-kappa 0,0").exit_code == 2);
  CHECK(run_cli("enumerate --family NOPE --n 2 --mu 1,0 --b-kappa 0,0").exit_code == 2);
  CHECK(run_cli("enumerate --family GL --n 2 --mu 1,0").exit_code == 2);
  CHECK(run_cli("enumerate --family GL --n 2 --mu x,y --b-kappa 0,0").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

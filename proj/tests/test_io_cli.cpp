#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "grpt/io.hpp"

using namespace grpt;

namespace {

std::string const fixtures = GRPT_FIXTURES_DIR;

std::string fixture(std::string const& name) { return read_file(fixtures + "/" + name); }

int run_cli(std::vector<std::string> const& args) {
  std::string cmd = std::string(GRPT_CLI_PATH);
  for (auto const& a : args) cmd += " " + a;
  cmd += " > /dev/null 2>&1";
  int const status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("serialize-parse identity for every schema") {
  auto const g = parse_groupement(fixture("groupement_xor.json"));
  CHECK(serialize(parse_groupement(serialize(g))) == serialize(g));

  auto const m = parse_monoid(fixture("monoid_z2.json"));
  CHECK(serialize(parse_monoid(serialize(m))) == serialize(m));

  auto const t = parse_topology(fixture("topology_sierpinski.json"));
  CHECK(serialize(parse_topology(serialize(t))) == serialize(t));

  auto const f = parse_morphism(fixture("morphism_id_xor.json"), fixtures);
  CHECK(serialize(parse_morphism(serialize(f))) == serialize(f));

  auto const tr = parse_transformation(fixture("transformation_good.json"), fixtures);
  CHECK(serialize(parse_transformation(serialize(tr))) == serialize(tr));

  auto const c = parse_cube(fixture("cube_path2.json"));
  CHECK(serialize(parse_cube(serialize(c))) == serialize(c));

  auto const tg = parse_two_groupement(fixture("two_groupement_good.json"));
  CHECK(serialize(parse_two_groupement(serialize(tg))) == serialize(tg));

  ClassicCategory classic;
  classic.objects = 2;
  classic.morphisms = {{0, 0}, {1, 1}, {0, 1}};
  classic.id = {0, 1};
  classic.comp = {{{0, 0, 0}}, {{1, 1, 1}}, {{2, 0, 2}}, {{1, 2, 2}}};
  CHECK(serialize(parse_classic(serialize(classic))) == serialize(classic));
}

TEST_CASE("rationals are normalized strings end to end") {
  auto const c =
      parse_cube(R"({"k":1,"dim":1,"grids":[["0","2/2"]],"values":[["0"],["4/6"]]})");
  auto const text = serialize(c);
  CHECK(text.find("\"2/3\"") != std::string::npos);
  CHECK(text.find("2/2") == std::string::npos);
  CHECK(text.find("4/6") == std::string::npos);
}

TEST_CASE("parse errors carry positions or paths") {
  try {
    parse_groupement(fixture("groupement_bad_shape.json"));
    FAIL("expected ParseError");
  } catch (ParseError const& e) {
    CHECK(std::string(e.what()).find("at /") != std::string::npos);
  }
  try {
    parse_groupement("{\"n\": 1, \"s\": [0], \"t\": [0], \"comp\": [[\"x\"]]}");
    FAIL("expected ParseError");
  } catch (ParseError const& e) {
    CHECK(std::string(e.what()).find("/comp/0") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_cube(R"({"k":1,"dim":1,"grids":[["0","-1"]],"values":[["0"],["1"]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_cube(R"({"k":1,"dim":1,"grids":[["0","1/0"]],"values":[["0"],["1"]]})"),
                  ParseError);
}

TEST_CASE("CLI exit-code contract over every fixture") {
  using json = nlohmann::json;
  std::ifstream in(fixtures + "/cli_contract.json");
  REQUIRE(in.good());
  json manifest;
  in >> manifest;
  REQUIRE(manifest["cases"].size() >= 30);
  for (auto const& c : manifest["cases"]) {
    std::vector<std::string> args;
    for (auto const& a : c["args"]) {
      auto s = a.get<std::string>();
      if (s.size() > 5 && s.substr(s.size() - 5) == ".json") s = fixtures + "/" + s;
      args.push_back(s);
    }
    INFO("args: ", c["args"].dump());
    CHECK(run_cli(args) == c["expect"].get<int>());
  }
}

TEST_CASE("CLI machine output is valid JSON with stable ordering") {
  using json = nlohmann::json;
  std::string cmd = std::string(GRPT_CLI_PATH) + " --format machine check " + fixtures +
                    "/groupement_xor.json > /tmp/grpt_cli_probe.json 2>/dev/null";
  REQUIRE(std::system(cmd.c_str()) == 0);
  std::ifstream probe("/tmp/grpt_cli_probe.json");
  json j;
  probe >> j;
  CHECK(j["ok"].get<bool>());
  REQUIRE(j["checks"].size() == 3);
  CHECK(j["checks"][0]["axiom"] == "GR 1");
  CHECK(j["checks"][1]["axiom"] == "GR 2");
  CHECK(j["checks"][2]["axiom"] == "GR 3");
}

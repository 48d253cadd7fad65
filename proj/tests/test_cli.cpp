#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "fixtures.hpp"
#include "limhodge/errors.hpp"
#include "limhodge/io.hpp"

using namespace limhodge;
using namespace fx;
using nlohmann::json;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(LIMHODGE_CLI) + " " + args + " 2>&1";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
  const int st = pclose(f);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string sample(const std::string& name) { return std::string(LIMHODGE_SAMPLES) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = std::string(LIMHODGE_TMP) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("parse input") {
  ParsedInput in = parse_input_text(read_file(sample("worked_example.json")));
  CHECK(in.dim == 2);
  CHECK(in.points.size() == 6);
  Subdivision s = build_subdivision(in);
  CHECK(s.polytope().vertices() == std::vector<IVec>{{0, 0}, {0, 4}, {4, 0}});
  CHECK(s.maximal_cells().size() == 4);
  CHECK(build_subdivision(parse_input_text(read_file(sample("square.json")))).is_trivial());

  ParsedInput h = parse_input(json::parse(R"({"dim":1,"points":[{"coords":[0],"height":"1/2"},{"coords":[2],"height":"2/4"},{"coords":[1]}]})"));
  CHECK(h.points[0].height == Rational(1, 2));
  CHECK(h.points[1].height == Rational(1, 2));
  CHECK(h.points[2].height == 0);
  CHECK(build_subdivision(h).maximal_cells().size() == 2);

  auto error_of = [](const std::string& text) {
    try {
      parse_input_text(text);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(error_of(R"({"dim":2,"points":[{"coords":[0,0.5]}]})").find("points[0].coords[1]") == 0);
  CHECK(error_of(R"({"dim":2,"points":[[0,0],[1,2,3]]})").find("points[1]") == 0);
  CHECK(error_of(R"({"dim":2,"points":[[0,0]],"colour":1})").find("colour") == 0);
  CHECK(error_of(R"({"dim":2,"points":[{"coords":[0,0],"height":"x/y"}]})").find("points[0].height") == 0);
  CHECK(error_of("{\"dim\":2,\n\"points\":[\n[0,0],\n]}").find("line 4") == 0);
  CHECK(error_of(R"({"points":[[0]]})").find("dim") == 0);
}

TEST_CASE("hash") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("hodge command output") {
  Run r = run("hodge " + sample("worked_example.json"));
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["command"] == "hodge");
  CHECK(j["input_hash"] == fnv1a_hex(read_file(sample("worked_example.json"))));
  CHECK(poly_from_json(j["results"]["refined_E"]) == -11 - 3 * (1 + u() * v()) * w() + u() * v() * w() * w());
  CHECK(poly_from_json(j["results"]["nearby_fiber_L"]) == -14 - 2 * L());
  CHECK(j["tables"]["hodge_numbers"]["refined"]["0,0,0"] == "9");
  CHECK(j["tables"]["hodge_numbers"]["refined"]["0,0,1"] == "3");
  CHECK(j["tables"]["hodge_numbers"]["refined"]["1,1,1"] == "3");
}

TEST_CASE("every command round-trips and is deterministic") {
  for (const std::string cmd : {"hstar", "gpoly", "invariants", "hodge", "intersection", "nearby", "dk-check", "verify"}) {
    CAPTURE(cmd);
    Run a = run(cmd + " " + sample("worked_example.json"));
    Run b = run(cmd + " " + sample("worked_example.json"));
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    json j = json::parse(a.out);
    for (const auto& key : {"schema_version", "command", "input_hash", "results", "tables", "checks"})
      CHECK(j.contains(key));
    for (const auto& [name, value] : j["results"].items()) CHECK(to_json(poly_from_json(value)) == value);
    for (const auto& c : j["checks"]) CHECK(c["passed"] == true);
    CHECK(json::parse(j.dump()) == j);
  }
  Run s = run("stringy " + sample("square.json"));
  CHECK(s.status == 0);
  json j = json::parse(s.out);
  CHECK(poly_from_json(j["results"]["stringy_E_generic"]) == (1 - u()) * (1 - w()));
}

TEST_CASE("exit codes") {
  CHECK(run("verify " + sample("simplex3.json")).status == 0);
  CHECK(run("dk-check --random 4 --seed 2").status == 0);
  CHECK(run("verify --random 4 --seed 5").status == 0);
  Run bad = run("hstar " + write_temp("rational.json", R"({"dim":2,"points":[[0,0],[1,0.5]]})"));
  CHECK(bad.status == 1);
  CHECK(bad.out.find("points[1][1]") != std::string::npos);
  CHECK(run("hstar /nonexistent/file.json").status == 1);
  // Not reflexive: stringy E is undefined.
  CHECK(run("stringy " + sample("worked_example.json")).status == 1);
  CHECK(run("hodge --format text " + sample("worked_example.json")).out.find("refined_E = -11") !=
        std::string::npos);
}

TEST_CASE("partial compactification from a subfan") {
  Run r = run("hodge " + sample("cube_subfan.json"));
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  const LaurentPoly x = u() * v() * w() * w();
  CHECK(poly_from_json(j["results"]["refined_E"]) == 7 - 2 * x + x * x);
  // Six facet strata, each a curve of class uvw^2 - 3 in the torus.
  CHECK(poly_from_json(j["results"]["partial_compactification_E"]) == 7 - 2 * x + x * x + 6 * (x - 3));
}

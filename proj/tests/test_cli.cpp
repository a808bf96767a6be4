#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "twomega/cli.hpp"
#include "twomega/generators.hpp"
#include "twomega/graph_io.hpp"

using namespace twomega;
using nlohmann::json;

namespace {

struct run_result {
  int code = 0;
  std::string out;
  std::string err;

  json as_json() const { return json::parse(out); }
};

run_result run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli_main(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("twomega_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("gen emits graph6", "[cli]") {
  auto r = run({"gen", "complete", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "C~\n");
  r = run({"gen", "wall", "1", "1"});
  CHECK(r.code == 0);
  CHECK(parse_graph6(r.out.substr(0, r.out.size() - 1)).order() == 6);
  r = run({"gen", "all", "4", "--connected"});
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
  r = run({"gen", "random", "8", "--p", "0.5", "--seed", "3", "--count", "4"});
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
  CHECK(run({"gen", "random", "8", "--p", "0.5", "--seed", "3", "--count", "4"}).out == r.out);
}

TEST_CASE("invariant reads graph6 or edge lists", "[cli]") {
  auto r = run({"invariant", "treewidth"}, "C~\n");
  REQUIRE(r.code == 0);
  auto j = r.as_json();
  CHECK(j.at("value") == 3);
  CHECK(j.at("witness").contains("bags"));

  r = run({"invariant", "clique"}, "4 3\n0 1\n1 2\n2 3\n");
  REQUIRE(r.code == 0);
  CHECK(r.as_json().at("value") == 2);

  r = run({"invariant", "minimal_separators"}, emit_graph6(cycle(4)) + "\n");
  CHECK(r.as_json().at("value") == 2);
  CHECK(run({"invariant", "hadwiger"}, emit_graph6(complete_bipartite(3, 3))).as_json().at("value") == 4);
}

TEST_CASE("contains reports the witness", "[cli]") {
  auto r = run({"contains", "--relation", "induced_minor", "--pattern", emit_graph6(cycle(4)), "--host",
                emit_graph6(cycle(6))});
  REQUIRE(r.code == 0);
  auto j = r.as_json();
  CHECK(j.at("result") == "true");
  CHECK(j.at("witness").at("bags").size() == 4);

  r = run({"contains", "--relation", "minor", "--pattern", emit_graph6(complete(4))}, emit_graph6(cycle(6)));
  CHECK(r.as_json().at("result") == "false");
}

TEST_CASE("classify gives the verdict and binding", "[cli]") {
  auto r = run({"classify", "--relation", "induced_topological_minor", "--pattern", emit_graph6(complete_minus_edge(4))});
  REQUIRE(r.code == 0);
  auto j = r.as_json();
  CHECK(j.at("bounded") == true);
  CHECK(j.at("binding").at("formula") == "max(k-1, 2)");

  r = run({"classify", "--set", emit_graph6(star(3))});
  CHECK(r.as_json().at("bounded") == false);
}

TEST_CASE("recognize returns certificates", "[cli]") {
  auto j = run({"recognize", "chordal"}, emit_graph6(cycle(5))).as_json();
  CHECK(j.at("member") == false);
  CHECK(j.at("witness").at("hole").size() == 5);
  j = run({"recognize", "k1q_free", "--q", "3"}, emit_graph6(star(3))).as_json();
  CHECK(j.at("member") == false);
  CHECK(j.at("witness").at("independent").size() == 3);
  CHECK(run({"recognize", "planar"}, emit_graph6(complete(5))).as_json().at("member") == false);
}

TEST_CASE("solve subcommands", "[cli]") {
  const std::string g6 = emit_graph6(disjoint_union(complete(3), complete(2)));
  const auto weights = temp_file("weights.txt", "5\n1\n2\n3\n4\n");
  auto r = run({"solve", "mwis-k1q", "--q", "2", "--weights", weights}, g6);
  REQUIRE(r.code == 0);
  CHECK(r.as_json().at("value") == 9);
  CHECK(run({"solve", "mwis-brute", "--weights", weights}, g6).as_json().at("value") == 9);

  const auto half = temp_file("half.txt", "1/2\n1/3\n1\n");
  r = run({"solve", "mwis-brute", "--weights", half}, emit_graph6(path(3)));
  CHECK(r.as_json().at("scale") == 6);
  CHECK(r.as_json().at("value") == 9);

  r = run({"solve", "mwis-k1q", "--q", "3"}, emit_graph6(star(3)));
  CHECK(r.code == 1);
  CHECK(r.as_json().contains("witness"));

  r = run({"solve", "list-color", "--k", "3"}, emit_graph6(cycle(5)));
  CHECK(r.code == 0);
  CHECK(r.as_json().at("outcome") == "colored");
  r = run({"solve", "list-color", "--k", "3"}, emit_graph6(complete_bipartite(5, 5)));
  CHECK(r.as_json().at("outcome") == "not_in_class");

  r = run({"solve", "approx-clique"}, emit_graph6(complete(8)));
  CHECK(r.as_json().at("omega") == 8);
  CHECK(r.as_json().at("value") == 4);
}

TEST_CASE("verify runs specs and lists suites", "[cli]") {
  auto r = run({"verify", "--list"});
  CHECK(r.out.find("separator\n") != std::string::npos);
  const auto spec = temp_file("spec.json", R"({"name": "cactus", "class": {"named": "block_cactus"},
    "generators": [{"family": "random_block_cactus", "min_n": 2, "max_n": 5, "count": 20}]})");
  const auto jsonl = (std::filesystem::temp_directory_path() / "twomega_cli_rows.jsonl").string();
  r = run({"verify", "--spec", spec, "--jsonl", jsonl});
  CHECK(r.code == 0);
  CHECK(r.as_json().at("violations") == 0);
  std::ifstream rows(jsonl);
  CHECK(std::count(std::istreambuf_iterator<char>(rows), {}, '\n') == 20);
}

TEST_CASE("exit codes for bad input, usage errors and refusals", "[cli]") {
  CHECK(run({"invariant", "treewidth"}, "C~~\n").code == 2);
  CHECK(run({"invariant", "bogus"}, "C~\n").code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"contains", "--relation", "minor"}).code == 2);
  CHECK(run({"verify", "--spec", "/nonexistent/spec.json"}).code == 2);
  const auto r = run({"--budget", "5", "invariant", "treewidth"}, emit_graph6(random_graph(30, 0.5, 1)));
  CHECK(r.code == 3);
  CHECK(r.as_json().at("result") == "refused");
  CHECK(run({"--help"}).code == 0);
}

#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "galg/commands.hpp"
#include "galg/errors.hpp"
#include "galg/multigraph.hpp"

using namespace galg;

TEST_CASE("series command") {
  const Multigraph tri = cycle_graph(3);
  const auto c = cmd_series(tri, "C");
  CHECK(c.json["series"] == nlohmann::json({1, 2, 3, 1}));
  CHECK(c.json["total"] == 7);
  CHECK(c.json["forests"] == 7);
  CHECK(c.exit_code == kExitOk);

  const auto ct = cmd_series(tri, "CT");
  CHECK(ct.json["total"] == 3);
  CHECK(ct.json["trees"] == 3);

  CHECK(cmd_series(path_graph(2), "K").json["series"] == nlohmann::json({1, 1}));
  CHECK(cmd_series(tri, "generic").json["consensus"] == true);
  CHECK_THROWS_AS(cmd_series(tri, "Z"), InvalidInput);

  const auto dir = std::filesystem::temp_directory_path();
  const auto good = dir / "galg_test_f.txt";
  std::ofstream(good) << "0, 1, 1/2\n";
  CHECK(cmd_series(tri, "f:" + good.string()).json["total"] == 7);
  const auto bad = dir / "galg_test_f_bad.txt";
  std::ofstream(bad) << "1, 1\n";
  CHECK_THROWS_AS(cmd_series(tri, "f:" + bad.string()), InvalidInput);
  std::filesystem::remove(good);
  std::filesystem::remove(bad);
}

TEST_CASE("check command") {
  const auto tri = cmd_check(cycle_graph(3));
  CHECK(tri.json["passed"] == true);
  CHECK(tri.exit_code == kExitOk);

  const auto k4 = cmd_check(complete_graph(4));
  CHECK(k4.json["passed"] == true);
  bool saw_tree = false;
  for (const auto& c : k4.json["checks"]) {
    if (c["name"] == "tree external activity") {
      saw_tree = true;
      CHECK(c["trees"] == 16);
    }
  }
  CHECK(saw_tree);

  const auto split = cmd_check(Multigraph(4, {{0, 1}, {2, 3}}));
  CHECK(split.json["passed"] == true);
  CHECK(split.json.contains("tree_checks_skipped"));
}

TEST_CASE("search command") {
  SearchOptions o;
  o.vertices = 3;
  o.edges = 3;
  CHECK(cmd_search(o).json["pairs"].empty());

  o.vertices = 9;
  CHECK_THROWS_AS(cmd_search(o), BoundExceeded);
}

TEST_CASE("tutte and reconstruct commands") {
  const auto t = cmd_tutte(cycle_graph(3));
  CHECK(t.json["tutte"] == "x^2 + x + y");
  CHECK(t.json["spanning_trees"] == 3);

  const auto r = cmd_reconstruct(complete_graph(4), 5);
  CHECK(r.json["isomorphic"] == true);
  CHECK_THROWS_AS(cmd_reconstruct(Multigraph(3, {{0, 1}}), 0), InvalidInput);
}

TEST_CASE("exit codes") {
  CHECK(exit_code_for(BoundExceeded("x")) == kExitBound);
  CHECK(exit_code_for(ParseError(1, "x")) == kExitUsage);
  CHECK(exit_code_for(InvalidInput("x")) == kExitUsage);
  CHECK(exit_code_for(Error("x")) == kExitCheckFailed);
}

#include <doctest.h>

#include <string>
#include <vector>

#include "nestoh/io.hpp"

using namespace nestoh;

namespace {

std::string data_path(const char* name) {
  return std::string(NESTOH_TEST_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("building sets round-trip through JSON") {
  for (const BuildingSet& b : {BuildingSet::path(4), BuildingSet::star(3),
                               BuildingSet::stanley_pitman(4)}) {
    CHECK(building_set_from_json(to_json(b)) == b);
  }
  BuildingSet parsed = building_set_from_json(
      "{\"n\": 3, \"sets\": [[3], [1], [2], [2, 1], [2,3], [1, 2, 3]]}");
  CHECK(parsed == BuildingSet::path(3));
}

TEST_CASE("building set JSON rejections carry diagnostics") {
  CHECK_THROWS_AS(building_set_from_json("not json at all"), error);
  CHECK_THROWS_AS(building_set_from_json("{\"n\": 3}"), error);
  CHECK_THROWS_AS(building_set_from_json("{\"sets\": []}"), error);
  CHECK_THROWS_AS(
      building_set_from_json("{\"n\": 3, \"sets\": [[1], \"x\"]}"), error);
  try {
    building_set_from_json(read_file(data_path("bad_building_set.json")));
    FAIL("expected a union-closure complaint");
  } catch (const error& e) {
    CHECK(e.code() == errc::union_closure_violation);
    std::string msg = e.what();
    CHECK(msg.find("{1,2}") != std::string::npos);
    CHECK(msg.find("{2,3}") != std::string::npos);
  }
}

TEST_CASE("poset lists round-trip through JSON") {
  std::vector<Poset> posets = {Poset(3, {{1, 2}, {3, 2}}), chain(4),
                               antichain(2)};
  std::vector<Poset> back = posets_from_json(to_json(posets));
  CHECK(back == posets);

  std::vector<Poset> fixture =
      posets_from_json(read_file(data_path("coarsened_fan.json")));
  REQUIRE(fixture.size() == 5);
  CHECK(qh_from_posets(fixture) ==
        Polynomial::from_terms(
            {{{0, 0, 0}, 1}, {{1, 1, 0}, 2}, {{1, 2, 0}, 1}, {{2, 2, 0}, 1}}));
}

TEST_CASE("poset JSON rejections") {
  CHECK_THROWS_AS(posets_from_json("{}"), error);  // must be a list
  CHECK_THROWS_AS(posets_from_json("[{\"covers\": []}]"), error);
  CHECK_THROWS_AS(posets_from_json("[{\"n\": 2, \"covers\": [[1]]}]"), error);
}

TEST_CASE("graph text format") {
  Graph g = graph_from_text("n 4\n1 2\n2 3\n\n3 4\n");
  CHECK(g.size() == 4);
  CHECK(g.edges() ==
        std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}});
  Graph fixture = graph_from_text(read_file(data_path("path4.graph")));
  CHECK(fixture == g);
  Graph lonely = graph_from_text("n 1\n");
  CHECK(lonely.size() == 1);
}

TEST_CASE("graph parse errors name the offending line") {
  CHECK_THROWS_AS(graph_from_text(""), error);
  CHECK_THROWS_AS(graph_from_text("m 3\n"), error);
  try {
    graph_from_text("n 3\n1 2\n1 x\n");
    FAIL("expected a parse complaint");
  } catch (const error& e) {
    CHECK(e.code() == errc::parse_error);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  try {
    graph_from_text("n 3\n1 9\n");
    FAIL("expected a range complaint");
  } catch (const error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("missing files raise parse errors") {
  CHECK_THROWS_AS(read_file("/nonexistent/nowhere.json"), error);
  try {
    read_file("/nonexistent/nowhere.json");
  } catch (const error& e) {
    CHECK(e.code() == errc::parse_error);
    CHECK(std::string(e.what()).find("nowhere.json") != std::string::npos);
  }
}

TEST_CASE("serialized building set is canonical") {
  std::string json = to_json(BuildingSet::path(3));
  CHECK(json ==
        "{\"n\":3,\"sets\":[[1],[2],[3],[1,2],[2,3],[1,2,3]]}");
}

}  // TEST_SUITE

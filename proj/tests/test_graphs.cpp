#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "nestoh/graphs.hpp"
#include "nestoh/posets.hpp"
#include "support/random_gen.hpp"

using namespace nestoh;

namespace {

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

}  // namespace

TEST_SUITE("graphs") {

TEST_CASE("graph construction normalizes and validates edges") {
  Graph g(3, {{2, 1}, {1, 2}, {3, 1}});
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}});
  CHECK(g.adjacent(1, 2));
  CHECK(g.adjacent(2, 1));
  CHECK_FALSE(g.adjacent(2, 3));
  CHECK(g.neighbors(1) == 0b110);
  CHECK_THROWS_AS(Graph(2, {{1, 3}}), error);
  CHECK_THROWS_AS(Graph(2, {{1, 1}}), error);
  CHECK_THROWS_AS(Graph(0, {}), error);
}

TEST_CASE("induced connectivity and components") {
  Graph g(5, {{1, 2}, {2, 3}, {4, 5}});
  CHECK(g.induced_connected(0b00111));
  CHECK_FALSE(g.induced_connected(0b00101));  // 1 and 3 without 2
  CHECK(g.induced_connected(0b11000));
  CHECK_FALSE(g.is_connected());
  CHECK(g.component_masks() == std::vector<std::uint64_t>{0b00111, 0b11000});
  CHECK(path_graph(4).is_connected());
  CHECK(Graph(1, {}).is_connected());
}

TEST_CASE("connected induced subgraphs form the building set") {
  CHECK(graphical_building_set(path_graph(4)) == BuildingSet::path(4));
  CHECK(graphical_building_set(complete_graph(3)) == BuildingSet::complete(3));
  BuildingSet star = graphical_building_set(Graph(
      4, {{1, 4}, {2, 4}, {3, 4}}));  // hub relabeled to the last vertex
  CHECK(star == BuildingSet::star(3));

  // A disconnected graph still yields a connected family: the full vertex
  // set is adjoined as the coarse member.
  BuildingSet b = graphical_building_set(Graph(3, {{1, 2}}));
  CHECK(b.is_connected());
  CHECK(b.members() ==
        std::vector<std::uint64_t>{0b001, 0b010, 0b100, 0b011, 0b111});
}

TEST_CASE("tubes of a tree are its proper descendant sets") {
  BTree chain(1, {{2, 1}, {3, 2}});
  Tubing chi = tubing_from_btree(chain);
  CHECK(chi.tubes == std::vector<std::uint64_t>{0b100, 0b110});
  CHECK(chi.json() == "{\"tubes\":[[3],[2,3]]}");
}

TEST_CASE("tubing axioms") {
  Graph g = path_graph(4);
  CHECK(validate_tubing(g, Tubing{{0b0001, 0b0011}}));       // nested
  CHECK(validate_tubing(g, Tubing{{0b0001, 0b0100}}));       // apart
  CHECK_FALSE(validate_tubing(g, Tubing{{0b0001, 0b0010}})); // adjacent
  CHECK_FALSE(validate_tubing(g, Tubing{{0b0011, 0b0110}})); // crossing
  CHECK_FALSE(validate_tubing(g, Tubing{{0b0101}}));         // disconnected
  CHECK_FALSE(validate_tubing(g, Tubing{{0b1111}}));         // not proper
}

TEST_CASE("maximal tubings pair with trees and share statistics") {
  Graph g = complete_graph(3);
  int count = 0;
  for_each_maximal_tubing(g, [&](const Tubing& chi, const BTree& t) {
    ++count;
    CHECK(chi.tubes.size() == 2);
    CHECK(validate_tubing(g, chi));
    TubingStats ts = tubing_stats(g, chi);
    TreeStats s = t.stats();
    CHECK(ts.nest_des == s.des);
    CHECK(ts.nest_maj == s.maj);
    CHECK(ts.nest == s.depth);
    CHECK(ts.mu == s.mu);
  });
  CHECK(count == 6);
}

TEST_CASE("statistics of a worked tubing") {
  Graph g = complete_graph(3);
  TubingStats s = tubing_stats(g, Tubing{{0b100, 0b110}});  // {3} inside {2,3}
  CHECK(s.nest == 2);
  CHECK(s.nest_des == 2);
  CHECK(s.nest_maj == 3);
  CHECK(s.outermost == 1);
  CHECK(s.printed_mu == 1);
  CHECK(s.mu == 3);  // cover pairs alone miss nest * outermost
  CHECK_THROWS_AS(tubing_stats(g, Tubing{{0b100}}), error);  // not maximal
}

TEST_CASE("tubing sum equals the building-set polynomial") {
  for (const Graph& g : {path_graph(4), complete_graph(4), path_graph(1),
                         Graph(4, {{1, 4}, {2, 4}, {3, 4}})}) {
    CHECK(h_graph(g) ==
          h_polynomial(graphical_building_set(g), HVars::tq));
  }
  CHECK(h_graph(complete_graph(3)) == euler_mahonian(3));
}

TEST_CASE("disconnected graphs factor through the staircase") {
  Graph two_paths(5, {{1, 2}, {4, 5}});
  PairedPolys pair = h_disconnected_check(two_paths);
  CHECK(pair.direct == pair.formula);

  testsupport::SplitMix64 rng(2718);
  for (int trial = 0; trial < 30; ++trial) {
    int n = rng.uniform(2, 6);
    int split = rng.uniform(1, n - 1);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if ((i <= split) == (j <= split) && rng.coin()) edges.push_back({i, j});
    PairedPolys p = h_disconnected_check(Graph(n, std::move(edges)));
    CHECK(p.direct == p.formula);
  }
}

}  // TEST_SUITE

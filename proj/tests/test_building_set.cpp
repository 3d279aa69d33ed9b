#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "nestoh/building_set.hpp"
#include "support/brute_force.hpp"
#include "support/random_gen.hpp"

using namespace nestoh;

TEST_SUITE("building_set") {

TEST_CASE("mask round trip and canonical member order") {
  CHECK(mask_of(std::vector<int>{1, 3, 4}) == 0b1101);
  CHECK(mask_elements(0b1101) == std::vector<int>{1, 3, 4});
  CHECK(set_to_string(0b101) == "{1,3}");

  CHECK(member_order_less(0b001, 0b011));            // smaller first
  CHECK(member_order_less(0b011, 0b101));            // {1,2} before {1,3}
  CHECK(member_order_less(0b011, 0b110));            // {1,2} before {2,3}
  CHECK_FALSE(member_order_less(0b011, 0b011));
}

TEST_CASE("members are stored sorted regardless of input order") {
  BuildingSet b = BuildingSet::validate(
      3, {{1, 2, 3}, {3}, {1, 2}, {2}, {1}, {2, 3}});
  CHECK(b.members() ==
        std::vector<std::uint64_t>{0b001, 0b010, 0b100, 0b011, 0b110, 0b111});
  CHECK(b.is_connected());
  CHECK(b.support_size() == 3);
  CHECK(b.member_lists().front() == std::vector<int>{1});
}

TEST_CASE("validation rejects out-of-range input") {
  CHECK_THROWS_AS(BuildingSet::validate(0, {}), error);
  CHECK_THROWS_AS(BuildingSet::validate(64, {{1}}), error);
  CHECK_THROWS_AS(BuildingSet::validate(2, {{1}, {2}, {3}}), error);
  CHECK_THROWS_AS(BuildingSet::validate(2, {{1}, {2}, {}}), error);
}

TEST_CASE("validation reports the missing singleton") {
  try {
    BuildingSet::validate(3, {{1}, {3}, {1, 2, 3}});
    FAIL("expected a singleton complaint");
  } catch (const error& e) {
    CHECK(e.code() == errc::missing_singleton);
    CHECK(std::string(e.what()).find("{2}") != std::string::npos);
  }
}

TEST_CASE("validation reports the first union-closure witness") {
  try {
    BuildingSet::validate(3, {{1}, {2}, {3}, {1, 2}, {2, 3}});
    FAIL("expected a union-closure complaint");
  } catch (const error& e) {
    CHECK(e.code() == errc::union_closure_violation);
    std::string msg = e.what();
    CHECK(msg.find("{1,2}") != std::string::npos);
    CHECK(msg.find("{2,3}") != std::string::npos);
    CHECK(msg.find("{1,2,3}") != std::string::npos);
  }
}

TEST_CASE("disjoint members need no union") {
  BuildingSet b = BuildingSet::validate(4, {{1}, {2}, {3}, {4}, {1, 2}, {3, 4}});
  CHECK_FALSE(b.is_connected());
  CHECK(b.members().size() == 6);
}

TEST_CASE("named factories produce the documented families") {
  CHECK(BuildingSet::complete(3).members().size() == 7);
  CHECK(BuildingSet::simplex(4).members() ==
        std::vector<std::uint64_t>{0b0001, 0b0010, 0b0100, 0b1000, 0b1111});
  CHECK(BuildingSet::path(3).members() ==
        std::vector<std::uint64_t>{0b001, 0b010, 0b100, 0b011, 0b110, 0b111});

  BuildingSet snk42 = BuildingSet::snk(4, 2);
  CHECK(snk42 == BuildingSet::complete(4));
  BuildingSet snk43 = BuildingSet::snk(4, 3);
  for (std::uint64_t m : snk43.members()) {
    int size = static_cast<int>(mask_elements(m).size());
    CHECK((size == 1 || size >= 3));
  }
  CHECK(snk43.members().size() == 4 + 4 + 1);

  BuildingSet star2 = BuildingSet::star(2);
  CHECK(star2.ground_size() == 3);
  CHECK(star2.members() ==
        std::vector<std::uint64_t>{0b001, 0b010, 0b100, 0b101, 0b110, 0b111});

  CHECK(BuildingSet::stanley_pitman(3).members() ==
        std::vector<std::uint64_t>{0b001, 0b010, 0b100, 0b110, 0b111});

  CHECK(BuildingSet::path(1) == BuildingSet::complete(1));
  CHECK(BuildingSet::simplex(2) == BuildingSet::path(2));
}

TEST_CASE("factory parameter validation") {
  CHECK_THROWS_AS(BuildingSet::complete(0), error);
  CHECK_THROWS_AS(BuildingSet::complete(26), error);
  CHECK_THROWS_AS(BuildingSet::snk(4, 1), error);
  CHECK_THROWS_AS(BuildingSet::snk(4, 5), error);
  CHECK_THROWS_AS(BuildingSet::star(0), error);
  CHECK_THROWS_AS(BuildingSet::path(0), error);
}

TEST_CASE("restriction keeps labels and drops straddling members") {
  BuildingSet b = BuildingSet::path(4);
  BuildingSet r = b.restricted(mask_of(std::vector<int>{1, 2, 4}));
  CHECK(r.support() == 0b1011);
  CHECK(r.members() ==
        std::vector<std::uint64_t>{0b0001, 0b0010, 0b1000, 0b0011});
  CHECK_FALSE(r.is_connected());
}

TEST_CASE("components split along maximal members") {
  BuildingSet b = BuildingSet::path(4);
  std::vector<BuildingSet> comps =
      b.restricted(mask_of(std::vector<int>{1, 2, 4})).components();
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].support() == 0b0011);
  CHECK(comps[0].is_connected());
  CHECK(comps[1].support() == 0b1000);
  CHECK(BuildingSet::path(3).components().size() == 1);
}

TEST_CASE("component supports partition the support") {
  testsupport::SplitMix64 rng(555);
  for (int trial = 0; trial < 60; ++trial) {
    int n = rng.uniform(2, 7);
    BuildingSet b = testsupport::random_building_set(rng, n);
    std::uint64_t drop = rng.next() & b.support();
    BuildingSet r = b.restricted(b.support() & ~drop);
    if (r.support() == 0) continue;
    std::uint64_t covered = 0;
    for (const BuildingSet& c : r.components()) {
      CHECK((covered & c.support()) == 0);
      CHECK(c.is_connected());
      for (std::uint64_t m : c.members()) CHECK(r.contains(m));
      covered |= c.support();
    }
    CHECK(covered == r.support());
  }
}

TEST_CASE("combine glues disjoint parts and adds the union") {
  std::vector<BuildingSet> parts = {
      BuildingSet::path(4).restricted(0b0011),
      BuildingSet::path(4).restricted(0b1100)};
  BuildingSet glued = BuildingSet::combine(parts);
  CHECK(glued.support() == 0b1111);
  CHECK(glued.is_connected());
  CHECK(glued.contains(0b1111));
  CHECK(glued.members().size() == 3 + 3 + 1);

  std::vector<BuildingSet> overlapping = {BuildingSet::path(2),
                                          BuildingSet::path(3)};
  CHECK_THROWS_AS(BuildingSet::combine(overlapping), error);

  std::vector<BuildingSet> disconnected = {
      BuildingSet::path(4).restricted(0b1011)};
  CHECK_THROWS_AS(BuildingSet::combine(disconnected), error);
}

TEST_CASE("involution relabels i to n-i+1") {
  BuildingSet b = BuildingSet::stanley_pitman(3);  // suffixes
  BuildingSet img = b.involution_image();
  CHECK(img.members() ==
        std::vector<std::uint64_t>{0b001, 0b010, 0b100, 0b011, 0b111});
  CHECK(BuildingSet::path(5).involution_image() == BuildingSet::path(5));
  CHECK(BuildingSet::snk(5, 3).involution_image() == BuildingSet::snk(5, 3));
}

TEST_CASE("family lookup used by the command line") {
  CHECK(family("complete", 3) == BuildingSet::complete(3));
  CHECK(family("snk", 4, 3) == BuildingSet::snk(4, 3));
  CHECK(family("stanley_pitman", 4) == BuildingSet::stanley_pitman(4));
  CHECK_THROWS_AS(family("frobnicate", 3), error);
  CHECK_THROWS_AS(family("snk", 4), error);
}

TEST_CASE("union closure holds for every factory") {
  for (const BuildingSet& b :
       {BuildingSet::complete(4), BuildingSet::path(5), BuildingSet::snk(5, 3),
        BuildingSet::star(4), BuildingSet::stanley_pitman(5),
        BuildingSet::simplex(5)}) {
    std::vector<std::vector<int>> lists = b.member_lists();
    CHECK_NOTHROW(BuildingSet::validate(b.ground_size(), lists));
  }
}

}  // TEST_SUITE

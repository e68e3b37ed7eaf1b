#include <stdexcept>

#include "doctest.h"
#include "tomo/lattice.hpp"

using namespace tomo;

TEST_CASE("point sets deduplicate and sort") {
  PointSet s({{2, 1}, {1, 2}, {1, 1}, {1, 2}});
  CHECK(s.size() == 3);
  CHECK(s.points() == std::vector<LatticePoint>{{1, 1}, {1, 2}, {2, 1}});
  CHECK(s.contains({1, 2}));
  CHECK(!s.contains({2, 2}));
}

TEST_CASE("coordinates below 1 are rejected") {
  CHECK_THROWS_AS(PointSet({{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(PointSet({{1, -3}}), std::invalid_argument);
}

TEST_CASE("set algebra") {
  PointSet a({{1, 1}, {1, 2}, {2, 1}});
  PointSet b({{1, 2}, {2, 2}});
  CHECK(set_union(a, b) == PointSet({{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
  CHECK(set_intersection(a, b) == PointSet({{1, 2}}));
  CHECK(set_difference(a, b) == PointSet({{1, 1}, {2, 1}}));
  CHECK(symmetric_difference(a, b) == PointSet({{1, 1}, {2, 1}, {2, 2}}));
}

TEST_CASE("extents and transpose") {
  PointSet s({{3, 1}, {1, 5}});
  CHECK(max_row(s) == 3);
  CHECK(max_col(s) == 5);
  CHECK(max_row(PointSet{}) == 0);
  CHECK(transpose(s) == PointSet({{1, 3}, {5, 1}}));
  CHECK(transpose(transpose(s)) == s);
}

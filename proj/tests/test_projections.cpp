#include <stdexcept>

#include "doctest.h"
#include "tomo/errors.hpp"
#include "tomo/families.hpp"
#include "tomo/oracle.hpp"
#include "tomo/projections.hpp"

using namespace tomo;

TEST_CASE("projections of small sets") {
  CHECK(projections(PointSet{}) == Projections({}, {}));
  CHECK(projections(PointSet({{1, 1}, {1, 2}, {2, 1}})) ==
        Projections({2, 1}, {2, 1}));
}

TEST_CASE("projections of the m=3 disjoint family original") {
  // Row counts enumerated from the family's case list: row 1 holds 2^m
  // points, rows 2^l+1..2^(l+1) hold 2^(m-l-1) each.
  const auto pr = projections(families::example1(3).original());
  CHECK(pr.row_sums == std::vector<int>{8, 4, 2, 2, 1, 1, 1, 1});
  CHECK(pr.row_total() == 20);
  CHECK(pr.col_sums == pr.row_sums);  // the construction is symmetric
}

TEST_CASE("trailing zeros are trimmed, negatives rejected") {
  Projections pr({2, 1, 0, 0}, {2, 1, 0});
  CHECK(pr.row_sums == std::vector<int>{2, 1});
  CHECK(pr.col_sums == std::vector<int>{2, 1});
  CHECK_THROWS_AS(Projections({-1}, {}), std::invalid_argument);
}

TEST_CASE("conjugate partitions") {
  CHECK(conjugate_partition({}) == std::vector<int>{});
  CHECK(conjugate_partition({2, 1}) == std::vector<int>{2, 1});
  CHECK(conjugate_partition({3, 1}) == std::vector<int>{2, 1, 1});
  CHECK(conjugate_partition({1, 1}) == std::vector<int>{2});
  // conjugation is an involution on partitions
  for (int n = 1; n <= 8; ++n) {
    for (const auto& p : oracle::partitions_of(n)) {
      CHECK(conjugate_partition(conjugate_partition(p)) == p);
    }
  }
}

TEST_CASE("uniqueness via the conjugacy test") {
  CHECK(is_uniquely_determined(Projections({2, 1}, {2, 1})));
  CHECK(!is_uniquely_determined(Projections({1, 1}, {1, 1})));
  CHECK(is_uniquely_determined(Projections({1, 1}, {2})));
  CHECK(is_uniquely_determined(projections(families::example1(3).original())));
  CHECK_THROWS_AS(is_uniquely_determined(Projections({2}, {1})),
                  std::invalid_argument);
}

TEST_CASE("triangular realization") {
  CHECK(triangular_realization(Projections({2, 1}, {2, 1})) ==
        PointSet({{1, 1}, {1, 2}, {2, 1}}));
  CHECK(triangular_realization(Projections({1}, {1})) == PointSet({{1, 1}}));
  CHECK(triangular_realization(Projections({3, 1}, {2, 1, 1})) ==
        PointSet({{1, 1}, {1, 2}, {1, 3}, {2, 1}}));
  CHECK_THROWS_AS(triangular_realization(Projections({1, 1}, {1, 1})),
                  UniquenessError);
  // unique but the columns are not in conjugate position
  CHECK_THROWS_AS(triangular_realization(Projections({2, 1}, {1, 2})),
                  std::invalid_argument);
}

TEST_CASE("round-trip through the triangular realization") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& p : oracle::partitions_of(n)) {
      Projections pr(p, conjugate_partition(p));
      CHECK(projections(triangular_realization(pr)) == pr);
    }
  }
}

TEST_CASE("greedy reconstruction") {
  CHECK(ryser_reconstruct(Projections({2, 1}, {2, 1})) ==
        PointSet({{1, 1}, {1, 2}, {2, 1}}));
  CHECK(ryser_reconstruct(Projections({1, 1}, {2})) ==
        PointSet({{1, 1}, {2, 1}}));
  SUBCASE("five-point instance round-trips") {
    const Projections pr({2, 2, 1}, {3, 2});
    const PointSet got = ryser_reconstruct(pr);
    CHECK(got.size() == 5);
    CHECK(projections(got) == pr);
  }
  SUBCASE("infeasible projections") {
    CHECK_THROWS_WITH_AS(ryser_reconstruct(Projections({2}, {2})),
                         "no realization", std::invalid_argument);
    CHECK_THROWS_WITH_AS(ryser_reconstruct(Projections({2, 1}, {3})),
                         "no realization", std::invalid_argument);
    CHECK_THROWS_WITH_AS(ryser_reconstruct(Projections({3}, {1, 1})),
                         "no realization", std::invalid_argument);
  }
  SUBCASE("every feasible partition pair round-trips") {
    for (int n = 1; n <= 7; ++n) {
      for (const auto& r : oracle::partitions_of(n)) {
        for (const auto& c : oracle::partitions_of(n)) {
          const Projections pr(r, c);
          const bool feasible = oracle::count_realizations(pr) > 0;
          if (feasible) {
            CHECK(projections(ryser_reconstruct(pr)) == pr);
          } else {
            CHECK_THROWS_AS(ryser_reconstruct(pr), std::invalid_argument);
          }
        }
      }
    }
  }
}

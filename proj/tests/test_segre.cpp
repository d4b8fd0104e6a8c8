#include <doctest.h>

#include <vector>

#include "cohsys/coherent.hpp"
#include "cohsys/errors.hpp"
#include "cohsys/segre.hpp"

using namespace cohsys;

TEST_CASE("segre_feasible examples") {
  CHECK(segre_feasible(2, 0, 6, 1));
  CHECK_FALSE(segre_feasible(2, 0, 6, 2));
  CHECK(segre_feasible(2, 0, 4, 0));
  CHECK_FALSE(segre_feasible(2, 0, 3, 0));
  CHECK(segre_feasible(3, 1, 11, 1));
  CHECK_FALSE(segre_feasible(3, 1, 9, 2));
}

TEST_CASE("cycle_length examples") {
  CHECK(cycle_length(2, 0, 7, 1) == 4);
  CHECK(cycle_length(3, 1, 8, 0) == 2);
  // (r - s)(r + s - t) = 0 here, so the whole of c2 sits on the cycle
  CHECK(cycle_length(2, 0, 4, 2) == 4);
  CHECK(cycle_length(2, 0, 0, 2) == 0);
  CHECK_THROWS_AS(cycle_length(3, 0, 2, 0), FeasibilityError);
}

TEST_CASE("feasible_segre_values examples") {
  CHECK(feasible_segre_values(1, 0, 2) == std::vector<int>{0});
  CHECK(feasible_segre_values(1, 0, 3) == std::vector<int>{0, 1});
  CHECK(feasible_segre_values(0, 0, 0) == std::vector<int>{0});
  CHECK(feasible_segre_values(0, 1, 0).empty());
  CHECK(feasible_segre_values(3, 0, 5) == std::vector<int>{-2});
}

TEST_CASE("necessary_conditions examples") {
  using V = std::vector<Violation>;
  CHECK(necessary_conditions(CsType::make(-1, 0, 5, 2), 0) == V{Violation::NegativeR});
  CHECK(necessary_conditions(CsType::make(2, 0, 5, 2), -2) == V{Violation::SOutOfRange});
  CHECK(necessary_conditions(CsType::make(2, 0, 5, 2), 1).empty());
  CHECK(necessary_conditions(CsType::make(2, 0, -1, 2), 3) ==
        V{Violation::SOutOfRange, Violation::NegativeC2});
  CHECK_THROWS_AS(necessary_conditions(CsType::make(2, 0, 5, 1), 1), PreconditionError);
}

TEST_CASE("Whitney identity on the feasible grid") {
  for (int r = 0; r <= 8; ++r) {
    for (int t = 0; t <= 1; ++t) {
      for (int c2 = 0; c2 <= 80; ++c2) {
        for (int s : feasible_segre_values(r, t, c2)) {
          CHECK((r - s) * (r + s - t) + cycle_length(r, t, c2, s) == c2);
        }
      }
    }
  }
}

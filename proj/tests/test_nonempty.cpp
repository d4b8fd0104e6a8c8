#include <doctest.h>

#include "cohsys/errors.hpp"
#include "cohsys/nonempty.hpp"

using namespace cohsys;

TEST_CASE("nonempty_sufficient examples") {
  auto v = nonempty_sufficient(2, 0, 6, 1);
  REQUIRE(v.has_value());
  CHECK(v->clause == 1);
  v = nonempty_sufficient(2, 0, 4, 1);
  REQUIRE(v.has_value());
  CHECK(v->clause == 2);
  v = nonempty_sufficient(3, 0, 5, 3);
  REQUIRE(v.has_value());
  CHECK(v->clause == 4);
  CHECK_FALSE(nonempty_sufficient(3, 0, 5, 2).has_value());
  CHECK_THROWS_AS(nonempty_sufficient(0, 0, 5, 1), PreconditionError);
}

TEST_CASE("clause 3 reports the Segre index it used") {
  // r = 4, c2 = 12: s0 = -2 gives c2 >= 16 - 4 and needs a > 2
  const auto v = nonempty_sufficient(4, 0, 12, Rational(5, 2));
  REQUIRE(v.has_value());
  CHECK(v->clause == 3);
  REQUIRE(v->s0.has_value());
  CHECK(*v->s0 == -2);
  CHECK_FALSE(nonempty_sufficient(4, 0, 12, 2).has_value());
}

TEST_CASE("exact window and b threshold") {
  CHECK(in_exact_window(4, 0, 12, -2));
  CHECK_FALSE(in_exact_window(4, 0, 15, -2));
  CHECK_FALSE(in_exact_window(4, 0, 12, -3));
  CHECK(nonempty_b_threshold(4, 0, 12, -2) == Rational(11));
}

TEST_CASE("nonempty_iff examples") {
  CHECK(nonempty_iff(4, 0, 12, -2, 2, 12, false));
  CHECK_FALSE(nonempty_iff(4, 0, 12, -2, 2, 10, false));
  CHECK_FALSE(nonempty_iff(4, 0, 12, -2, Rational(3, 2), 100, false));
  CHECK_FALSE(nonempty_iff(4, 0, 12, -2, 2, 11, false));
  CHECK(nonempty_iff(4, 0, 12, -2, 2, 11, true));
  CHECK(nonempty_iff(4, 0, 12, -2, Rational(201, 100), -50, false));
  CHECK_THROWS_AS(nonempty_iff(4, 0, 20, -2, 2, 12, false), PreconditionError);
}

TEST_CASE("trivial_only examples") {
  CHECK(trivial_only(0, 0, 0, 2));
  CHECK_FALSE(trivial_only(0, 0, 1, 2));
  CHECK_FALSE(trivial_only(0, 1, 0, 2));
  CHECK_THROWS_AS(trivial_only(2, 0, 0, 2), PreconditionError);
  CHECK_THROWS_AS(trivial_only(0, 0, 0, 1), PreconditionError);
}

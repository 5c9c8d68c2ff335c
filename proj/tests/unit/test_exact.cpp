#include "pesp/exact.hpp"

#include <doctest.h>

using namespace pesp;

TEST_CASE("floor, ceil and modulo follow mathematical conventions") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(-6, 2) == -3);
  CHECK(ceil_div(7, 2) == 4);
  CHECK(ceil_div(-7, 2) == -3);
  CHECK(mod_floor(-3, 10) == 7);
  CHECK(mod_floor(13, 10) == 3);
  CHECK(mod_floor(0, 10) == 0);
}

TEST_CASE("rational helpers") {
  const Rational r = make_rational(-3, 10);
  CHECK(to_string(r) == "-3/10");
  CHECK(to_string(make_rational(26, 10)) == "13/5");
  CHECK(to_string(make_rational(20, 10)) == "2");
  CHECK(floor(r) == -1);
  CHECK(ceil(r) == 0);
  CHECK(floor(make_rational(23, 10)) == 2);
  CHECK(ceil(make_rational(4, 2)) == 2);
}

TEST_CASE("determinant and rank") {
  CHECK(determinant(IntMatrix{{2, 1}, {1, 3}}) == 5);
  CHECK(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntMatrix{}) == 1);
  CHECK(rank(IntMatrix{{1, 2, 3}, {2, 4, 6}}) == 1);
  CHECK(rank(IntMatrix{{1, 0, 1}, {0, 1, 1}}) == 2);
}

TEST_CASE("solve_square returns the unique solution or nothing") {
  auto x = solve_square({{2, 1}, {1, 3}}, {3, 5});
  REQUIRE(x);
  CHECK((*x)[0] == make_rational(4, 5));
  CHECK((*x)[1] == make_rational(7, 5));
  CHECK_FALSE(solve_square({{1, 2}, {2, 4}}, {1, 2}));
}

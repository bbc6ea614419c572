#include <doctest.h>

#include "syz/rational.hpp"

#include <stdexcept>

using namespace syz;

TEST_CASE("make_rational reduces and normalizes the sign") {
  CHECK(make_rational(3, 6) == make_rational(1, 2));
  CHECK(to_pq_string(make_rational(3, -6)) == "-1/2");
  CHECK(to_pq_string(make_rational(-3, -6)) == "1/2");
  CHECK(make_rational(0, -7) == 0);
  CHECK(make_rational(544, -36) == make_rational(-136, 9));
}

TEST_CASE("make_rational rejects a zero denominator") {
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_rational(Integer(0), Integer(0)), std::invalid_argument);
}

TEST_CASE("floor_rational rounds toward minus infinity") {
  CHECK(floor_rational(make_rational(7, 2)) == 3);
  CHECK(floor_rational(make_rational(-7, 2)) == -4);
  CHECK(floor_rational(make_rational(-6, 3)) == -2);
  CHECK(floor_rational(make_rational(6, 3)) == 2);
  CHECK(floor_rational(Rational(0)) == 0);
  CHECK(floor_rational(make_rational(167, 8)) == 20);
}

TEST_CASE("to_pq_string omits a unit denominator") {
  CHECK(to_pq_string(make_rational(6, 2)) == "3");
  CHECK(to_pq_string(make_rational(-8, 13)) == "-8/13");
  CHECK(to_pq_string(Rational(0)) == "0");
}

TEST_CASE("parse_pq_string inverts to_pq_string") {
  for (auto [p, q] : {std::pair<std::int64_t, std::int64_t>{1, 351},
                      {-8, 13},
                      {-17, 15},
                      {42, 1},
                      {0, 5}}) {
    Rational x = make_rational(p, q);
    CHECK(parse_pq_string(to_pq_string(x)) == x);
  }
  CHECK(parse_pq_string("-12/11") == make_rational(-12, 11));
}

TEST_CASE("parse_pq_string rejects malformed input") {
  CHECK_THROWS_AS(parse_pq_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pq_string("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pq_string(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_pq_string("1/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pq_string("1.5"), std::invalid_argument);
}

TEST_CASE("approx is the nearest double") {
  CHECK(approx(make_rational(1, 2)) == 0.5);
  CHECK(approx(make_rational(-17, 15)) == doctest::Approx(-1.1333333333));
}

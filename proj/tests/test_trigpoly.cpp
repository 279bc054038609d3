#include <doctest.h>

#include "chebcert/decimal.hpp"
#include "chebcert/trigpoly.hpp"

using namespace cheb;

TEST_CASE("published shape expands to the printed coefficients") {
  TrigPoly q = expand_Q(Interval::point(0.51));
  REQUIRE(q.b.size() == 4);
  CHECK(matches_printed(q.b[0], "5.0804") != Adjudication::CONTRADICTS);
  CHECK(q.b[0].contains(5.0804000000000000));
  CHECK(q.b[1].contains(8.1204000000000001));
  CHECK(q.b[2].contains(4.0399999999999999));
  CHECK(q.b[3].lo == 1.0);
  CHECK(q.b[3].hi == 1.0);
  CHECK(q.q0().contains(18.240799999999999));
  CHECK(q.b[0].hi < q.b[1].lo);  // required ordering
}

TEST_CASE("binomial special case at a = 1") {
  TrigPoly q = expand_Q(Interval::point(1.0));
  CHECK(q.b[0].lo == 10.0);
  CHECK(q.b[0].hi == 10.0);
  CHECK(q.b[1].lo == 15.0);
  CHECK(q.b[2].lo == 6.0);
  CHECK(q.b[3].lo == 1.0);
}

TEST_CASE("series evaluation matches the factored product") {
  TrigPoly q = expand_Q(Interval::point(0.51));
  for (int i = 0; i < 1000; ++i) {
    double phi = 6.2831853071795862 * i / 1000.0;
    Interval series = q.eval(Interval::point(phi));
    Interval c = cos_i(Interval::point(phi));
    Interval factored = 4.0 * (1.0 + c) * sq(Interval::point(0.51) + c);
    CHECK(series.intersects(factored));
  }
  // cos(0) = 1 makes Q(0) the coefficient sum
  CHECK(q.eval(Interval::point(0.0)).intersects(q.q0()));
}

TEST_CASE("invalid shapes are rejected") {
  CHECK_THROWS_AS(expand_Q(Interval::point(0.0)), ShapeError);
  CHECK_THROWS_AS(expand_Q(Interval::point(-0.3)), ShapeError);
}

#include <doctest.h>

#include <random>

#include "chebcert/decimal.hpp"

using namespace cheb;

TEST_CASE("printed-band adjudication") {
  // alpha_3-style value with truncation marker
  CHECK(matches_printed(Interval(36.7590, 36.7599), "36.759...") == Adjudication::CONFIRMS);
  CHECK(matches_printed(Interval(5.0, 5.1), "36.759") == Adjudication::CONTRADICTS);
  CHECK(matches_printed(Interval(0.0, 100.0), "36.759") == Adjudication::INCONCLUSIVE);
  // strictly inside with width under a hundredth of the last digit
  CHECK(matches_printed(Interval(36.75901, 36.75902), "36.759") == Adjudication::TIGHTER);
}

TEST_CASE("scientific notation carries the band with the exponent") {
  // one unit in the last mantissa digit scaled by 10^-4
  CHECK(matches_printed(Interval(6.79347e-4, 6.79348e-4), "6.7934e-4") ==
        Adjudication::TIGHTER);
  CHECK(matches_printed(Interval(6.7936e-4, 6.7940e-4), "6.7934e-4") ==
        Adjudication::INCONCLUSIVE);
  CHECK(matches_printed(Interval(1.77005e8, 1.77008e8), "1.7700e8") ==
        Adjudication::CONFIRMS);
  CHECK(matches_printed(Interval(1.7800e8, 1.7900e8), "1.7700e8") ==
        Adjudication::CONTRADICTS);
}

TEST_CASE("negative decimals and nine-digit values") {
  CHECK(matches_printed(Interval(-0.1215851074, -0.1215851069), "-0.121585107") ==
        Adjudication::CONFIRMS);
  CHECK(matches_printed(Interval(-0.12158, -0.12157), "-0.121585107") ==
        Adjudication::CONTRADICTS);
}

TEST_CASE("malformed decimals raise ParseError") {
  CHECK_THROWS_AS(PrintedDecimal::parse("abc"), ParseError);
  CHECK_THROWS_AS(PrintedDecimal::parse(""), ParseError);
  CHECK_THROWS_AS(PrintedDecimal::parse("1.2.3"), ParseError);
  CHECK_THROWS_AS(PrintedDecimal::parse("1e"), ParseError);
}

TEST_CASE("rational adjudications") {
  Interval around = rational_i(1, 462);
  CHECK(matches_rational_contains(around, 1, 462) == Adjudication::CONFIRMS);
  CHECK(matches_rational_contains(Interval(0.003, 0.004), 1, 462) ==
        Adjudication::CONTRADICTS);
  // adopted round value dominated by the computed one
  CHECK(matches_rational_lower_bound(Interval(0.01094, 0.01095), 1, 92) ==
        Adjudication::CONFIRMS);
  CHECK(matches_rational_lower_bound(Interval(0.0105, 0.0106), 1, 92) ==
        Adjudication::CONTRADICTS);
}

TEST_CASE("upper-bound claims") {
  CHECK(matches_upper_bound(Interval(1.09, 1.097), "1.1") == Adjudication::CONFIRMS);
  CHECK(matches_upper_bound(Interval(1.11, 1.12), "1.1") == Adjudication::CONTRADICTS);
  CHECK(matches_upper_bound(Interval(1.05, 1.15), "1.1") == Adjudication::INCONCLUSIVE);
}

TEST_CASE("directed endpoint strings round-trip exactly and never round inward") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> mag(-300.0, 300.0);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    double x = unit(rng) * std::exp2(mag(rng) * 0.1);
    double lo_back = parse_endpoint(format_lo(x));
    double hi_back = parse_endpoint(format_hi(x));
    CHECK(lo_back == x);
    CHECK(hi_back == x);
  }
  CHECK(parse_endpoint(format_lo(-std::numeric_limits<double>::infinity())) ==
        -std::numeric_limits<double>::infinity());
}

TEST_CASE("decimal literal enclosures are outward") {
  Interval d = decimal_to_interval("1.25506");
  CHECK(d.lo <= 1.25506);
  CHECK(d.hi >= 1.25506);
  CHECK(d.width() <= 3e-16);
}

#include <doctest.h>

#include "chebcert/vonmangoldt.hpp"

using namespace cheb;

TEST_CASE("zeta log-derivative at sigma = 2") {
  auto table = default_lambda_table(1000000);
  Interval f = neg_zeta_log_deriv(Interval::point(2.0), *table);
  // high-precision reference 0.569960993094532806399864...
  CHECK(f.contains(0.5699609930945328064));
  CHECK(f.width() <= 1e-6);
}

TEST_CASE("zeta log-derivative at sigma = 2.45 and its density sign") {
  auto table = default_lambda_table(1000000);
  Interval f = neg_zeta_log_deriv(Interval::point(2.45), *table);
  CHECK(f.contains(0.30698275903429519659));
  // a3(sigma) < 0 at this sigma: f1 < log(pi)/2
  CHECK(f.hi < 0.5723649429247001);
}

TEST_CASE("large sigma is dominated by the first term") {
  auto table = default_lambda_table(100000);
  Interval f = neg_zeta_log_deriv(Interval::point(20.0), *table);
  double first = 0.69314718055994530942 / 1048576.0;  // log(2) 2^{-20}
  CHECK(f.lo >= first * 0.9999999);
  CHECK(f.hi <= std::ldexp(1.0, -19));
  CHECK(f.contains(6.6135238983163986287e-7));
}

TEST_CASE("decreasing in sigma on a grid") {
  auto table = default_lambda_table(200000);
  double grid[] = {1.5, 1.8, 2.1, 2.5, 3.0, 4.0};
  Interval prev = neg_zeta_log_deriv(Interval::point(grid[0]), *table);
  for (size_t i = 1; i < sizeof(grid) / sizeof(grid[0]); ++i) {
    Interval cur = neg_zeta_log_deriv(Interval::point(grid[i]), *table);
    CHECK(cur.hi < prev.lo);  // enclosures pairwise ordered
    prev = cur;
  }
}

TEST_CASE("series rejects sigma touching 1 and matches the serial reference") {
  auto table = default_lambda_table(100000);
  CHECK_THROWS_AS(neg_zeta_log_deriv(Interval(0.9, 1.3), *table), DomainError);
  Interval par = neg_zeta_log_deriv(Interval::point(1.9), *table, 2);
  Interval ser = neg_zeta_log_deriv_serial(Interval::point(1.9), *table);
  CHECK(par.lo == ser.lo);
  CHECK(par.hi == ser.hi);
}

TEST_CASE("cutoff only changes precision, not correctness") {
  auto small = default_lambda_table(20000);
  auto large = default_lambda_table(1000000);
  Interval a = neg_zeta_log_deriv(Interval::point(1.9), *small);
  Interval b = neg_zeta_log_deriv(Interval::point(1.9), *large);
  CHECK(a.intersects(b));
  CHECK(b.width() < a.width());
}

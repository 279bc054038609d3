#include <doctest.h>

#include <cmath>
#include <random>

#include "chebcert/interval.hpp"

using namespace cheb;

TEST_CASE("exact endpoint arithmetic stays exact") {
  Interval a(1.0, 2.0), b(3.0, 4.0);
  Interval s = a + b;
  CHECK(s.lo == 4.0);
  CHECK(s.hi == 6.0);
  Interval m = Interval(-1.0, 1.0) * Interval(-1.0, 1.0);
  CHECK(m.lo == -1.0);
  CHECK(m.hi == 1.0);
  Interval p = Interval::point(4.0) * Interval::point(3144.25);
  CHECK(p.lo == 12577.0);
  CHECK(p.hi == 12577.0);
}

TEST_CASE("division rounds outward and rejects zero denominators") {
  Interval q = Interval::point(1.0) / Interval::point(3.0);
  CHECK(q.lo <= q.hi);
  CHECK(q.contains(1.0 / 3.0));
  CHECK(q.width() <= 2 * std::ldexp(1.0, -54));
  CHECK_THROWS_AS(Interval(1.0, 1.0) / Interval(-1.0, 1.0), DivisionByZeroInterval);
  CHECK_THROWS_AS(Interval(1.0, 1.0) / Interval(0.0, 2.0), DivisionByZeroInterval);
}

TEST_CASE("elementary functions hit the identity cases") {
  Interval e0 = exp_i(Interval(0.0, 0.0));
  CHECK(e0.lo == 1.0);
  CHECK(e0.hi == 1.0);
  Interval l = log_i(euler_e_i());
  CHECK(l.contains(1.0));
  CHECK(l.width() <= 4 * std::ldexp(1.0, -52));
  Interval full = cos_i(Interval(0.0, 6.2831853071795865));
  CHECK(full.lo == -1.0);
  CHECK(full.hi == 1.0);
  Interval at_pi = cos_i(Interval(3.14159, 3.14160));
  CHECK(at_pi.lo == -1.0);  // clamped exactly, so 1 + cos keeps a zero floor
  CHECK_THROWS_AS(log_i(Interval(0.0, 1.0)), DomainError);
  CHECK_THROWS_AS(sqrt_i(Interval(-1.0, 1.0)), DomainError);
}

TEST_CASE("squares never dip negative") {
  Interval s = sq(Interval(-2.0, 3.0));
  CHECK(s.lo == 0.0);
  CHECK(s.hi >= 9.0);
  Interval p = pow_i(Interval(-2.0, 1.0), 4);
  CHECK(p.lo == 0.0);
  Interval exact = pow_i(Interval::point(10.0), 2);
  CHECK(exact.lo == 100.0);
  CHECK(exact.hi == 100.0);
}

TEST_CASE("named constants are tight") {
  CHECK(pi_i().contains(3.14159265358979323846 - 1e-17));
  CHECK(pi_i().width() <= 2 * std::ldexp(3.15, -52));
  CHECK(ln2_i().contains(0.69314718055994530942));
  CHECK(sqrt5_i().contains(2.23606797749978969640));
  CHECK(sqrt17_i().contains(4.12310562561766054982));
  CHECK(sqrt_pi_i().contains(1.77245385090551602730));
  CHECK(ln10_i().contains(2.30258509299404568402));
}

TEST_CASE("containment fuzz over arithmetic and elementary functions") {
  std::mt19937_64 rng(20240817);
  std::uniform_real_distribution<double> mag(-30.0, 30.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int violations = 0;
  for (int it = 0; it < 20000; ++it) {
    double base = std::exp2(mag(rng)) * (unit(rng) < 0.5 ? -1.0 : 1.0);
    double w = std::exp2(mag(rng) * 0.2);
    Interval X(base - w * unit(rng), base + w * unit(rng));
    double x = X.lo + (X.hi - X.lo) * unit(rng);
    double base2 = std::exp2(mag(rng)) * (unit(rng) < 0.5 ? -1.0 : 1.0);
    Interval Y(base2 - unit(rng), base2 + unit(rng));
    double y = Y.lo + (Y.hi - Y.lo) * unit(rng);
    switch (it % 4) {
      case 0:
        if (!(X + Y).contains(x + y)) ++violations;
        break;
      case 1:
        if (!(X - Y).contains(x - y)) ++violations;
        break;
      case 2:
        if (!(X * Y).contains(x * y)) ++violations;
        break;
      case 3:
        if (Y.contains(0.0)) break;
        if (!(X / Y).contains(x / y)) ++violations;
        break;
    }
    // elementary functions on positive shifted arguments
    Interval Z(std::fabs(X.lo) + 0.125, std::fabs(X.lo) + 0.125 + unit(rng));
    double z = Z.lo + (Z.hi - Z.lo) * unit(rng);
    if (!exp_i(Interval(-Z.hi, -Z.lo)).contains(exp_pt(-z))) ++violations;
    if (!log_i(Z).contains(log_pt(z))) ++violations;
    if (!cos_i(Z).contains(cos_pt(z))) ++violations;
    if (!atan_i(Z).contains(atan_pt(z))) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("inclusion monotonicity") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.01, 10.0);
  for (int it = 0; it < 2000; ++it) {
    double a = u(rng), b = a + u(rng);
    Interval inner(a + (b - a) * 0.25, b - (b - a) * 0.25);
    Interval outer(a, b);
    CHECK(exp_i(outer).contains(exp_i(inner)));
    CHECK(log_i(outer).contains(log_i(inner)));
    CHECK(sqrt_i(outer).contains(sqrt_i(inner)));
    CHECK(cos_i(outer).contains(cos_i(inner)));
    CHECK(sq(outer).contains(sq(inner)));
  }
}

TEST_CASE("evaluation is deterministic") {
  Interval a(0.1, 0.7);
  Interval r1 = exp_i(sq(a) * pi_i() - log_i(a + 1.0));
  Interval r2 = exp_i(sq(a) * pi_i() - log_i(a + 1.0));
  CHECK(r1.lo == r2.lo);
  CHECK(r1.hi == r2.hi);
}

TEST_CASE("infinite endpoints flow through tails") {
  double inf = std::numeric_limits<double>::infinity();
  Interval t(9.0, inf);
  Interval r = (5.0 - t) / pow_i(t, 3);
  CHECK(r.hi < 0.0);  // usable sign information on an unbounded box
  Interval zero_over = Interval(0.0, 1.0) * Interval(2.0, inf);
  CHECK(zero_over.lo == 0.0);
}

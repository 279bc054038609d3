#include <doctest.h>

#include "chebcert/special.hpp"

using namespace cheb;

TEST_CASE("k1 removable singularity yields the squared log") {
  Interval x = Interval::point(10.0);
  // box straddling s = 1 goes through the series branch
  ComplexBox s(Interval(0.999, 1.001), Interval(-0.001, 0.001));
  ComplexBox v = kernel_k1(s, x);
  CHECK(v.re.contains(5.3018981104783980106));  // (log 10)^2
  ComplexBox exact = kernel_k1(ComplexBox::point(1.0, 0.0), x);
  CHECK(exact.re.contains(5.3018981104783980106));
  CHECK(exact.re.width() <= 1e-9);
}

TEST_CASE("k1 away from the singularity uses the direct quotient") {
  Interval x = Interval::point(10.0);
  ComplexBox v = kernel_k1(ComplexBox::point(2.0, 0.0), x);
  CHECK(v.re.contains(8100.0));  // (x^2 - x)^2
  CHECK(v.re.width() <= 1e-8);
}

TEST_CASE("k2 at integer and fractional arguments") {
  Interval x = Interval::point(10.0);
  ComplexBox at1 = kernel_k2(ComplexBox::point(1.0, 0.0), x);
  CHECK(at1.re.contains(100.0));
  ComplexBox at0 = kernel_k2(ComplexBox::point(0.0, 0.0), x);
  CHECK(at0.re.contains(1.0));
  ComplexBox athalf = kernel_k2(ComplexBox::point(-0.5, 0.0), x);
  CHECK(athalf.re.contains(0.56234132519034908));  // 10^{-1/4}
}

TEST_CASE("khat1 support and continuity at the break") {
  Interval x = Interval::point(10.0);
  Interval at_break = khat1(Interval::point(1000.0), x);
  CHECK(at_break.contains(0.0023025850929940457));  // x^{-3} log x
  CHECK(khat1(Interval::point(50.0), x).hi == 0.0);   // below x^2
  CHECK(khat1(Interval::point(20000.0), x).hi == 0.0);  // above x^4
  // spanning the break: both branches overlap
  Interval spanning = khat1(Interval(999.0, 1001.0), x);
  CHECK(spanning.contains(0.0023025850929940457));
  for (double u : {150.0, 400.0, 900.0, 2500.0, 9000.0}) {
    CHECK(khat1(Interval::point(u), x).lo >= 0.0);
  }
}

TEST_CASE("khat2 at the center") {
  Interval x = Interval::point(10.0);
  Interval v = khat2(x, x);
  Interval oracle = 1.0 / sqrt_i(4.0 * pi_i() * ln10_i());
  CHECK(v.intersects(oracle));
}

TEST_CASE("mellin round trips, five samples each") {
  Interval x = Interval::point(10.0);
  for (double s : {1.2, 1.5, 2.0, 2.5, 3.0}) {
    MellinCheck m = mellin_roundtrip_check(Kernel::K1, s, x, 1e-6);
    CHECK(m.intersects);
  }
  for (double s : {0.0, 0.5, 1.0, -0.5, 1.5}) {
    MellinCheck m = mellin_roundtrip_check(Kernel::K2, s, x, 1e-6);
    CHECK(m.intersects);
  }
  // spot values the transforms must meet
  MellinCheck k1_2 = mellin_roundtrip_check(Kernel::K1, 2.0, x, 1e-6);
  CHECK(k1_2.forward.contains(8100.0));
  MellinCheck k2_1 = mellin_roundtrip_check(Kernel::K2, 1.0, x, 1e-6);
  CHECK(k2_1.kernel.re.contains(100.0));
  CHECK(k2_1.forward.intersects(k2_1.kernel.re));
}

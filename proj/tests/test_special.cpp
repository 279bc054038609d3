#include <doctest.h>

#include <random>

#include "chebcert/special.hpp"

using namespace cheb;

TEST_CASE("real digamma against classical values") {
  // digamma(10) = -gamma + sum_{k=1}^{9} 1/k
  Interval d10 = digamma_real(Interval::point(10.0));
  CHECK(d10.contains(2.2517525890667211076));
  CHECK(d10.width() <= 1e-14);
  Interval d1 = digamma_real(Interval::point(1.0));
  CHECK(d1.contains(-0.5772156649015328606));
  CHECK_THROWS_AS(digamma_real(Interval(-1.0, 1.0)), DomainError);
}

TEST_CASE("trigamma brackets") {
  struct Probe {
    double x, value;
  } probes[] = {
      {0.5, 4.9348022005446793094},  {1.0, 1.6449340668482264365},
      {1.5, 0.93480220054467930942}, {2.0, 0.64493406684822643647},
      {10.0, 0.10516633568168574612}, {16.25, 0.063470764167536227231},
  };
  for (const Probe& p : probes) {
    Interval t = trigamma_real(Interval::point(p.x));
    CHECK(t.contains(p.value));
    CHECK(t.width() <= 1e-12);
  }
  // decreasing on boxes
  Interval wide = trigamma_real(Interval(1.0, 2.0));
  CHECK(wide.lo <= 0.6449340668482265);
  CHECK(wide.hi >= 1.6449340668482264);
}

TEST_CASE("complex digamma band honors the two-sided log comparison") {
  // digamma_re(s) within [log|s| - 4/3, log|s| + 1/3] for Re s > 1/2
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> re(0.51, 100.0);
  std::uniform_real_distribution<double> im(-100.0, 100.0);
  for (int i = 0; i < 400; ++i) {
    ComplexBox s = ComplexBox::point(re(rng), im(rng));
    Interval val = digamma_re(s);
    Interval mag = 0.5 * log_i(abs2(s));
    CHECK(val.hi <= (mag + rational_i(1, 3)).hi + 1e-13);
    CHECK(val.lo >= (mag - rational_i(4, 3)).lo - 1e-13);
  }
  Interval at10 = digamma_re(ComplexBox::point(10.0, 0.0));
  CHECK(at10.contains(2.2517525890667211));
  Interval at1 = digamma_re(ComplexBox::point(1.0, 0.0));
  CHECK(at1.contains(-0.5772156649015329));
  CHECK(at1.hi <= rational_i(1, 3).hi);  // log|1| + 1/3 sits above -gamma
}

TEST_CASE("winckler weight and the two line weights") {
  Interval v0 = v_winckler(Interval::point(0.0));
  CHECK(v0.contains(25.156438515125386592));
  CHECK(v0.width() <= 1e-13);
  // even in t
  Interval vneg = v_winckler(Interval::point(-2.5));
  Interval vpos = v_winckler(Interval::point(2.5));
  CHECK(vneg.intersects(vpos));
  // monotone on t >= 0: the box value spans the endpoint values
  Interval span = v_winckler(Interval(0.0, 1.0));
  CHECK(span.lo <= v0.hi);
  CHECK(span.hi >= v_winckler(Interval::point(1.0)).lo);

  Interval v1_0 = v1_weight(Interval::point(0.0));
  CHECK(v1_0.intersects(v1_scale_const()));
  Interval v2_0 = v2_weight(Interval::point(0.0));
  CHECK(v2_0.contains(1.0));
}

TEST_CASE("tail majorants really majorize sampled tails") {
  // compare int_T^{8T} f against the closed form at T
  Integrand f;
  f.f = [](const Interval& t) { return v_winckler(t) * v1_weight(t); };
  QuadOptions q;
  q.tol = 1e-6;
  double T = 50.0;
  QuadResult part = integrate(f, T, 8 * T, q);
  CHECK(part.value.hi <= v_v1_tail_bound(T).hi);
  CHECK(v_v1_tail_bound(100.0).hi < v_v1_tail_bound(50.0).lo);  // decreasing in T
  CHECK(v2_tail_bound(3.0).hi < 1e-80);
  CHECK(v_v2_tail_bound(3.0).hi < 1e-78);
}

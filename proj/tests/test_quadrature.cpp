#include <doctest.h>

#include "chebcert/quadrature.hpp"
#include "chebcert/special.hpp"

using namespace cheb;

namespace {
Integrand identity_integrand() {
  Integrand f;
  f.f = [](const Interval& t) { return t; };
  f.fj = [](const Jet& t) { return t; };
  return f;
}
}  // namespace

TEST_CASE("linear integrand to 1e-12") {
  QuadOptions q;
  q.tol = 1e-12;
  QuadResult r = integrate(identity_integrand(), 0.0, 1.0, q);
  CHECK(r.converged);
  CHECK(r.value.contains(0.5));
  CHECK(r.value.width() <= 1e-12);
}

TEST_CASE("lorentzian with quadratic tail against 3 pi / 4") {
  // int_0^inf 9/(9+4t^2) = (3/2)(pi/2); oracle via the arctangent form
  Integrand f;
  f.f = [](const Interval& t) { return 9.0 / (9.0 + 4.0 * sq(t)); };
  f.fj = [](const Jet& t) { return Jet::constant(9.0) / (4.0 * sq(t) + 9.0); };
  TailMajorant tail{4.0e7, [](double T) {
                      return rational_i(9, 4) / Interval::point(T);
                    },
                    +1};
  QuadOptions q;
  q.tol = 2e-7;
  QuadResult r = integrate_halfline(f, 0.0, tail, q);
  Interval oracle = 3.0 * pi_i() / 4.0;
  CHECK(r.value.intersects(oracle));
  CHECK(r.value.width() <= 1e-6);
}

TEST_CASE("gaussian with closed-form oracle") {
  // int_0^inf 10^{-10 t^2} = sqrt(pi/(10 ln 10))/2
  Integrand f;
  f.f = [](const Interval& t) { return v2_weight(t); };
  f.fj = [](const Jet& t) { return v2_weight(t); };
  TailMajorant tail{3.0, [](double T) { return v2_tail_bound(T); }, +1};
  QuadOptions q;
  q.tol = 1e-9;
  QuadResult r = integrate_halfline(f, 0.0, tail, q);
  Interval oracle = sqrt_i(pi_i() / (10.0 * ln10_i())) / 2.0;
  CHECK(r.value.intersects(oracle));
  CHECK(r.value.width() <= 1e-8);
}

TEST_CASE("reference bisection agrees with the adaptive kernel") {
  Integrand f;
  f.f = [](const Interval& t) { return exp_i(-t) * cos_i(t); };
  QuadOptions q;
  q.tol = 1e-9;
  QuadResult adaptive = integrate(f, 0.0, 2.0, q);
  Interval ref = integrate_reference(f.f, 0.0, 2.0, 1e-6);
  CHECK(adaptive.value.intersects(ref));
  CHECK(adaptive.value.width() < ref.width());
}

TEST_CASE("zero integrand with a tail stays around zero") {
  Integrand f;
  f.f = [](const Interval&) { return Interval(0.0, 0.0); };
  TailMajorant tail{10.0, [](double) { return Interval(0.0, 1e-9); }, 0};
  QuadOptions q;
  q.tol = 1e-12;
  QuadResult r = integrate_halfline(f, 0.0, tail, q);
  CHECK(r.value.contains(0.0));
  CHECK(r.value.width() <= 2.1e-9);
}

TEST_CASE("tolerance miss is flagged, enclosure still valid") {
  Integrand f;
  f.f = [](const Interval& t) { return exp_i(-sq(t)); };
  QuadOptions q;
  q.tol = 1e-14;
  q.max_pieces = 64;  // force the budget to trip
  QuadResult r = integrate(f, 0.0, 1.0, q);
  CHECK_FALSE(r.converged);
  CHECK(r.value.contains(0.7468241328124271));  // erf-based value
  CHECK(r.achieved_width > 1e-14);
}

TEST_CASE("requires a nonempty range") {
  Integrand f = identity_integrand();
  QuadOptions q;
  CHECK_THROWS_AS(integrate(f, 1.0, 1.0, q), DomainError);
}

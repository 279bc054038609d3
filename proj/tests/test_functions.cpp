#include <doctest.h>

#include "chebcert/functions.hpp"
#include "chebcert/vonmangoldt.hpp"

using namespace cheb;

TEST_CASE("archimedean coefficient f2") {
  DCtx c;
  Interval f22 = fns::f2_gamma(c, Interval::point(2.0));
  // (0.54)(log 7 / log 2 - 1) = 0.9759716579111062...
  CHECK(f22.contains(0.97597165791110622));
  CHECK(f22.width() <= 1e-14);
}

TEST_CASE("exceptional-zero comparison values at 1") {
  Interval p6 = fns::phi6(Interval::point(1.0));
  CHECK(p6.contains(0.94592321461038101));
  CHECK(p6.width() <= 1e-13);
  Interval p7 = fns::phi7(Interval::point(1.0));
  CHECK(p7.contains(0.91791500137610120));
  // series and direct branches agree where they overlap
  Interval a = fns::phi6(Interval(0.44, 0.46));
  Interval b = fns::phi6(Interval::point(0.45));
  CHECK(a.contains(b));
  // the removable-factor form matches phi6/u
  Interval q = fns::phi6_over_u(Interval::point(0.25));
  Interval direct = fns::phi6(Interval::point(0.25)) / 0.25;
  CHECK(q.intersects(direct));
}

TEST_CASE("stechkin helpers") {
  DCtx c;
  Interval s1 = fns::sigma1_stechkin(c, Interval::point(1.0));
  CHECK(s1.contains(1.6180339887498949));  // golden ratio at sigma = 1
  Interval f3e = fns::f3_stechkin(c, Interval::point(1.0462562763657292720));
  CHECK(f3e.contains(0.0083005407235986168));
  Interval a12 = fns::alpha12_const(c);
  CHECK(a12.contains(0.34162809591555546));
  Interval d0 = fns::d_weight(c, 0, Interval::point(0.046256276365729272));
  CHECK(d0.contains(-0.79912783375283059));
  CHECK(d0.width() <= 1e-12);
  Interval d1 = fns::d_weight(c, 1, Interval::point(0.046256276365729272));
  CHECK(d1.intersects(a12));
}

TEST_CASE("the two a-coefficient families stay distinct") {
  auto table = default_lambda_table(200000);
  Interval sigma = Interval::point(2.0);
  Interval f1 = neg_zeta_log_deriv(sigma, *table);
  fns::DensityCoeffs density = fns::density_coeffs(sigma, f1);
  fns::DhCoeffs repulsion = fns::dh_coeffs(sigma);
  // same symbol in the source material, different formulas: never equal
  CHECK_FALSE(density.a1.intersects(repulsion.a1));
  CHECK(repulsion.a1.contains(0.5));
  CHECK_FALSE(density.a4.intersects(repulsion.a4));
}

TEST_CASE("density coefficients at the published sigmas") {
  auto table = default_lambda_table(1000000);
  Interval sl = Interval::point(1.7807764064044151);
  fns::DensityCoeffs a = fns::density_coeffs(sl, neg_zeta_log_deriv(sl, *table));
  CHECK(a.a1.contains(1.0964951729590679));
  CHECK(a.a2.contains(2.0859356963335314));
  CHECK(a.a3.contains(0.55217786005946757));
  CHECK(a.a4.contains(4.0402101917375441));
  CHECK(a.a1.hi <= 1.1);
  CHECK(a.a2.hi <= 2.09);
  CHECK(a.a3.hi <= 0.56);
  CHECK(a.a4.hi <= 4.05);
}

TEST_CASE("power-sum difference bound") {
  // f5(s0, j; u) + f5(s0 + i t0, j; u) <= 4 j (1 - u) / (s0 - 1)^{2j+1}
  Interval s0 = Interval::point(2.0);
  Interval t0 = Interval::point(1.0);
  for (long j : {1L, 2L, 3L}) {
    for (double u : {0.5, 0.9, 0.99}) {
      Interval lhs = fns::f5_powersum(s0, Interval::point(0.0), j, Interval::point(u)) +
                     fns::f5_powersum(s0, t0, j, Interval::point(u));
      Interval rhs = 4.0 * static_cast<double>(j) * (1.0 - Interval::point(u));
      CHECK(lhs.lo <= rhs.hi);
    }
  }
}

TEST_CASE("comparison kernel forms agree and keep their signs") {
  for (double w : {0.0, 0.1, 0.4516, 1.0, 4.0, 25.0}) {
    Interval direct = fns::g_special_w_direct(Interval::point(w));
    Interval factored = fns::g_special_w_factored(Interval::point(w));
    CHECK(direct.intersects(factored));
    CHECK(factored.hi <= 0.0);
  }
  Interval at0 = fns::g_special_w_factored(Interval::point(0.0));
  CHECK(at0.lo == 0.0);
  CHECK(at0.hi == 0.0);
  // near the minimizer
  Interval atmin = fns::g_special_w_factored(Interval::point(0.4516063));
  CHECK(atmin.contains(-0.12158510687198766));
  // general-argument form at the special triple
  Interval kappa_args = fns::g_stechkin((sqrt5_i() - 1.0) / 2.0, (sqrt5_i() + 1.0) / 2.0,
                                        Interval(1.0, 1.0), Interval::point(0.6720163));
  CHECK(kappa_args.intersects(atmin));
}

TEST_CASE("bigF on real inputs") {
  Interval v = fns::bigF(ComplexBox::point(2.0, 0.0), ComplexBox::point(0.5, 0.0));
  CHECK(v.contains(4.0 / 3.0));
}

TEST_CASE("registry dispatch") {
  Interval r = eval_function("phi7", {Interval::point(1.0)});
  CHECK(r.contains(0.9179150013761012));
  CHECK_THROWS_AS(eval_function("nope", {}), DomainError);
  CHECK_THROWS_AS(eval_function("phi7", {}), DomainError);
  CHECK(function_registry().count("G") == 1);
  CHECK(function_registry().count("eps1") == 1);
  CHECK(function_registry().count("a_dh_3") == 1);
}

TEST_CASE("feasibility error terms are positive and finite at log 3") {
  Interval u = ln3_i();
  Interval e1 = fns::eps1_lemma84(u, Interval::point(124.14), Interval::point(1.979),
                                  Interval::point(36.76), Interval::point(3144.25));
  CHECK(e1.lo > 112.0);
  CHECK(e1.hi < 114.0);
  Interval e3 = fns::eps3_lemma86(u, Interval::point(19.17), Interval::point(1.83),
                                  Interval::point(5.46), Interval::point(179.0));
  CHECK(e3.hi < 1e-80);
  CHECK(e3.lo >= 0.0);
}

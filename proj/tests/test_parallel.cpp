#include <doctest.h>

#include "chebcert/graph.hpp"
#include "chebcert/quadrature.hpp"
#include "chebcert/sieve.hpp"
#include "chebcert/special.hpp"
#include "chebcert/verify.hpp"
#include "chebcert/vonmangoldt.hpp"

using namespace cheb;

TEST_CASE("quadrature is schedule independent") {
  Integrand f;
  f.f = [](const Interval& t) { return v_winckler(t) * v1_weight(t); };
  f.fj = [](const Jet& t) { return v_winckler(t) * v1_weight(t); };
  QuadOptions q1;
  q1.tol = 1e-5;
  q1.threads = 1;
  QuadOptions q2 = q1;
  q2.threads = 2;
  QuadResult a = integrate(f, 0.0, 1000.0, q1);
  QuadResult b = integrate(f, 0.0, 1000.0, q2);
  CHECK(a.value.lo == b.value.lo);
  CHECK(a.value.hi == b.value.hi);
  CHECK(a.pieces == b.pieces);
}

TEST_CASE("series summation is schedule independent") {
  auto table = default_lambda_table(500000);
  Interval a = neg_zeta_log_deriv(Interval::point(2.2), *table, 1);
  Interval b = neg_zeta_log_deriv(Interval::point(2.2), *table, 2);
  Interval c = neg_zeta_log_deriv_serial(Interval::point(2.2), *table);
  CHECK(a.lo == b.lo);
  CHECK(a.hi == b.hi);
  CHECK(a.lo == c.lo);
  CHECK(a.hi == c.hi);
}

TEST_CASE("sieve segments agree with the straight sieve") {
  auto s = sieve_serial(2000000);
  auto p = sieve_parallel(2000000, 2);
  CHECK(s == p);
}

TEST_CASE("branch and bound verdicts are schedule independent") {
  BnbOptions b1;
  b1.threads = 1;
  BnbOptions b2;
  b2.threads = 2;
  VerdictRecord r1 = verify_phi1_positive(b1);
  VerdictRecord r2 = verify_phi1_positive(b2);
  CHECK(r1.verdict == r2.verdict);
  CHECK(r1.margin.lo == r2.margin.lo);
  CHECK(r1.margin.hi == r2.margin.hi);
  CHECK(r1.boxes_explored == r2.boxes_explored);
  G0Result g1 = locate_G0(1e-9, b1);
  G0Result g2 = locate_G0(1e-9, b2);
  CHECK(g1.inf_value.lo == g2.inf_value.lo);
  CHECK(g1.inf_value.hi == g2.inf_value.hi);
}

TEST_CASE("derivation is bit-identical across thread counts") {
  DeriveOptions o1;
  o1.threads = 1;
  DeriveOptions o2;
  o2.threads = 2;
  ConstantGraph g1 = ConstantGraph::derive_all(ParamSet{}, o1);
  ConstantGraph g2 = ConstantGraph::derive_all(ParamSet{}, o2);
  REQUIRE(g1.nodes().size() == g2.nodes().size());
  for (size_t i = 0; i < g1.nodes().size(); ++i) {
    const ConstNode& a = g1.nodes()[i];
    const ConstNode& b = g2.nodes()[i];
    if (a.has_value) {
      CHECK(a.enclosure.lo == b.enclosure.lo);
      CHECK(a.enclosure.hi == b.enclosure.hi);
    }
    CHECK(a.status == b.status);
  }
}

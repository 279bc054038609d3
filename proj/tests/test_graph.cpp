#include <doctest.h>

#include <set>

#include "chebcert/graph.hpp"

using namespace cheb;

namespace {
const ConstantGraph& paper_graph() {
  static const ConstantGraph g = ConstantGraph::derive_all(ParamSet{});
  return g;
}
}  // namespace

TEST_CASE("headline assembly is exact") {
  const ConstantGraph& g = paper_graph();
  Interval a1 = g.value("A_1");
  CHECK(a1.lo == 12577.0);
  CHECK(a1.hi == 12577.0);
  CHECK(g.node("A_1").status == NodeStatus::CONFIRMS);
}

TEST_CASE("graph structure") {
  const ConstantGraph& g = paper_graph();
  CHECK(g.acyclic_ok());
  CHECK(g.count_status(NodeStatus::CONTRADICTS) == 0);
  CHECK(g.count_status(NodeStatus::UNEVALUATED) == 0);
  // every printed decimal either confirms or is tighter
  for (const ConstNode& n : g.nodes()) {
    if (n.check.kind == CheckKind::NONE) continue;
    CHECK((n.status == NodeStatus::CONFIRMS || n.status == NodeStatus::TIGHTER));
  }
}

TEST_CASE("axioms are enumerated with citations") {
  auto ax = paper_graph().list_axioms();
  std::set<std::string> slugs;
  for (const auto& a : ax) slugs.insert(a.slug);
  for (const char* want :
       {"stechkin_lemma", "lmo_power_sum", "kadiri_G0", "louboutin_bound",
        "alpha_0_rosser_schoenfeld", "imag_quadratic_real_zero_bound", "alpha_5"}) {
    CHECK(slugs.count(want) == 1);
  }
  for (const auto& a : ax) CHECK_FALSE(a.citation.empty());
  // alpha_5 deliberately carries no value
  for (const auto& a : ax)
    if (a.slug == "alpha_5") CHECK_FALSE(a.has_value);
}

TEST_CASE("re-derivation is bit-identical") {
  ConstantGraph g1 = ConstantGraph::derive_all(ParamSet{});
  ConstantGraph g2 = ConstantGraph::derive_all(ParamSet{});
  REQUIRE(g1.nodes().size() == g2.nodes().size());
  for (size_t i = 0; i < g1.nodes().size(); ++i) {
    const ConstNode& a = g1.nodes()[i];
    const ConstNode& b = g2.nodes()[i];
    CHECK(a.id == b.id);
    CHECK(a.has_value == b.has_value);
    if (a.has_value) {
      CHECK(a.enclosure.lo == b.enclosure.lo);
      CHECK(a.enclosure.hi == b.enclosure.hi);
    }
  }
}

TEST_CASE("monotone responses to parameter changes") {
  // c8 decreases when the power-sum parameter grows
  ParamSet cheap;
  cheap.c_check = 30.0;
  ConstantGraph g30 = ConstantGraph::derive_all(cheap);
  const ConstantGraph& g24 = paper_graph();
  CHECK(g30.value("c_8_formula").hi < g24.value("c_8_formula").lo);
  // A1 nondecreasing in c16
  ParamSet big;
  big.c16 = 3200.0;
  ConstantGraph gbig = ConstantGraph::derive_all(big);
  CHECK(gbig.value("A_1").lo >= g24.value("A_1").lo);
  CHECK(gbig.value("A_1").lo == 12800.0);
}

TEST_CASE("published repulsion constants round down onto the adopted rationals") {
  const ConstantGraph& g = paper_graph();
  CHECK(g.node("c_8").status == NodeStatus::CONFIRMS);
  CHECK(g.node("c_8_imq").status == NodeStatus::CONFIRMS);
  CHECK(g.node("c_8_ntz").status == NodeStatus::CONFIRMS);
  // with non-default parameters the formula value itself flows downstream
  ParamSet moved;
  moved.sigma0_dh_ntz = 5.60;
  ConstantGraph gm = ConstantGraph::derive_all(moved);
  CHECK(gm.node("c_8_ntz").check.kind == CheckKind::NONE);
  CHECK(gm.value("c_8_ntz").intersects(gm.value("c_8_formula_ntz")));
}

TEST_CASE("precision escalation narrows without changing the verdict") {
  ConstantGraph g = ConstantGraph::derive_all(ParamSet{});
  Interval before = g.value("alpha_12");
  NodeStatus status_before = g.node("alpha_12").status;
  REQUIRE(g.force_escalate("alpha_12"));
  Interval after = g.value("alpha_12");
  CHECK(before.contains(after));
  CHECK(after.width() <= before.width());
  CHECK(g.node("alpha_12").status == status_before);
  CHECK(g.node("alpha_12").escalated);
  // integral nodes have no high-precision path
  CHECK_FALSE(g.force_escalate("mu_1"));
}

TEST_CASE("dot export carries the expected edges") {
  std::string dot = paper_graph().to_dot();
  CHECK(dot.find("\"alpha_0\" -> \"alpha_1\"") != std::string::npos);
  CHECK(dot.find("\"c_7_ntz\" -> \"c_12\"") != std::string::npos);
  CHECK(dot.find("digraph") != std::string::npos);
}

TEST_CASE("invalid parameters are rejected before evaluation") {
  ParamSet bad;
  bad.b_zfr = 3.0;
  CHECK_THROWS_AS(ConstantGraph::derive_all(bad), RangeError);
  ParamSet bad2;
  bad2.c_check = 12.0;
  CHECK_THROWS_AS(ConstantGraph::derive_all(bad2), RangeError);
}

#include <doctest.h>

#include <fstream>
#include <sstream>

#include "chebcert/certificate.hpp"

using namespace cheb;

namespace {
Certificate sample_cert() {
  static const ConstantGraph g = ConstantGraph::derive_all(ParamSet{});
  BnbOptions b;
  b.threads = 2;
  auto claims = run_claims("zfr", ParamSet{}, g, b);
  Certificate c = Certificate::assemble(g, claims);
  c.timings["derive"] = 1.25;
  c.threads_used = 2;
  return c;
}
}  // namespace

TEST_CASE("serialization round-trips losslessly") {
  Certificate c = sample_cert();
  std::string text = c.to_json();
  Certificate back = Certificate::from_json(text);
  CHECK(back == c);
  CHECK(back.digest() == c.digest());
  // endpoints parse back to the exact doubles
  for (size_t i = 0; i < c.nodes.size(); ++i) {
    if (!c.nodes[i].has_value) continue;
    CHECK(back.nodes[i].lo == c.nodes[i].lo);
    CHECK(back.nodes[i].hi == c.nodes[i].hi);
  }
}

TEST_CASE("digest ignores wall-clock but sees content") {
  Certificate c = sample_cert();
  std::string d0 = c.digest();
  c.timings["derive"] = 99.0;
  c.threads_used = 8;
  CHECK(c.digest() == d0);
  c.nodes[0].note += "x";
  CHECK(c.digest() != d0);
}

TEST_CASE("exit code contract") {
  Certificate c = sample_cert();
  CHECK(c.exit_code() == 0);
  Certificate bad = c;
  bad.nodes[3].status = "CONTRADICTS";
  CHECK(bad.exit_code() == 1);
  Certificate undec = c;
  undec.claims[0].verdict = "UNDECIDED";
  CHECK(undec.exit_code() == 3);
  Certificate info = c;
  Certificate::ClaimRecord r;
  r.id = "reported_route";
  r.verdict = "REFUTED";
  r.informational = true;
  info.claims.push_back(r);
  CHECK(info.exit_code() == 0);
  Certificate hard = info;
  hard.claims.back().informational = false;
  CHECK(hard.exit_code() == 1);
}

TEST_CASE("atomic write lands on disk") {
  Certificate c = sample_cert();
  std::string path = "cert_test_out.json";
  c.write_atomic(path);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  Certificate back = Certificate::from_json(buf.str());
  CHECK(back == c);
}

TEST_CASE("schema version is enforced") {
  Certificate c = sample_cert();
  std::string text = c.to_json();
  auto pos = text.find("\"schema_version\": 1");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 19, "\"schema_version\": 2");
  CHECK_THROWS_AS(Certificate::from_json(text), ParseError);
}

#include "chebcert/certificate.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "chebcert/decimal.hpp"

namespace cheb {

using nlohmann::json;

Certificate Certificate::assemble(const ConstantGraph& graph,
                                  const std::vector<VerdictRecord>& verdicts) {
  Certificate c;
  c.params = graph.params().as_map();
  const DeriveOptions& o = graph.options();
  c.options["quad_tol"] = format_hi(o.quad_tol);
  c.options["precision_bits"] = std::to_string(o.precision_bits);
  c.options["lambda_limit"] = std::to_string(o.lambda_limit);
  c.options["bnb_tol"] = format_hi(o.bnb_tol);
  c.options["bnb_depth"] = std::to_string(o.bnb_depth);

  for (const ConstNode& n : graph.nodes()) {
    NodeRecord r;
    r.id = n.id;
    r.kind = to_string(n.kind);
    r.deps = n.deps;
    r.has_value = n.has_value;
    if (n.has_value) {
      r.lo = format_lo(n.enclosure.lo);
      r.hi = format_hi(n.enclosure.hi);
    }
    r.printed = n.check.printed;
    switch (n.check.kind) {
      case CheckKind::NONE: r.check = "none"; break;
      case CheckKind::DECIMAL: r.check = "decimal"; break;
      case CheckKind::DECIMAL_CONTAINS: r.check = "decimal_contains"; break;
      case CheckKind::UPPER_BOUND: r.check = "upper_bound"; break;
      case CheckKind::RATIONAL_CONTAINS: r.check = "rational_contains"; break;
      case CheckKind::DOMINATED_BY_DEP: r.check = "dominated_by_" + n.check.dep; break;
      case CheckKind::EXACT_INT: r.check = "exact_integer"; break;
    }
    r.status = to_string(n.status);
    r.citation = n.citation;
    r.note = n.note;
    r.escalated = n.escalated;
    c.nodes.push_back(std::move(r));
  }

  for (const VerdictRecord& v : verdicts) {
    ClaimRecord r;
    r.id = v.claim;
    r.verdict = to_string(v.verdict);
    if (!v.margin.is_empty()) {
      r.margin_lo = format_lo(v.margin.lo);
      r.margin_hi = format_hi(v.margin.hi);
    }
    r.boxes = v.boxes_explored;
    r.tail_handled = v.tail_handled;
    r.informational = v.informational;
    r.note = v.note;
    if (v.witness.has_value()) {
      for (const Interval& d : v.witness->dims)
        r.witness.emplace_back(format_lo(d.lo), format_hi(d.hi));
    }
    r.seconds = v.seconds;
    c.claims.push_back(std::move(r));
  }

  for (const auto& a : graph.list_axioms()) {
    AxiomRecord r;
    r.id = a.slug;
    r.citation = a.citation;
    if (a.has_value) r.value = format_lo(a.value.lo) + " .. " + format_hi(a.value.hi);
    r.note = a.note;
    c.axioms.push_back(std::move(r));
  }
  return c;
}

namespace {

json to_json_body(const Certificate& c, bool with_runtime) {
  json j;
  j["schema_version"] = c.schema_version;
  j["tool"] = c.tool;
  j["version"] = c.version;
  j["params"] = json::object();
  for (const auto& [k, v] : c.params) j["params"][k] = format_hi(v);
  j["options"] = c.options;
  j["nodes"] = json::array();
  for (const auto& n : c.nodes) {
    json e;
    e["id"] = n.id;
    e["kind"] = n.kind;
    e["deps"] = n.deps;
    e["has_value"] = n.has_value;
    e["lo"] = n.lo;
    e["hi"] = n.hi;
    e["printed"] = n.printed;
    e["check"] = n.check;
    e["status"] = n.status;
    e["citation"] = n.citation;
    e["note"] = n.note;
    e["escalated"] = n.escalated;
    j["nodes"].push_back(e);
  }
  j["claims"] = json::array();
  for (const auto& v : c.claims) {
    json e;
    e["id"] = v.id;
    e["verdict"] = v.verdict;
    e["margin_lo"] = v.margin_lo;
    e["margin_hi"] = v.margin_hi;
    e["boxes"] = v.boxes;
    e["tail_handled"] = v.tail_handled;
    e["informational"] = v.informational;
    e["note"] = v.note;
    json w = json::array();
    for (const auto& [lo, hi] : v.witness) w.push_back(json::array({lo, hi}));
    e["witness"] = w;
    if (with_runtime) e["seconds"] = v.seconds;
    j["claims"].push_back(e);
  }
  j["axioms"] = json::array();
  for (const auto& a : c.axioms) {
    json e;
    e["id"] = a.id;
    e["citation"] = a.citation;
    e["value"] = a.value;
    e["note"] = a.note;
    j["axioms"].push_back(e);
  }
  if (with_runtime) {
    j["runtime"] = json::object();
    j["runtime"]["timings"] = c.timings;
    j["runtime"]["threads"] = c.threads_used;
  }
  return j;
}

}  // namespace

std::string Certificate::to_json(int indent) const {
  return to_json_body(*this, true).dump(indent);
}

Certificate Certificate::from_json(const std::string& text) {
  json j = json::parse(text);
  Certificate c;
  c.schema_version = j.at("schema_version").get<int>();
  if (c.schema_version != 1) throw ParseError("unsupported certificate schema version");
  c.tool = j.at("tool").get<std::string>();
  c.version = j.at("version").get<std::string>();
  for (const auto& [k, v] : j.at("params").items())
    c.params[k] = parse_endpoint(v.get<std::string>());
  for (const auto& [k, v] : j.at("options").items()) c.options[k] = v.get<std::string>();
  for (const auto& e : j.at("nodes")) {
    NodeRecord n;
    n.id = e.at("id").get<std::string>();
    n.kind = e.at("kind").get<std::string>();
    n.deps = e.at("deps").get<std::vector<std::string>>();
    n.has_value = e.at("has_value").get<bool>();
    n.lo = e.at("lo").get<std::string>();
    n.hi = e.at("hi").get<std::string>();
    n.printed = e.at("printed").get<std::string>();
    n.check = e.at("check").get<std::string>();
    n.status = e.at("status").get<std::string>();
    n.citation = e.at("citation").get<std::string>();
    n.note = e.at("note").get<std::string>();
    n.escalated = e.at("escalated").get<bool>();
    c.nodes.push_back(std::move(n));
  }
  for (const auto& e : j.at("claims")) {
    ClaimRecord v;
    v.id = e.at("id").get<std::string>();
    v.verdict = e.at("verdict").get<std::string>();
    v.margin_lo = e.at("margin_lo").get<std::string>();
    v.margin_hi = e.at("margin_hi").get<std::string>();
    v.boxes = e.at("boxes").get<long>();
    v.tail_handled = e.at("tail_handled").get<bool>();
    v.informational = e.at("informational").get<bool>();
    v.note = e.at("note").get<std::string>();
    for (const auto& w : e.at("witness"))
      v.witness.emplace_back(w.at(0).get<std::string>(), w.at(1).get<std::string>());
    if (e.contains("seconds")) v.seconds = e.at("seconds").get<double>();
    c.claims.push_back(std::move(v));
  }
  for (const auto& e : j.at("axioms")) {
    AxiomRecord a;
    a.id = e.at("id").get<std::string>();
    a.citation = e.at("citation").get<std::string>();
    a.value = e.at("value").get<std::string>();
    a.note = e.at("note").get<std::string>();
    c.axioms.push_back(std::move(a));
  }
  if (j.contains("runtime")) {
    const auto& r = j.at("runtime");
    if (r.contains("timings"))
      c.timings = r.at("timings").get<std::map<std::string, double>>();
    if (r.contains("threads")) c.threads_used = r.at("threads").get<int>();
  }
  return c;
}

std::string Certificate::digest() const {
  std::string body = to_json_body(*this, false).dump();
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : body) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

int Certificate::exit_code() const {
  bool contradiction = false, undecided = false;
  for (const auto& n : nodes) {
    if (n.status == "CONTRADICTS" || n.status == "UNEVALUATED") contradiction = true;
    if (n.status == "INCONCLUSIVE") undecided = true;
  }
  for (const auto& v : claims) {
    if (v.informational) continue;
    if (v.verdict == "REFUTED") contradiction = true;
    if (v.verdict == "UNDECIDED") undecided = true;
  }
  if (contradiction) return 1;
  if (undecided) return 3;
  return 0;
}

void Certificate::write_atomic(const std::string& path) const {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw RangeError("cannot open for writing: " + tmp);
    out << to_json() << "\n";
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw RangeError("atomic rename failed for " + path);
}

bool Certificate::operator==(const Certificate& other) const {
  return to_json_body(*this, false) == to_json_body(other, false);
}

std::string dot_export(const ConstantGraph& graph) { return graph.to_dot(); }

}  // namespace cheb

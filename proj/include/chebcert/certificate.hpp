#pragma once

#include <map>
#include <string>
#include <vector>

#include "chebcert/graph.hpp"
#include "chebcert/verify.hpp"

namespace cheb {

// Machine-readable verification certificate. Endpoints are serialized as
// directed decimal strings (lo rounded down, hi rounded up) so no consumer
// ever sees an inward-rounded enclosure; parsing them back recovers the
// exact binary endpoints.
struct Certificate {
  int schema_version = 1;
  std::string tool = "chebcert";
  std::string version = "0.1.0";
  std::map<std::string, double> params;
  std::map<std::string, std::string> options;

  struct NodeRecord {
    std::string id;
    std::string kind;
    std::vector<std::string> deps;
    bool has_value = false;
    std::string lo, hi;
    std::string printed;
    std::string check;
    std::string status;
    std::string citation;
    std::string note;
    bool escalated = false;
  };
  std::vector<NodeRecord> nodes;

  struct ClaimRecord {
    std::string id;
    std::string verdict;
    std::string margin_lo, margin_hi;
    long boxes = 0;
    bool tail_handled = false;
    bool informational = false;
    std::string note;
    std::vector<std::pair<std::string, std::string>> witness;
    double seconds = 0.0;
  };
  std::vector<ClaimRecord> claims;

  struct AxiomRecord {
    std::string id;
    std::string citation;
    std::string value;  // empty when the axiom carries no numeric value
    std::string note;
  };
  std::vector<AxiomRecord> axioms;

  // wall clock per stage; excluded from the digest so reruns compare equal
  std::map<std::string, double> timings;
  int threads_used = 0;

  static Certificate assemble(const ConstantGraph& graph,
                              const std::vector<VerdictRecord>& verdicts);

  std::string to_json(int indent = 2) const;
  static Certificate from_json(const std::string& text);

  // FNV-1a over the canonical serialization without timings/threads
  std::string digest() const;

  // exit-code contract: 0 verified, 1 contradiction or refutation,
  // 3 undecided present (none refuted), 2 reserved for tool errors
  int exit_code() const;

  void write_atomic(const std::string& path) const;

  bool operator==(const Certificate& other) const;
};

std::string dot_export(const ConstantGraph& graph);

}  // namespace cheb

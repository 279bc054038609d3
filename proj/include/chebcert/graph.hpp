#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "chebcert/generic.hpp"
#include "chebcert/interval.hpp"
#include "chebcert/params.hpp"

namespace cheb {

enum class NodeKind { FORMULA, INTEGRAL, AXIOM, PARAMETER, ASSEMBLY };
enum class NodeStatus {
  CONFIRMS,
  TIGHTER,
  CONTRADICTS,
  INCONCLUSIVE,
  NOT_CHECKED,  // node carries no printed claim
  UNEVALUATED   // evaluation failed or a dependency did
};

const char* to_string(NodeKind k);
const char* to_string(NodeStatus s);

enum class CheckKind {
  NONE,
  DECIMAL,           // enclosure inside the printed band (matches_printed)
  DECIMAL_CONTAINS,  // printed point lies inside the enclosure
  UPPER_BOUND,       // enclosure certainly <= printed value
  RATIONAL_CONTAINS,
  DOMINATED_BY_DEP,  // adopted value <= the named formula node (round-down claims)
  EXACT_INT
};

struct NodeCheck {
  CheckKind kind = CheckKind::NONE;
  std::string printed;  // decimal text or "p/q"
  long long p = 0, q = 1;
  long long integer = 0;
  std::string dep;  // for DOMINATED_BY_DEP
};

class ConstantGraph;

struct GraphEnv;
struct GraphEnvMp;

struct ConstNode {
  std::string id;
  NodeKind kind = NodeKind::FORMULA;
  std::vector<std::string> deps;
  Interval enclosure;
  bool has_value = false;
  NodeCheck check;
  NodeStatus status = NodeStatus::NOT_CHECKED;
  std::string citation;    // axiom nodes
  std::string axiom_slug;  // reporting id for the axiom list
  std::string note;
  bool escalated = false;  // re-evaluated at higher precision

  std::function<Interval(const GraphEnv&)> eval_d;
  std::function<MpInterval(const GraphEnvMp&)> eval_mp;
};

struct DeriveOptions {
  double quad_tol = 1e-8;       // width target for integral constants
  int precision_bits = 192;     // escalation precision
  uint64_t lambda_limit = 1000000;
  double bnb_tol = 1e-9;        // derived minimum enclosure width target
  long bnb_max_boxes = 2000000;
  int bnb_depth = 60;
  int threads = 0;
};

class ConstantGraph {
 public:
  // Builds the full node set and evaluates it topologically. A failed node is
  // marked UNEVALUATED and poisons its dependents, never the whole graph.
  static ConstantGraph derive_all(const ParamSet& params, const DeriveOptions& opts = {});

  const std::vector<ConstNode>& nodes() const { return nodes_; }
  const ParamSet& params() const { return params_; }
  const DeriveOptions& options() const { return opts_; }

  bool has(const std::string& id) const { return index_.count(id) > 0; }
  const ConstNode& node(const std::string& id) const;
  Interval value(const std::string& id) const;  // throws on UNEVALUATED

  struct AxiomEntry {
    std::string id;
    std::string slug;
    std::string citation;
    bool has_value;
    Interval value;
    std::string note;
  };
  std::vector<AxiomEntry> list_axioms() const;

  // counts used for the exit-code contract
  int count_status(NodeStatus s) const;

  std::string to_dot() const;

  // sanity: insertion order is a valid topological order of deps
  bool acyclic_ok() const;

  // Re-evaluates one node (and its ancestors) at the escalation precision and
  // intersects the result in; returns false when the node has no MPFR path.
  bool force_escalate(const std::string& id);

 private:
  friend struct GraphEnv;
  friend struct GraphEnvMp;

  ParamSet params_;
  DeriveOptions opts_;
  std::vector<ConstNode> nodes_;
  std::unordered_map<std::string, size_t> index_;

  ConstNode& add(ConstNode n);
  void build();
  void evaluate();
  void adjudicate(ConstNode& n);
  void escalate_inconclusive();
};

// Evaluation environments double as numeric contexts, so every formula is a
// single generic lambda run over doubles or over MPFR intervals.
struct GraphEnv {
  using num = Interval;
  const ConstantGraph* g;
  const std::vector<Interval>* vals;

  Interval v(const std::string& id) const;

  Interval lit(double x) const { return Interval::point(x); }
  Interval rat(long p, long q) const { return rational_i(p, q); }
  Interval dec(const char* s) const;
  Interval pi() const { return pi_i(); }
  Interval ln2() const { return ln2_i(); }
  Interval ln3() const { return ln3_i(); }
  Interval ln5() const { return ln5_i(); }
  Interval ln10() const { return ln10_i(); }
  Interval ln12() const { return ln12_i(); }
  Interval sqrt5() const { return sqrt5_i(); }
  Interval sqrt17() const { return sqrt17_i(); }
  Interval sqrt_pi() const { return sqrt_pi_i(); }
  Interval euler_e() const { return euler_e_i(); }
};

struct GraphEnvMp {
  using num = MpInterval;
  const ConstantGraph* g;
  mpfr_prec_t prec;
  std::map<std::string, MpInterval>* cache;

  MpInterval v(const std::string& id) const;

  MpInterval lit(double x) const { return MpInterval::point(x, prec); }
  MpInterval rat(long p, long q) const { return rational_mp(p, q, prec); }
  MpInterval dec(const char* s) const;
  MpInterval pi() const { return pi_mp(prec); }
  MpInterval ln2() const { return ln2_mp(prec); }
  MpInterval ln3() const { return log_ui_mp(3, prec); }
  MpInterval ln5() const { return log_ui_mp(5, prec); }
  MpInterval ln10() const { return log_ui_mp(10, prec); }
  MpInterval ln12() const { return log_ui_mp(12, prec); }
  MpInterval sqrt5() const { return sqrt_ui_mp(5, prec); }
  MpInterval sqrt17() const { return sqrt_ui_mp(17, prec); }
  MpInterval sqrt_pi() const { return sqrt_i(pi_mp(prec)); }
  MpInterval euler_e() const { return euler_e_mp(prec); }
};

}  // namespace cheb

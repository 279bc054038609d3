#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chebcert/interval.hpp"
#include "chebcert/jet.hpp"
#include "chebcert/params.hpp"

namespace cheb {

class ConstantGraph;

enum class Verdict { PROVED, REFUTED, UNDECIDED };
const char* to_string(Verdict v);

struct Region {
  std::vector<Interval> dims;
  std::vector<bool> periodic;  // optional, per dimension
};

struct VerdictRecord {
  std::string claim;
  Verdict verdict = Verdict::UNDECIDED;
  Interval margin;  // inf of LHS - RHS over the region (or inf f for sign claims)
  long boxes_explored = 0;
  bool tail_handled = false;
  bool informational = false;  // reported routes that carry no pass/fail weight
  std::string note;
  std::optional<Region> witness;  // for REFUTED: a box with certified failure
  double seconds = 0.0;
};

struct BnbOptions {
  int max_depth = 60;        // bisections per dimension
  long max_boxes = 2000000;
  double margin_goal = 0.0;  // stop refining a box once its sign is certified
  int threads = 0;
};

// One-dimensional claims f >= 0 (strict or not) over an interval, with an
// optional registered tail certificate covering [tail_from, inf) or
// (-inf, -tail_from] by a closed form whose enclosure already has the sign.
struct TailCertificate {
  double from;  // |x| >= from is covered
  std::function<Interval(const Interval&)> bound;  // enclosure of f on the tail box
};

VerdictRecord verify_nonneg(const std::string& claim,
                            const std::function<Interval(const Interval&)>& f,
                            const Interval& domain, bool strict, const BnbOptions& opts,
                            const std::optional<TailCertificate>& tail = std::nullopt);

// derivative keeps a sign: dir = +1 increasing, -1 decreasing
VerdictRecord verify_monotone(const std::string& claim,
                              const std::function<Jet(const Jet&)>& fj, const Interval& domain,
                              int dir, bool strict, const BnbOptions& opts);

// Branch-and-bound enclosure of inf over v in R of G(alpha9, 1/alpha9, 1; v).
struct G0Result {
  Interval inf_value;
  Interval minimizer_window;  // v-window containing the minimizer
  long boxes_explored = 0;
  bool converged = false;
};
G0Result locate_G0(double tol, const BnbOptions& opts = {});

// Composite checks of the published chain; parameters and the evaluated
// constant graph supply every constant.
VerdictRecord verify_Q_nonneg(const ParamSet& params, const BnbOptions& opts);
VerdictRecord verify_G_nonpos(const BnbOptions& opts);
VerdictRecord verify_f3_increasing(const BnbOptions& opts);
VerdictRecord verify_phi1_positive(const BnbOptions& opts);
VerdictRecord verify_phi2_nonneg(const BnbOptions& opts);

// phi(u) >= phi(1) u on (0,1] and phi(u) >= phi(1) on [1, inf)
VerdictRecord verify_piecewise_lower(const std::string& which, const BnbOptions& opts);

VerdictRecord verify_zfr(const ParamSet& params, const ConstantGraph& graph);

// side conditions of the repulsion chain (sign constraints on B19-type terms)
std::vector<VerdictRecord> verify_dh_side_conditions(const ParamSet& params);

struct FeasibilityReport {
  std::vector<VerdictRecord> records;
};

// Constants consumed by the kernel-positivity margins; none depend on c16 or
// c23, so a single extraction serves a whole parameter ladder.
struct KernelLemmaConsts {
  Interval c7, c10, c12, c13, c14, c15, c15p, c19, c20, c21, alpha3, alpha4;
  static KernelLemmaConsts from_graph(const ConstantGraph& graph);
};

// Margins of the positivity thresholds, sup over d_L >= 3 taken via the
// per-term monotonicity certificates. An empty interval means the
// certificate failed (treat as undecided).
Interval lemma84_margin_case_i(const KernelLemmaConsts& k, const Interval& c16);
Interval lemma84_margin_case_ii(const KernelLemmaConsts& k, const Interval& c16);
Interval lemma86_margin_case_i(const KernelLemmaConsts& k, const Interval& c23);

// positivity thresholds at log x = c16 log d_L, sup over d_L >= 3
FeasibilityReport verify_lemma84(const ParamSet& params, const ConstantGraph& graph);

// kernel-2 thresholds at x = d_L^{c23}; case (ii) is evaluated through both
// the shortcut form and the direct two-sided substitution and both are
// reported (informational), since the shortcut substitutes an upper bound
// where its exponent calls for a lower one.
FeasibilityReport verify_lemma86(const ParamSet& params, const ConstantGraph& graph);

// fixed-parameter chain for the real-zero corollary; also re-checks the
// printed c7/c8/c10 values
FeasibilityReport verify_cor75(const ConstantGraph& graph);

// Lemma "sandbox": empirical prime-count comparisons (exact sieve)
FeasibilityReport sandbox_check_lemma32(uint64_t x_max, int threads = 0);

// Full suite at the given parameters / graph.
std::vector<VerdictRecord> run_claims(const std::string& selector, const ParamSet& params,
                                      const ConstantGraph& graph, const BnbOptions& opts);

}  // namespace cheb

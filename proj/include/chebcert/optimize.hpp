#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chebcert/graph.hpp"
#include "chebcert/interval.hpp"
#include "chebcert/params.hpp"

namespace cheb {

enum class Objective {
  MINIMIZE_ZFR_CONSTANT,
  MAXIMIZE_C8,
  MINIMIZE_C10,
  MINIMIZE_C16,
  MINIMIZE_C23,
  MINIMIZE_A1,
  MINIMIZE_DENSITY_SHORT,  // the short-form zero-density coefficient
};

Objective objective_from_string(const std::string& s);
const char* to_string(Objective o);

struct SweepAxis {
  std::string param;  // ParamSet field name
  double from = 0.0, to = 0.0, step = 0.0;
  std::vector<double> values() const;
};

struct SweepSpec {
  Objective objective = Objective::MINIMIZE_ZFR_CONSTANT;
  std::vector<SweepAxis> axes;  // 1-D or 2-D
  static SweepSpec from_json_file(const std::string& path);
  static SweepSpec from_json_text(const std::string& text);
};

struct SweepRow {
  ParamSet params;
  Interval objective;  // enclosure; empty when evaluation failed
  bool evaluated = false;
  bool feasible = false;
  std::string note;
};

struct SweepResult {
  SweepSpec spec;
  std::vector<SweepRow> rows;  // canonical grid order
  std::optional<size_t> best;  // index of the best feasible row
  std::string to_csv() const;
};

SweepResult sweep(const SweepSpec& spec, const ParamSet& seed, int threads = 0);

struct RefineResult {
  ParamSet best;
  Interval objective;
  bool improved = false;  // false: seed returned (no feasible improvement)
  int iterations = 0;
  std::string note;
};

// Coordinate descent with golden-section line searches; every accepted step
// re-verified through the feasibility oracle. Throws RangeError when the
// seed itself is infeasible.
RefineResult refine(const ParamSet& seed, Objective objective, int max_iters);

// The conjunction of verifier claims the published parameters are used in.
// The reported-but-open shortcut route of the second kernel case is excluded
// by design (it is informational).
bool feasible(const ParamSet& params, std::string* why = nullptr);

// Objective evaluation on the relevant subgraph (cheap where possible).
Interval objective_value(Objective o, const ParamSet& params);

}  // namespace cheb

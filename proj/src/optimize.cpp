#include "chebcert/optimize.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>

#include <json.hpp>

#include "chebcert/decimal.hpp"
#include "chebcert/functions.hpp"
#include "chebcert/verify.hpp"
#include "chebcert/vonmangoldt.hpp"

namespace cheb {

using nlohmann::json;

Objective objective_from_string(const std::string& s) {
  if (s == "minimize_zfr_constant") return Objective::MINIMIZE_ZFR_CONSTANT;
  if (s == "maximize_c8") return Objective::MAXIMIZE_C8;
  if (s == "minimize_c10") return Objective::MINIMIZE_C10;
  if (s == "minimize_c16") return Objective::MINIMIZE_C16;
  if (s == "minimize_c23") return Objective::MINIMIZE_C23;
  if (s == "minimize_A1") return Objective::MINIMIZE_A1;
  if (s == "minimize_density_short") return Objective::MINIMIZE_DENSITY_SHORT;
  throw ParseError("unknown objective: " + s);
}

const char* to_string(Objective o) {
  switch (o) {
    case Objective::MINIMIZE_ZFR_CONSTANT: return "minimize_zfr_constant";
    case Objective::MAXIMIZE_C8: return "maximize_c8";
    case Objective::MINIMIZE_C10: return "minimize_c10";
    case Objective::MINIMIZE_C16: return "minimize_c16";
    case Objective::MINIMIZE_C23: return "minimize_c23";
    case Objective::MINIMIZE_A1: return "minimize_A1";
    case Objective::MINIMIZE_DENSITY_SHORT: return "minimize_density_short";
  }
  return "?";
}

std::vector<double> SweepAxis::values() const {
  std::vector<double> out;
  if (step <= 0.0) throw ParseError("sweep axis needs a positive step");
  for (double v = from; v <= to + step * 1e-9; v += step) out.push_back(v);
  return out;
}

SweepSpec SweepSpec::from_json_text(const std::string& text) {
  json j = json::parse(text);
  SweepSpec s;
  if (j.empty()) return s;
  s.objective = objective_from_string(j.at("objective").get<std::string>());
  for (const auto& a : j.at("axes")) {
    SweepAxis ax;
    ax.param = a.at("param").get<std::string>();
    ax.from = a.at("from").get<double>();
    ax.to = a.at("to").get<double>();
    ax.step = a.at("step").get<double>();
    s.axes.push_back(ax);
  }
  if (s.axes.empty() || s.axes.size() > 2)
    throw ParseError("sweep spec supports one or two axes");
  return s;
}

SweepSpec SweepSpec::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open sweep spec: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  // an empty file is an empty sweep
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return SweepSpec{};
  return from_json_text(text);
}

namespace {

ParamSet with_param(const ParamSet& base, const std::string& name, double value) {
  auto kv = base.as_map();
  if (!kv.count(name)) throw ParseError("unknown parameter: " + name);
  kv[name] = value;
  return ParamSet::from_map(kv);
}

// cheap subgraph evaluations ---------------------------------------------------

Interval zfr_constant_of(const ParamSet& p) {
  DCtx c;
  Interval a = Interval::point(p.q_shape_a);
  Interval b0 = 4.0 * sq(a) + 4.0 * a + 2.0;
  Interval b1 = 4.0 * sq(a) + 8.0 * a + 3.0;
  Interval b2 = 4.0 * a + 2.0;
  Interval b3(1.0, 1.0);
  Interval q0 = b0 + b1 + b2 + b3;
  Interval b = Interval::point(p.b_zfr);
  Interval eps = 1.0 / (b * ln12_i());
  Interval kappa = 1.0 / sqrt5_i();
  Interval a9 = (sqrt5_i() - 1.0) / 2.0;
  Interval alpha10 =
      kappa * (2.0 * eps / sq(a9) + eps / sq(1.0 / a9 - eps)) + eps / sq(1.0 - eps);
  Interval alpha11 = (3.0 * kappa + 1.0) * eps;
  Interval G0 = decimal_to_interval("-0.121585107");
  Interval f4e = fns::f4_stechkin(c, eps + 1.0);
  Interval alpha12 = fns::alpha12_const(c);
  Interval D0 = fns::d_weight(c, 0, eps);
  Interval D2 = f4e * ln2_i() + alpha12;
  Interval D3 = f4e * ln3_i() + alpha12;
  Interval alpha13 = (q0 - b0) * f4e;
  Interval alpha14 = b0 * D0 + b1 * alpha12 + b2 * D2 + b3 * D3;
  Interval alpha15 = b0 * fns::f3_stechkin(c, eps + 1.0) - (q0 - b0) * (G0 - alpha11) +
                     (q0 - b1) * alpha10;
  Interval alpha16 = (1.0 - kappa) / 2.0 * q0 + (b1 - b0) * (4.0 * b / (4.0 + sq(b)));
  Interval delta = Interval::point(p.delta_zfr), eta = Interval::point(p.eta_zfr);
  Interval B11 = alpha16 + 2.0 * alpha14 * delta / ln3_i() + alpha15 * eta / ln3_i();
  Interval B12 = alpha13 + alpha14 * (1.0 - delta) / ln2_i() +
                 alpha15 * (1.0 - eta) / (2.0 * ln2_i());
  Interval B13(std::max(B11.lo, B12.lo), std::max(B11.hi, B12.hi));
  Interval margin = b1 / (b0 * b + B13) - 1.0 / b;
  return 1.0 / margin;
}

Interval c8_of(const ParamSet& p) {
  DCtx c;
  Interval s0 = Interval::point(p.sigma0_dh);
  Interval s1 = s0 - 1.0;
  Interval a2 = fns::f2_gamma(c, s0) / s1;
  Interval a3 = -log_i(pi_i()) / (2.0 * s1);
  Interval a4 = (1.0 / s0 + 1.0 / s1) / s1;
  Interval two_s2 = 2.0 / sq(s0);
  Interval b17 = 1.0 / s1;
  Interval b19 = a2 * ln2_i() + 2.0 * a3 + two_s2;
  Interval b20 = 2.0 * a4 - two_s2;
  Interval delta = Interval::point(p.delta_dh), eta = Interval::point(p.eta_dh);
  Interval b22 = b17 + (2.0 * b19 * delta + b20 * eta) / ln3_i();
  Interval b23 = a2 + b19 * (1.0 - delta) / ln2_i() + b20 * (1.0 - eta) / (2.0 * ln2_i());
  Interval b24(std::max(b22.lo, b23.lo), std::max(b22.hi, b23.hi));
  return s1 / (2.0 * Interval::point(p.c_check) * sq(s0) * b24);
}

Interval density_short_of(const ParamSet& p) {
  Interval sigma = Interval::point(p.sigma_density_short);
  auto table = default_lambda_table(200000);
  Interval f1 = neg_zeta_log_deriv(sigma, *table);
  fns::DensityCoeffs a = fns::density_coeffs(sigma, f1);
  Interval B1 = a.a1 + (2.0 * a.a3 + a.a4) / ln3_i();
  Interval B2 = a.a2;
  return Interval(std::max(B1.lo, B2.lo), std::max(B1.hi, B2.hi));
}

Interval c10_of(const ParamSet& p) {
  // the corollary chain with the free sigma0/c_check of the ParamSet
  DCtx c;
  ParamSet q = p;
  Interval c8 = c8_of(q);
  Interval cc = Interval::point(p.c_check);
  Interval c7 = (cc - 12.0) / (8.0 * cc) * c8;
  return (1.0 / c8 + 1.0 / euler_e_i()) * (1.0 + 2.0 * ln2_i() / ln3_i()) -
         log_i(c7) / ln3_i();
}

Interval lemma84_case_i_margin(const ParamSet& p, const ConstantGraph& g) {
  Interval c16 = Interval::point(p.c16);
  Interval decay = exp_i(-(2.0 * g.value("c_12") * c16) * ln2_i());
  Interval eps1 = fns::eps1_lemma84(ln3_i(), g.value("c_13"), g.value("c_15"),
                                    g.value("alpha_3"), c16);
  return rational_i(9, 10) * sq(c16) - g.value("c_14") * decay - eps1;
}

}  // namespace

bool feasible(const ParamSet& params, std::string* why) {
  try {
    params.validate();
  } catch (const std::exception& ex) {
    if (why != nullptr) *why = ex.what();
    return false;
  }
  try {
    DeriveOptions opts;
    opts.quad_tol = 1e-7;
    ConstantGraph g = ConstantGraph::derive_all(params, opts);
    for (const ConstNode& n : g.nodes()) {
      if (n.status == NodeStatus::CONTRADICTS || n.status == NodeStatus::UNEVALUATED) {
        if (why != nullptr) *why = "node " + n.id + ": " + to_string(n.status);
        return false;
      }
    }
    BnbOptions b;
    VerdictRecord q = verify_Q_nonneg(params, b);
    if (q.verdict != Verdict::PROVED) {
      if (why != nullptr) *why = "Q nonnegativity";
      return false;
    }
    VerdictRecord z = verify_zfr(params, g);
    if (z.verdict != Verdict::PROVED) {
      if (why != nullptr) *why = "zero-free region margin";
      return false;
    }
    for (const auto& r : verify_lemma84(params, g).records)
      if (r.verdict != Verdict::PROVED) {
        if (why != nullptr) *why = r.claim;
        return false;
      }
    for (const auto& r : verify_lemma86(params, g).records)
      if (!r.informational && r.verdict != Verdict::PROVED) {
        if (why != nullptr) *why = r.claim;
        return false;
      }
    for (const auto& r : verify_dh_side_conditions(params))
      if (r.verdict != Verdict::PROVED) {
        if (why != nullptr) *why = r.claim;
        return false;
      }
    for (const auto& r : verify_cor75(g).records)
      if (!r.informational && r.verdict != Verdict::PROVED) {
        if (why != nullptr) *why = r.claim;
        return false;
      }
  } catch (const std::exception& ex) {
    if (why != nullptr) *why = ex.what();
    return false;
  }
  return true;
}

Interval objective_value(Objective o, const ParamSet& p) {
  switch (o) {
    case Objective::MINIMIZE_ZFR_CONSTANT: return zfr_constant_of(p);
    case Objective::MAXIMIZE_C8: return -c8_of(p);
    case Objective::MINIMIZE_C10: return c10_of(p);
    case Objective::MINIMIZE_C16: return Interval::point(p.c16);
    case Objective::MINIMIZE_C23: return Interval::point(p.c23);
    case Objective::MINIMIZE_A1: {
      Interval m = 4.0 * Interval::point(p.c16);
      Interval n = 5.0 * Interval::point(p.c23);
      Interval mx(std::max(m.lo, n.lo), std::max(m.hi, n.hi));
      return Interval(std::ceil(mx.lo), std::ceil(mx.hi));
    }
    case Objective::MINIMIZE_DENSITY_SHORT: return density_short_of(p);
  }
  throw DomainError("objective_value: unhandled objective");
}

namespace {

// The kernel-lemma constants are independent of c16/c23, so ladders over
// those two parameters share one extraction (keyed by the remaining fields).
const KernelLemmaConsts& kernel_consts_for(const ParamSet& p) {
  static std::mutex mu;
  static std::map<std::string, KernelLemmaConsts> cache;
  ParamSet base = p;
  base.c16 = 3144.25;
  base.c23 = 179.0;
  std::ostringstream key;
  for (const auto& [k2, v2] : base.as_map()) key << k2 << '=' << v2 << ';';
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key.str());
  if (it != cache.end()) return it->second;
  DeriveOptions opts;
  opts.quad_tol = 1e-7;
  ConstantGraph g = ConstantGraph::derive_all(base, opts);
  return cache.emplace(key.str(), KernelLemmaConsts::from_graph(g)).first->second;
}

// feasibility for sweep points: the full oracle is expensive, so sweeps use a
// scoped oracle per objective; refine() always re-verifies with the full one.
bool sweep_feasible(Objective o, const ParamSet& p) {
  try {
    p.validate();
    switch (o) {
      case Objective::MINIMIZE_ZFR_CONSTANT:
      case Objective::MINIMIZE_DENSITY_SHORT: {
        BnbOptions b;
        return verify_Q_nonneg(p, b).verdict == Verdict::PROVED &&
               zfr_constant_of(p).hi > 0.0;
      }
      case Objective::MAXIMIZE_C8:
      case Objective::MINIMIZE_C10: {
        fns::DhB g = fns::dh_b_chain(Interval::point(p.sigma0_dh));
        return g.b19.lo >= 0.0;
      }
      case Objective::MINIMIZE_C16:
      case Objective::MINIMIZE_C23:
      case Objective::MINIMIZE_A1: {
        const KernelLemmaConsts& k = kernel_consts_for(p);
        Interval c16 = Interval::point(p.c16);
        Interval c23 = Interval::point(p.c23);
        Interval m1 = lemma84_margin_case_i(k, c16);
        Interval m2 = lemma84_margin_case_ii(k, c16);
        Interval m3 = lemma86_margin_case_i(k, c23);
        return !m1.is_empty() && m1.lo > 0.0 && !m2.is_empty() && m2.lo > 0.0 &&
               !m3.is_empty() && m3.lo > 0.0;
      }
    }
  } catch (const std::exception&) {
    return false;
  }
  return false;
}

}  // namespace

SweepResult sweep(const SweepSpec& spec, const ParamSet& seed, int threads) {
  SweepResult out;
  out.spec = spec;
  if (spec.axes.empty()) return out;

  std::vector<std::vector<double>> grids;
  for (const auto& ax : spec.axes) grids.push_back(ax.values());
  std::vector<ParamSet> points;
  if (grids.size() == 1) {
    for (double v : grids[0]) points.push_back(with_param(seed, spec.axes[0].param, v));
  } else {
    for (double v0 : grids[0])
      for (double v1 : grids[1])
        points.push_back(
            with_param(with_param(seed, spec.axes[0].param, v0), spec.axes[1].param, v1));
  }

  out.rows.resize(points.size());
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
  for (long i = 0; i < static_cast<long>(points.size()); ++i) {
    SweepRow row;
    row.params = points[i];
    try {
      row.objective = objective_value(spec.objective, points[i]);
      row.evaluated = true;
      row.feasible = sweep_feasible(spec.objective, points[i]);
    } catch (const std::exception& ex) {
      row.note = ex.what();
    }
    out.rows[i] = std::move(row);
  }
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < out.rows.size(); ++i) {
    const SweepRow& r = out.rows[i];
    if (r.evaluated && r.feasible && r.objective.mid() < best) {
      best = r.objective.mid();
      out.best = i;
    }
  }
  return out;
}

std::string SweepResult::to_csv() const {
  std::ostringstream os;
  os << "index";
  for (const auto& ax : spec.axes) os << "," << ax.param;
  os << ",objective_lo,objective_hi,feasible,note\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    const SweepRow& r = rows[i];
    os << i;
    auto kv = r.params.as_map();
    for (const auto& ax : spec.axes) os << "," << format_hi(kv.at(ax.param));
    if (r.evaluated)
      os << "," << format_lo(r.objective.lo) << "," << format_hi(r.objective.hi);
    else
      os << ",,";
    os << "," << (r.feasible ? "true" : "false") << "," << r.note << "\n";
  }
  return os.str();
}

RefineResult refine(const ParamSet& seed, Objective objective, int max_iters) {
  std::string why;
  if (!feasible(seed, &why)) throw RangeError("refine: seed infeasible: " + why);

  // coordinates explored per objective
  std::vector<std::string> coords;
  switch (objective) {
    case Objective::MINIMIZE_ZFR_CONSTANT:
      coords = {"b_zfr", "delta_zfr", "eta_zfr", "q_shape_a"};
      break;
    case Objective::MAXIMIZE_C8: coords = {"sigma0_dh"}; break;
    case Objective::MINIMIZE_C10: coords = {"sigma0_dh", "c_check"}; break;
    case Objective::MINIMIZE_C16:
    case Objective::MINIMIZE_A1: coords = {"c16"}; break;
    case Objective::MINIMIZE_C23: coords = {"c23"}; break;
    case Objective::MINIMIZE_DENSITY_SHORT: coords = {"sigma_density_short"}; break;
  }

  RefineResult out;
  out.best = seed;
  out.objective = objective_value(objective, seed);
  const double golden = 0.6180339887498949;

  for (int iter = 0; iter < max_iters; ++iter) {
    bool any = false;
    for (const std::string& coord : coords) {
      double x0 = out.best.as_map().at(coord);
      double lo = x0 * 0.9, hi = x0 * 1.1;
      // golden-section on the smooth 1-D slice, feasibility-gated
      double a = lo, b = hi;
      double fa = std::numeric_limits<double>::infinity();
      double best_x = x0, best_f = out.objective.mid();
      for (int step = 0; step < 24; ++step) {
        double m1 = b - golden * (b - a);
        double m2 = a + golden * (b - a);
        auto eval = [&](double x) {
          ParamSet cand = with_param(out.best, coord, x);
          if (!sweep_feasible(objective, cand)) return std::numeric_limits<double>::infinity();
          return objective_value(objective, cand).mid();
        };
        double f1 = eval(m1), f2 = eval(m2);
        if (f1 < f2)
          b = m2;
        else
          a = m1;
        double fm = std::min(f1, f2);
        double xm = f1 < f2 ? m1 : m2;
        if (fm < fa) fa = fm;
        if (fm < best_f - 1e-12) {
          best_f = fm;
          best_x = xm;
        }
      }
      if (best_x != x0) {
        ParamSet cand = with_param(out.best, coord, best_x);
        std::string reason;
        if (feasible(cand, &reason)) {
          Interval candval = objective_value(objective, cand);
          if (candval.mid() < out.objective.mid()) {
            out.best = cand;
            out.objective = candval;
            out.improved = true;
            any = true;
          }
        }
      }
    }
    ++out.iterations;
    if (!any) break;
  }
  if (!out.improved) out.note = "no feasible improvement over the seed";
  return out;
}

}  // namespace cheb

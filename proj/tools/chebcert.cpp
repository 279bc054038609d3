// chebcert: recomputes, verifies, and explores the explicit constant chain
// behind the least-prime-ideal exponent, emitting machine-readable
// certificates.
//
// Subcommands: derive, ineq, dag, sandbox, optimize. Exit codes: 0 verified,
// 1 contradiction or refutation, 2 tool error, 3 undecided results present.

#include <omp.h>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include "chebcert/certificate.hpp"
#include "chebcert/decimal.hpp"
#include "chebcert/graph.hpp"
#include "chebcert/optimize.hpp"
#include "chebcert/params.hpp"
#include "chebcert/sieve.hpp"
#include "chebcert/verify.hpp"

namespace {

struct CommonOpts {
  std::string config;
  std::string out;
  int precision = 192;
  double quad_tol = 1e-8;
  int bnb_depth = 60;
  int threads = 0;
  std::vector<std::string> set_kv;
};

cheb::ParamSet load_params(const CommonOpts& c) {
  cheb::ParamSet p;
  if (!c.config.empty()) p = cheb::ParamSet::load_config(c.config);
  for (const std::string& kv : c.set_kv) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw cheb::ParseError("--set expects KEY=VALUE");
    auto m = p.as_map();
    m[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    p = cheb::ParamSet::from_map(m);
  }
  return p;
}

cheb::DeriveOptions derive_opts(const CommonOpts& c) {
  cheb::DeriveOptions o;
  o.quad_tol = c.quad_tol;
  o.precision_bits = c.precision;
  o.bnb_depth = c.bnb_depth;
  o.threads = c.threads;
  return o;
}

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--config", c.config, "key=value parameter file");
  cmd->add_option("--precision", c.precision, "escalation precision in bits");
  cmd->add_option("--quad-tol", c.quad_tol, "width target for integral constants");
  cmd->add_option("--bnb-depth", c.bnb_depth, "bisection depth limit per dimension");
  cmd->add_option("--out", c.out, "output path");
  cmd->add_option("--threads", c.threads, "worker threads (affects speed only)");
  cmd->add_option("--set", c.set_kv, "override a parameter, KEY=VALUE")->take_all();
}

int exit_code_from(const std::vector<cheb::VerdictRecord>& records) {
  bool refuted = false, undecided = false;
  for (const auto& r : records) {
    if (r.informational) continue;
    if (r.verdict == cheb::Verdict::REFUTED) refuted = true;
    if (r.verdict == cheb::Verdict::UNDECIDED) undecided = true;
  }
  if (refuted) return 1;
  if (undecided) return 3;
  return 0;
}

void print_verdicts(const std::vector<cheb::VerdictRecord>& records) {
  std::cout << std::left << std::setw(28) << "claim" << std::setw(10) << "verdict"
            << std::setw(26) << "margin" << std::setw(10) << "boxes" << std::setw(9)
            << "time(s)"
            << "\n";
  for (const auto& r : records) {
    std::ostringstream margin;
    if (!r.margin.is_empty() && r.margin.lo != 0.0 && r.margin.hi != 0.0)
      margin << std::setprecision(6) << "[" << r.margin.lo << ", " << r.margin.hi << "]";
    else
      margin << cheb::to_string(r.margin);
    std::cout << std::left << std::setw(28) << r.claim << std::setw(10)
              << cheb::to_string(r.verdict) << std::setw(26) << margin.str() << std::setw(10)
              << r.boxes_explored << std::setw(9) << std::setprecision(3) << r.seconds
              << (r.informational ? " (informational)" : "") << "\n";
    if (!r.note.empty()) std::cout << "    note: " << r.note << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified recomputation of the least-prime-ideal constant chain"};
  app.require_subcommand(1);

  CommonOpts copt;

  auto* cmd_derive = app.add_subcommand("derive", "evaluate every constant and adjudicate");
  add_common(cmd_derive, copt);

  auto* cmd_ineq = app.add_subcommand("ineq", "run inequality / feasibility checks");
  add_common(cmd_ineq, copt);
  std::string selector = "all";
  cmd_ineq->add_option("selector", selector,
                       "all|Q|G0|monotone|piecewise|lemma84|lemma86|zfr|cor75");

  auto* cmd_dag = app.add_subcommand("dag", "export the dependency graph as DOT");
  add_common(cmd_dag, copt);

  auto* cmd_sandbox = app.add_subcommand("sandbox", "exact sieve checks and demonstrations");
  add_common(cmd_sandbox, copt);
  std::string sub;
  uint64_t x_max = 1000000;
  uint64_t q_mod = 4;
  std::vector<uint64_t> xs{101, 1000};
  cmd_sandbox->add_option("what", sub, "pi|S|tail|ap")->required();
  cmd_sandbox->add_option("--xmax", x_max, "sieve limit (<= 1e8)");
  cmd_sandbox->add_option("--x", xs, "sample points for the tail check")->take_all();
  cmd_sandbox->add_option("--q", q_mod, "modulus for the progression demo (<= 1e4)");

  auto* cmd_opt = app.add_subcommand("optimize", "parameter sweeps and refinement");
  add_common(cmd_opt, copt);
  std::string spec_path;
  std::string refine_obj;
  int refine_iters = 3;
  cmd_opt->add_option("spec", spec_path, "JSON sweep specification");
  cmd_opt->add_option("--refine", refine_obj, "objective to refine from the seed");
  cmd_opt->add_option("--iters", refine_iters, "refinement iterations");

  CLI11_PARSE(app, argc, argv);

  try {
    if (copt.threads > 0) omp_set_num_threads(copt.threads);

    if (cmd_derive->parsed()) {
      cheb::ParamSet params = load_params(copt);
      auto t0 = std::chrono::steady_clock::now();
      cheb::ConstantGraph g = cheb::ConstantGraph::derive_all(params, derive_opts(copt));
      double t_derive = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      cheb::Certificate cert = cheb::Certificate::assemble(g, {});
      cert.timings["derive"] = t_derive;
      cert.threads_used = copt.threads > 0 ? copt.threads : omp_get_max_threads();
      std::string path = copt.out.empty() ? "certificate.json" : copt.out;
      cert.write_atomic(path);
      int bad = g.count_status(cheb::NodeStatus::CONTRADICTS) +
                g.count_status(cheb::NodeStatus::UNEVALUATED);
      int shaky = g.count_status(cheb::NodeStatus::INCONCLUSIVE);
      std::cout << "nodes: " << g.nodes().size() << "  confirmed: "
                << g.count_status(cheb::NodeStatus::CONFIRMS) +
                       g.count_status(cheb::NodeStatus::TIGHTER)
                << "  contradicts/unevaluated: " << bad << "  inconclusive: " << shaky
                << "\n";
      std::cout << "A_1 = " << cheb::to_string(g.value("A_1")) << "\n";
      std::cout << "certificate: " << path << " (digest " << cert.digest() << ")\n";
      return bad > 0 ? 1 : (shaky > 0 ? 3 : 0);
    }

    if (cmd_ineq->parsed()) {
      cheb::ParamSet params = load_params(copt);
      cheb::ConstantGraph g = cheb::ConstantGraph::derive_all(params, derive_opts(copt));
      cheb::BnbOptions b;
      b.max_depth = copt.bnb_depth;
      b.threads = copt.threads;
      auto records = cheb::run_claims(selector, params, g, b);
      print_verdicts(records);
      if (!copt.out.empty()) {
        cheb::Certificate cert = cheb::Certificate::assemble(g, records);
        cert.threads_used = copt.threads > 0 ? copt.threads : omp_get_max_threads();
        cert.write_atomic(copt.out);
      }
      return exit_code_from(records);
    }

    if (cmd_dag->parsed()) {
      cheb::ParamSet params = load_params(copt);
      cheb::ConstantGraph g = cheb::ConstantGraph::derive_all(params, derive_opts(copt));
      std::string path = copt.out.empty() ? "constants.dot" : copt.out;
      std::ofstream out(path, std::ios::trunc);
      out << cheb::dot_export(g);
      std::cout << "wrote " << path << "\n";
      return 0;
    }

    if (cmd_sandbox->parsed()) {
      if (sub == "pi") {
        cheb::SandboxResult r = cheb::check_pi_bound(x_max, copt.threads);
        std::cout << "pi(" << x_max << ") = " << r.pi_value << "  bound holds: "
                  << (r.pass ? "yes" : "NO") << "\n";
        return r.pass ? 0 : 1;
      }
      if (sub == "S") {
        cheb::SandboxResult r = cheb::check_prime_power_bound(x_max);
        std::cout << "S(" << x_max << ") = " << r.s_value << "  bound holds: "
                  << (r.pass ? "yes" : "NO") << "\n";
        return r.pass ? 0 : 1;
      }
      if (sub == "tail") {
        cheb::SandboxResult r = cheb::check_tail_sum(xs);
        for (const auto& n : r.notes) std::cout << n << "\n";
        return r.pass ? 0 : 1;
      }
      if (sub == "ap") {
        cheb::ApResult r = cheb::least_prime_progressions(q_mod);
        std::cout << "q = " << r.q << "  disc = " << r.discriminant
                  << "  log disc = " << r.log_discriminant << "\n";
        double worst = 0.0;
        for (const auto& row : r.rows) {
          std::cout << "  a = " << std::setw(5) << row.residue << "  p = " << std::setw(9)
                    << row.least_prime << "  log p / log d = " << std::setprecision(4)
                    << row.ratio << "\n";
          worst = std::max(worst, row.ratio);
        }
        std::cout << "max ratio " << worst << " (proved exponent: 12577)\n";
        return 0;
      }
      std::cerr << "unknown sandbox check: " << sub << "\n";
      return 2;
    }

    if (cmd_opt->parsed()) {
      cheb::ParamSet params = load_params(copt);
      if (!refine_obj.empty()) {
        cheb::RefineResult r =
            cheb::refine(params, cheb::objective_from_string(refine_obj), refine_iters);
        std::cout << "objective " << refine_obj << " -> " << cheb::to_string(r.objective)
                  << (r.improved ? " (improved)" : " (seed kept)") << "\n";
        for (const auto& [k, v] : r.best.as_map()) std::cout << "  " << k << " = " << v << "\n";
        return 0;
      }
      if (spec_path.empty()) {
        std::cerr << "optimize: need a sweep spec or --refine\n";
        return 2;
      }
      cheb::SweepSpec spec = cheb::SweepSpec::from_json_file(spec_path);
      cheb::SweepResult r = cheb::sweep(spec, params, copt.threads);
      std::string path = copt.out.empty() ? "sweep.csv" : copt.out;
      std::ofstream out(path, std::ios::trunc);
      out << r.to_csv();
      std::cout << "wrote " << path << " (" << r.rows.size() << " rows)";
      if (r.best.has_value()) std::cout << ", best row " << *r.best;
      std::cout << "\n";
      return 0;
    }
  } catch (const cheb::ParseError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const cheb::RangeError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}

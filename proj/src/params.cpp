#include "chebcert/params.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "chebcert/errors.hpp"

namespace cheb {

void ParamSet::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw RangeError(std::string("parameter invariant violated: ") + what);
  };
  require(b_zfr >= 4.0, "b_zfr >= 4");
  require(c_check > 12.0, "c_check > 12");
  require(sigma_density_long > 1.0, "sigma_density_long > 1");
  require(sigma_density_short > 1.0, "sigma_density_short > 1");
  require(sigma0_dh > 1.0, "sigma0_dh > 1");
  require(sigma0_dh_imq > 1.0, "sigma0_dh_imq > 1");
  require(sigma0_dh_ntz > 1.0, "sigma0_dh_ntz > 1");
  require(delta_zfr >= 0.0 && delta_zfr <= 1.0, "delta_zfr in [0,1]");
  require(eta_zfr >= 0.0 && eta_zfr <= 1.0, "eta_zfr in [0,1]");
  require(delta_dh >= 0.0 && delta_dh <= 1.0, "delta_dh in [0,1]");
  require(eta_dh >= 0.0 && eta_dh <= 1.0, "eta_dh in [0,1]");
  require(q_shape_a > 0.0, "q_shape_a > 0");
  require(c16 > 0.0, "c16 > 0");
  require(c23 > 0.0, "c23 > 0");
}

bool ParamSet::is_paper_default() const {
  const ParamSet def;
  auto same = [](double a, double b) { return a == b; };
  return same(sigma_density_long, def.sigma_density_long) &&
         same(sigma_density_short, def.sigma_density_short) &&
         same(q_shape_a, def.q_shape_a) && same(b_zfr, def.b_zfr) &&
         same(delta_zfr, def.delta_zfr) && same(eta_zfr, def.eta_zfr) &&
         same(c_check, def.c_check) && same(sigma0_dh, def.sigma0_dh) &&
         same(sigma0_dh_imq, def.sigma0_dh_imq) && same(sigma0_dh_ntz, def.sigma0_dh_ntz) &&
         same(delta_dh, def.delta_dh) && same(eta_dh, def.eta_dh);
}

std::map<std::string, double> ParamSet::as_map() const {
  return {{"sigma_density_long", sigma_density_long},
          {"sigma_density_short", sigma_density_short},
          {"q_shape_a", q_shape_a},
          {"b_zfr", b_zfr},
          {"delta_zfr", delta_zfr},
          {"eta_zfr", eta_zfr},
          {"c_check", c_check},
          {"sigma0_dh", sigma0_dh},
          {"sigma0_dh_imq", sigma0_dh_imq},
          {"sigma0_dh_ntz", sigma0_dh_ntz},
          {"delta_dh", delta_dh},
          {"eta_dh", eta_dh},
          {"c16", c16},
          {"c23", c23}};
}

ParamSet ParamSet::from_map(const std::map<std::string, double>& kv) {
  ParamSet p;
  for (const auto& [k, v] : kv) {
    if (k == "sigma_density_long") p.sigma_density_long = v;
    else if (k == "sigma_density_short") p.sigma_density_short = v;
    else if (k == "q_shape_a") p.q_shape_a = v;
    else if (k == "b_zfr") p.b_zfr = v;
    else if (k == "delta_zfr") p.delta_zfr = v;
    else if (k == "eta_zfr") p.eta_zfr = v;
    else if (k == "c_check") p.c_check = v;
    else if (k == "sigma0_dh") p.sigma0_dh = v;
    else if (k == "sigma0_dh_imq") p.sigma0_dh_imq = v;
    else if (k == "sigma0_dh_ntz") p.sigma0_dh_ntz = v;
    else if (k == "delta_dh") p.delta_dh = v;
    else if (k == "eta_dh") p.eta_dh = v;
    else if (k == "c16") p.c16 = v;
    else if (k == "c23") p.c23 = v;
    else throw ParseError("unknown parameter: " + k);
  }
  return p;
}

ParamSet ParamSet::load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file: " + path);
  std::map<std::string, double> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // trim
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    size_t e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("config line " + std::to_string(lineno) + ": expected KEY=VALUE");
    std::string key = line.substr(0, eq);
    std::string val = line.substr(eq + 1);
    auto trim = [](std::string& s) {
      size_t b2 = s.find_first_not_of(" \t");
      size_t e2 = s.find_last_not_of(" \t");
      s = (b2 == std::string::npos) ? "" : s.substr(b2, e2 - b2 + 1);
    };
    trim(key);
    trim(val);
    try {
      size_t used = 0;
      double d = std::stod(val, &used);
      if (used != val.size()) throw std::invalid_argument(val);
      kv[key] = d;
    } catch (const std::exception&) {
      throw ParseError("config line " + std::to_string(lineno) + ": bad number '" + val + "'");
    }
  }
  return from_map(kv);
}

}  // namespace cheb

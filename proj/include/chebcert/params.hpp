#pragma once

#include <map>
#include <string>
#include <vector>

namespace cheb {

// Free parameters of the constant chain, defaulted to the published choices.
// Each field is a real parameter; the derivations hold for any admissible
// value, so carrying them as doubles loses nothing.
struct ParamSet {
  double sigma_density_long = 1.7807764064044151;  // (3 + sqrt 17)/4
  double sigma_density_short = 2.45;
  double q_shape_a = 0.51;       // Q(phi) = 4 (1 + cos)(a + cos)^2
  double b_zfr = 8.7;
  double delta_zfr = 0.66;
  double eta_zfr = 0.26;
  double c_check = 24.0;         // power-sum parameter, > 12
  double sigma0_dh = 7.79;       // repulsion anchor, general field
  double sigma0_dh_imq = 12.21;  // imaginary quadratic variant
  double sigma0_dh_ntz = 5.42;   // nontrivial-zero variant
  double delta_dh = 1.0;
  double eta_dh = 1.0;
  double c16 = 3144.25;
  double c23 = 179.0;

  // Throws RangeError when an invariant fails.
  void validate() const;

  bool is_paper_default() const;

  std::map<std::string, double> as_map() const;
  static ParamSet from_map(const std::map<std::string, double>& kv);

  // KEY=VALUE lines; '#' comments allowed.
  static ParamSet load_config(const std::string& path);
};

}  // namespace cheb

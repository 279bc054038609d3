#include "chebcert/functions.hpp"

#include <mpfr.h>

#include "chebcert/decimal.hpp"
#include "chebcert/special.hpp"
#include "chebcert/vonmangoldt.hpp"

namespace cheb {

Interval DCtx::dec(const char* s) const { return decimal_to_interval(s); }

MpInterval g_min(const MpInterval& a, const MpInterval& b) {
  MpInterval r(std::max(a.prec(), b.prec()));
  mpfr_min(r.lo(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_min(r.hi(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

namespace fns {

Interval f5_powersum(const Interval& sigma0, const Interval& t0, long j, const Interval& u) {
  ComplexBox z1(sigma0 - 1.0, t0);
  ComplexBox z2(sigma0 - u, t0);
  ComplexBox inv1 = ComplexBox::point(1.0, 0.0) / pow_c(z1, 2 * j);
  ComplexBox inv2 = ComplexBox::point(1.0, 0.0) / pow_c(z2, 2 * j);
  return inv1.re - inv2.re;
}

Interval g_stechkin(const Interval& w1, const Interval& w2, const Interval& w3,
                    const Interval& v) {
  Interval kappa = 1.0 / sqrt5_i();
  Interval v2 = sq(v);
  return kappa * (w1 / (sq(w1) + v2) + w2 / (sq(w2) + v2)) - w3 / (sq(w3) + v2);
}

namespace {
const Interval& alpha9_sq() {
  static const Interval v = sq((sqrt5_i() - 1.0) / 2.0);
  return v;
}
const Interval& alpha9_inv_sq() {
  static const Interval v = sq((sqrt5_i() + 1.0) / 2.0);
  return v;
}
}  // namespace

Interval g_special_w_direct(const Interval& w) {
  Interval kappa = 1.0 / sqrt5_i();
  Interval a9 = (sqrt5_i() - 1.0) / 2.0;
  Interval a9i = (sqrt5_i() + 1.0) / 2.0;
  return kappa * (a9 / (alpha9_sq() + w) + a9i / (alpha9_inv_sq() + w)) - 1.0 / (1.0 + w);
}

Interval g_special_w_factored(const Interval& w) {
  return -w / ((alpha9_sq() + w) * (alpha9_inv_sq() + w) * (1.0 + w));
}

Interval bigF(const ComplexBox& s, const ComplexBox& z) {
  ComplexBox one_minus_conj = ComplexBox::point(1.0, 0.0) - conj(z);
  return re_recip(s - z) + re_recip(s - one_minus_conj);
}

namespace {

// g(u) = (e^{-u} - e^{-2u})/u = sum_{n>=0} (-1)^n (2^{n+1}-1) u^n / (n+1)!
// Alternating with decreasing terms on [0, 1/2]; consecutive partial sums
// bracket the true value pointwise, so their hull encloses g over the box.
Interval expm_ratio_series_real(const Interval& u) {
  Interval upow(1.0, 1.0);
  Interval fact(1.0, 1.0);  // (n+1)!
  Interval s(0.0, 0.0), s_prev(0.0, 0.0);
  double p2 = 2.0;  // 2^{n+1}
  const int N = 18;
  for (int n = 0; n <= N; ++n) {
    if (n > 0) {
      upow = upow * u;
      p2 *= 2.0;
      fact = fact * Interval::point(static_cast<double>(n + 1));
    }
    Interval term = Interval::point(p2 - 1.0) * upow / fact;
    s_prev = s;
    s = (n % 2 == 0) ? s + term : s - term;
  }
  return hull(s_prev, s);
}

}  // namespace

Interval phi6(const Interval& u) {
  if (!(u.lo >= 0.0)) throw DomainError("phi6: requires u >= 0");
  Interval g;
  if (u.hi <= 0.5) {
    g = expm_ratio_series_real(u);
  } else if (u.lo >= 0.4) {
    g = (exp_i(-u) - exp_i(-2.0 * u)) / u;
  } else {
    Interval lo_part = expm_ratio_series_real(Interval(u.lo, 0.5));
    Interval rest(0.4, u.hi);
    Interval hi_part = (exp_i(-rest) - exp_i(-2.0 * rest)) / rest;
    g = hull(lo_part, hi_part);
  }
  return 1.0 - sq(g);
}

Jet phi6_jet(const Jet& u) {
  // direct form; callers keep u away from 0
  Jet g = (exp_j(-u) - exp_j(Jet::constant(-2.0) * u)) / u;
  return Jet::constant(1.0) - sq(g);
}

Interval phi7(const Interval& u) { return 1.0 - exp_i(rational_i(-5, 2) * u); }
Jet phi7_jet(const Jet& u) {
  return Jet::constant(1.0) - exp_j(Jet::constant(rational_i(-5, 2)) * u);
}

Interval phi6_over_u(const Interval& u) {
  if (!(u.lo >= 0.0 && u.hi <= 0.5)) throw DomainError("phi6_over_u: needs u in [0, 1/2]");
  // (1 - g)/u = sum_{n>=1} (-1)^{n+1} (2^{n+1}-1) u^{n-1} / (n+1)!
  Interval upow(1.0, 1.0);
  Interval fact(2.0, 2.0);  // (n+1)! for n = 1
  Interval q(0.0, 0.0), q_prev(0.0, 0.0);
  double p2 = 4.0;  // 2^{n+1}
  const int N = 16;
  for (int n = 1; n <= N; ++n) {
    if (n > 1) {
      upow = upow * u;
      p2 *= 2.0;
      fact = fact * Interval::point(static_cast<double>(n + 1));
    }
    Interval term = Interval::point(p2 - 1.0) * upow / fact;
    q_prev = q;
    q = (n % 2 == 1) ? q + term : q - term;
  }
  Interval qq = hull(q_prev, q);
  Interval g = expm_ratio_series_real(u);
  // phi6(u)/u = (1-g)(1+g)/u = q (1+g)
  return qq * (1.0 + g);
}

Interval phi7_over_u(const Interval& u) {
  if (!(u.lo >= 0.0 && u.hi <= 0.4)) throw DomainError("phi7_over_u: needs u in [0, 2/5]");
  // (1 - e^{-5u/2})/u = sum_{n>=0} (-1)^n (5/2)^{n+1} u^n / (n+1)!
  Interval upow(1.0, 1.0);
  Interval fact(1.0, 1.0);
  Interval coef = rational_i(5, 2);
  Interval cpow = coef;
  Interval s(0.0, 0.0), s_prev(0.0, 0.0);
  const int N = 16;
  for (int n = 0; n <= N; ++n) {
    if (n > 0) {
      upow = upow * u;
      cpow = cpow * coef;
      fact = fact * Interval::point(static_cast<double>(n + 1));
    }
    Interval term = cpow * upow / fact;
    s_prev = s;
    s = (n % 2 == 0) ? s + term : s - term;
  }
  return hull(s_prev, s);
}

DensityCoeffs density_coeffs(const Interval& sigma, const Interval& f1_value) {
  DCtx c;
  Interval f0 = f0_density(c, sigma);
  Interval f2 = f2_gamma(c, sigma);
  DensityCoeffs out;
  out.a1 = 1.0 / (2.0 * f0);
  out.a2 = f2 / f0;
  out.a3 = (f1_value - log_i(pi_i()) / 2.0) / f0;
  out.a4 = (1.0 / sigma + 1.0 / (sigma - 1.0)) / f0;
  return out;
}

DhCoeffs dh_coeffs(const Interval& sigma0) {
  DCtx c;
  DhCoeffs out;
  Interval s1 = sigma0 - 1.0;
  out.a1 = 1.0 / (2.0 * s1);
  out.a2 = f2_gamma(c, sigma0) / s1;
  out.a3 = -log_i(pi_i()) / (2.0 * s1);
  out.a4 = (1.0 / sigma0 + 1.0 / s1) / s1;
  return out;
}

DhB dh_b_chain(const Interval& sigma0) {
  DhCoeffs a = dh_coeffs(sigma0);
  DhB out;
  Interval two_over_s2 = 2.0 / sq(sigma0);
  out.b17 = 2.0 * a.a1;
  out.b18 = a.a2;
  out.b19_hat = a.a2 * ln2_i() + 2.0 * a.a3;
  out.b19 = out.b19_hat + two_over_s2;
  out.b20_hat = 2.0 * a.a4;
  out.b20 = out.b20_hat - two_over_s2;
  return out;
}

Interval eps1_lemma84(const Interval& u, const Interval& c13, const Interval& c15,
                      const Interval& alpha3, const Interval& c16) {
  Interval e1 = exp_i(c16 * u);
  Interval e2 = exp_i(2.0 * c16 * u);
  return c13 / u + c15 / (e2 * u) + 2.0 * alpha3 * c16 * u / (e1 * ln3_i());
}

Interval eps2_lemma84(const Interval& u, const Interval& c7, const Interval& c15,
                      const Interval& alpha3, const Interval& c16) {
  Interval e1 = exp_i(c16 * u);
  Interval e2 = exp_i(2.0 * c16 * u);
  return sq(3.0 / c7) * (c15 / e2 + 2.0 * alpha3 * c16 * sq(u) / (ln3_i() * e1));
}

Interval eps3_lemma86(const Interval& u, const Interval& c20, const Interval& c15p,
                      const Interval& alpha4, const Interval& c23) {
  Interval e1 = exp_i(c23 * u);
  Interval e2 = exp_i(2.0 * c23 * u);
  Interval u52 = sq(u) * sqrt_i(u);
  return c20 * u / e1 + c15p * u / e2 + 2.0 * alpha4 * sqrt_i(c23) * u52 / (ln3_i() * e1);
}

Interval eps4_lemma86_shortcut(const Interval& u, const Interval& c20, const Interval& c21,
                               const Interval& c7, const Interval& c15p,
                               const Interval& alpha4, const Interval& c10,
                               const Interval& c19, const Interval& c23) {
  Interval e_gap = exp_i((c23 - c10) * u);
  Interval e_gap2 = exp_i((2.0 * c23 - c10) * u);
  Interval expo = 4.0 * c19 * c23 - 2.0;
  Interval mid = c21 * pow_i(c7, expo) * pow_i(u, -expo);
  Interval u32 = u * sqrt_i(u);
  return c20 / e_gap + mid + c15p / e_gap2 + 2.0 * alpha4 * sqrt_i(c23) * u32 / (ln3_i() * e_gap);
}

Interval eps4_lemma86_direct(const Interval& u, const Interval& one_minus_beta0,
                             const Interval& c20, const Interval& c21, const Interval& c15p,
                             const Interval& alpha4, const Interval& c19,
                             const Interval& c23) {
  Interval e1 = exp_i(c23 * u);
  Interval e2 = exp_i(2.0 * c23 * u);
  Interval expo = 2.0 * c19 * c23 - 1.0;
  Interval mid = c21 * pow_i(one_minus_beta0, expo);
  Interval u32 = u * sqrt_i(u);
  return c20 / (e1 * one_minus_beta0) + mid + c15p / (e2 * one_minus_beta0) +
         2.0 * alpha4 * sqrt_i(c23) * u32 / (ln3_i() * e1 * one_minus_beta0);
}

}  // namespace fns

namespace {

std::map<std::string, RegisteredFunction> build_registry() {
  using V = std::vector<Interval>;
  std::map<std::string, RegisteredFunction> r;
  DCtx c;
  r["f0"] = {1, [c](const V& a) { return fns::f0_density(c, a[0]); }};
  r["f1"] = {1, [](const V& a) { return neg_zeta_log_deriv(a[0], *default_lambda_table()); }};
  r["f2"] = {1, [c](const V& a) { return fns::f2_gamma(c, a[0]); }};
  r["f3"] = {1, [c](const V& a) { return fns::f3_stechkin(c, a[0]); }};
  r["f4"] = {1, [c](const V& a) { return fns::f4_stechkin(c, a[0]); }};
  r["f5"] = {4, [](const V& a) {
               return fns::f5_powersum(a[0], a[1], static_cast<long>(a[2].lo), a[3]);
             }};
  r["sigma1"] = {1, [c](const V& a) { return fns::sigma1_stechkin(c, a[0]); }};
  r["phi1"] = {1, [c](const V& a) { return fns::phi1(c, a[0]); }};
  r["phi2"] = {1, [c](const V& a) { return fns::phi2(c, a[0]); }};
  r["phi3"] = {2, [c](const V& a) { return fns::phi3(c, a[0], a[1]); }};
  r["phi4"] = {1, [c](const V& a) { return fns::phi4(c, a[0]); }};
  r["phi5"] = {2, [c](const V& a) { return fns::phi5(c, a[0], a[1]); }};
  r["phi6"] = {1, [](const V& a) { return fns::phi6(a[0]); }};
  r["phi7"] = {1, [](const V& a) { return fns::phi7(a[0]); }};
  r["G"] = {4, [](const V& a) { return fns::g_stechkin(a[0], a[1], a[2], a[3]); }};
  r["Gamma_0"] = {1, [c](const V& a) { return fns::gamma_a(c, 0.0, a[0]); }};
  r["Gamma_1"] = {1, [c](const V& a) { return fns::gamma_a(c, 1.0, a[0]); }};
  r["D"] = {2, [c](const V& a) { return fns::d_weight(c, static_cast<int>(a[0].lo), a[1]); }};
  r["v"] = {1, [](const V& a) { return v_winckler(a[0]); }};
  r["v1"] = {1, [](const V& a) { return v1_weight(a[0]); }};
  r["v2"] = {1, [](const V& a) { return v2_weight(a[0]); }};
  r["a_density_1"] = {2, [](const V& a) { return fns::density_coeffs(a[0], a[1]).a1; }};
  r["a_density_2"] = {2, [](const V& a) { return fns::density_coeffs(a[0], a[1]).a2; }};
  r["a_density_3"] = {2, [](const V& a) { return fns::density_coeffs(a[0], a[1]).a3; }};
  r["a_density_4"] = {2, [](const V& a) { return fns::density_coeffs(a[0], a[1]).a4; }};
  r["a_dh_1"] = {1, [](const V& a) { return fns::dh_coeffs(a[0]).a1; }};
  r["a_dh_2"] = {1, [](const V& a) { return fns::dh_coeffs(a[0]).a2; }};
  r["a_dh_3"] = {1, [](const V& a) { return fns::dh_coeffs(a[0]).a3; }};
  r["a_dh_4"] = {1, [](const V& a) { return fns::dh_coeffs(a[0]).a4; }};
  r["eps1"] = {5, [](const V& a) { return fns::eps1_lemma84(a[0], a[1], a[2], a[3], a[4]); }};
  r["eps2"] = {5, [](const V& a) { return fns::eps2_lemma84(a[0], a[1], a[2], a[3], a[4]); }};
  r["eps3"] = {5, [](const V& a) { return fns::eps3_lemma86(a[0], a[1], a[2], a[3], a[4]); }};
  return r;
}

}  // namespace

const std::map<std::string, RegisteredFunction>& function_registry() {
  static const std::map<std::string, RegisteredFunction> r = build_registry();
  return r;
}

Interval eval_function(const std::string& id, const std::vector<Interval>& args) {
  const auto& reg = function_registry();
  auto it = reg.find(id);
  if (it == reg.end()) throw DomainError("unknown function id: " + id);
  if (static_cast<int>(args.size()) != it->second.arity)
    throw DomainError("arity mismatch for function: " + id);
  return it->second.eval(args);
}

}  // namespace cheb

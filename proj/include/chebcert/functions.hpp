#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "chebcert/complexbox.hpp"
#include "chebcert/generic.hpp"

namespace cheb {

inline Interval g_min(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo, b.lo), std::min(a.hi, b.hi));
}
MpInterval g_min(const MpInterval& a, const MpInterval& b);

namespace fns {

// zero-counting weight: f0(s) = min terms built from s-1, s-1/2, s
template <class C>
typename C::num f0_density(const C& c, const typename C::num& s) {
  auto lorentz = [](const typename C::num& u) { return u / (g_sq(u) + 1.0); };
  auto t1 = lorentz(s - 1.0);
  auto t2 = lorentz(s - c.rat(1, 2));
  auto t3 = lorentz(s);
  return c.rat(1, 2) * g_min(t1, t2) + c.rat(1, 2) * g_min(t2, t3);
}

// archimedean-factor coefficient: f2(s) = (alpha6/2)(log(s+5)/log 2 - 1)
template <class C>
typename C::num f2_gamma(const C& c, const typename C::num& s) {
  return c.rat(27, 50) * (g_log(s + 5.0) / c.ln2() - 1.0);
}

template <class C>
typename C::num sigma1_stechkin(const C& c, const typename C::num& s) {
  return (g_sqrt(4.0 * g_sq(s) + 1.0) + 1.0) * c.rat(1, 2);
}

// f3(s) = 1/s - kappa (1/(sigma1-1) + 1/sigma1)
template <class C>
typename C::num f3_stechkin(const C& c, const typename C::num& s) {
  auto s1 = sigma1_stechkin(c, s);
  auto kappa = 1.0 / c.sqrt5();
  return 1.0 / s - kappa * (1.0 / (s1 - 1.0) + 1.0 / s1);
}

// f4(s) = ((alpha6 - kappa)/2)(log(s+5)/log 2 - 1)
template <class C>
typename C::num f4_stechkin(const C& c, const typename C::num& s) {
  auto kappa = 1.0 / c.sqrt5();
  return (c.rat(27, 25) - kappa) * c.rat(1, 2) * (g_log(s + 5.0) / c.ln2() - 1.0);
}

// Gamma_a(s) = psi((s+a)/2) - kappa psi((s1+a)/2), real s > 0
template <class C>
typename C::num gamma_a(const C& c, double a, const typename C::num& s) {
  auto s1 = sigma1_stechkin(c, s);
  auto kappa = 1.0 / c.sqrt5();
  return g_digamma((s + a) * c.rat(1, 2)) - kappa * g_digamma((s1 + a) * c.rat(1, 2));
}

// alpha12 = (kappa alpha7 - (1-kappa) log pi)/2 with alpha7 = 4/3 + log 5
template <class C>
typename C::num alpha12_const(const C& c) {
  auto kappa = 1.0 / c.sqrt5();
  auto alpha7 = c.rat(4, 3) + c.ln5();
  return (kappa * alpha7 - (1.0 - kappa) * g_log(c.pi())) * c.rat(1, 2);
}

// D(0) = (Gamma_1(1+eps) + Gamma_0(1+eps))/4 - ((1-kappa)/2) log pi
// D(m) = f4(1+eps) log m + alpha12 for m >= 1
template <class C>
typename C::num d_weight(const C& c, int m, const typename C::num& eps) {
  auto kappa = 1.0 / c.sqrt5();
  if (m == 0) {
    auto s = eps + 1.0;
    return (gamma_a(c, 1.0, s) + gamma_a(c, 0.0, s)) * c.rat(1, 4) -
           (1.0 - kappa) * c.rat(1, 2) * g_log(c.pi());
  }
  auto out = alpha12_const(c);
  if (m > 1) out = out + f4_stechkin(c, eps + 1.0) * g_log(c.lit(static_cast<double>(m)));
  return out;
}

// digamma comparison helpers (Lemma bounds around log(u+2))
template <class C>
typename C::num phi1(const C& c, const typename C::num& u) {
  return c.rat(27, 25) * g_log(u + 2.0) - g_log(u) - c.rat(1, 3);
}
template <class C>
typename C::num phi2(const C& c, const typename C::num& u) {
  // log u - 4/3 - log(u+2) + alpha7, with alpha7 = 4/3 + log 5
  return g_log(u) - g_log(u + 2.0) + c.ln5();
}

// phi3..phi5 from the archimedean comparison, sigma entering as a parameter
template <class C>
typename C::num phi4(const C& c, const typename C::num& u) {
  (void)c;
  return u + 2.0;
}
template <class C>
typename C::num phi5(const C& c, const typename C::num& sigma, const typename C::num& u) {
  return g_sqrt(g_sq(sigma + 1.0) + g_sq(u)) * c.rat(1, 2) + 2.0;
}
template <class C>
typename C::num phi3(const C& c, const typename C::num& sigma, const typename C::num& u) {
  return phi5(c, sigma, u) / phi4(c, u);
}

// Deuring-Heilbronn power-sum difference weight:
// f5(s0 + i t0, j; u) = Re[ ((s0-1) + i t0)^{-2j} - ((s0-u) + i t0)^{-2j} ]
Interval f5_powersum(const Interval& sigma0, const Interval& t0, long j, const Interval& u);

// Stechkin comparison function G(w1, w2, w3; v) and the special triple
// (alpha9, 1/alpha9, 1).
Interval g_stechkin(const Interval& w1, const Interval& w2, const Interval& w3,
                    const Interval& v);
// At the special triple, in w = v^2: direct sum form and the factored form
// -w / ((alpha9^2+w)(alpha9^{-2}+w)(1+w)); both enclose the same function,
// the factored form keeps the sign exact at w = 0 and w -> inf.
Interval g_special_w_direct(const Interval& w);
Interval g_special_w_factored(const Interval& w);

// F(s, z) = Re(1/(s-z) + 1/(s-(1-conj z)))
Interval bigF(const ComplexBox& s, const ComplexBox& z);

// exceptional-zero comparison functions of the kernel lemmas
Interval phi6(const Interval& u);
Jet phi6_jet(const Jet& u);
Interval phi7(const Interval& u);
Jet phi7_jet(const Jet& u);

// Stable enclosures of phi(u)/u near u = 0 (series-bracketed; u inside
// [0, 1/2] resp. [0, 2/5]); these carry the removable factor explicitly so
// sign claims survive at the open endpoint.
Interval phi6_over_u(const Interval& u);
Interval phi7_over_u(const Interval& u);

// zero-density coefficients a1..a4 at sigma (f1 passed in, it is series-backed)
struct DensityCoeffs {
  Interval a1, a2, a3, a4;
};
DensityCoeffs density_coeffs(const Interval& sigma, const Interval& f1_value);

// Deuring-Heilbronn a1..a4 (same letters, different formulas; keep the ids
// apart so the two families can never be confused)
struct DhCoeffs {
  Interval a1, a2, a3, a4;
};
DhCoeffs dh_coeffs(const Interval& sigma0);

struct DhB {
  Interval b17, b18, b19, b20;     // full versions
  Interval b19_hat, b20_hat;       // variant without the 2/sigma0^2 shuffle
};
DhB dh_b_chain(const Interval& sigma0);

// Feasibility error terms of the kernel-positivity lemmas, as functions of
// u = log d_L (and, for the direct route, of 1 - beta0).
Interval eps1_lemma84(const Interval& u, const Interval& c13, const Interval& c15,
                      const Interval& alpha3, const Interval& c16);
Interval eps2_lemma84(const Interval& u, const Interval& c7, const Interval& c15,
                      const Interval& alpha3, const Interval& c16);
Interval eps3_lemma86(const Interval& u, const Interval& c20, const Interval& c15p,
                      const Interval& alpha4, const Interval& c23);
Interval eps4_lemma86_shortcut(const Interval& u, const Interval& c20, const Interval& c21,
                               const Interval& c7, const Interval& c15p,
                               const Interval& alpha4, const Interval& c10,
                               const Interval& c19, const Interval& c23);
Interval eps4_lemma86_direct(const Interval& u, const Interval& one_minus_beta0,
                             const Interval& c20, const Interval& c21, const Interval& c15p,
                             const Interval& alpha4, const Interval& c19,
                             const Interval& c23);

}  // namespace fns

// String-keyed registry for the CLI and for tests that address functions by
// name. Arity is checked at call time.
struct RegisteredFunction {
  int arity;
  std::function<Interval(const std::vector<Interval>&)> eval;
};
const std::map<std::string, RegisteredFunction>& function_registry();
Interval eval_function(const std::string& id, const std::vector<Interval>& args);

}  // namespace cheb

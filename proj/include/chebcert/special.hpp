#pragma once

#include "chebcert/complexbox.hpp"
#include "chebcert/generic.hpp"
#include "chebcert/interval.hpp"
#include "chebcert/jet.hpp"
#include "chebcert/quadrature.hpp"

namespace cheb {

// Re Gamma'/Gamma over a complex box via log s - 1/(2s) with the coarse
// remainder band 1/(12 (Re s)^2). Wide but valid on the whole right half
// plane; the graph uses the tight real-axis digamma instead.
Interval digamma_re(const ComplexBox& s);

// v(t) = log(sqrt(1/4 + t^2) + 2) + 19683/812 and the two vertical-line
// weights it gets integrated against.
Interval v_winckler(const Interval& t);
Jet v_winckler(const Jet& t);
Interval v1_weight(const Interval& t);
Jet v1_weight(const Jet& t);
Interval v2_weight(const Interval& t);
Jet v2_weight(const Jet& t);

// ((1 + 101^{-3/2})/(1 - 101^{-3/2}))^2, the v1 prefactor
Interval v1_scale_const();

// Closed-form tail majorants for the half-line integrals:
//   int_T^inf v1           <= 9 C^2 / (4T)
//   int_T^inf v v1         <= (9 C^2/4) [(log T + 1 + R)/T + 1/T^2 + 1/(24 T^3)]
//   int_T^inf v2           <= e^{-cT^2}/(2cT),                     c = 10 log 10
//   int_T^inf v v2         <= e^{-cT^2} (log T + R + 41/60)/(2cT)  (T >= 3)
// with R = 19683/812.
Interval v1_tail_bound(double T);
Interval v_v1_tail_bound(double T);
Interval v2_tail_bound(double T);
Interval v_v2_tail_bound(double T);

// Kernels of the inverse-Mellin machinery.
//   k0(s; x, y) = ((y^{s-1} - x^{s-1})/(s-1))^2     (y > x > 1)
//   k1(s; x)    = k0(s; x, x^2)                     (x >= 2)
//   k2(s; x)    = x^{s^2+s}                         (x >= 2)
// k0/k1 use a series branch when the box around s-1 contains zero, so the
// removable singularity at s = 1 yields (log(y/x))^2 instead of a blowup.
ComplexBox kernel_k0(const ComplexBox& s, const Interval& x, const Interval& y);
ComplexBox kernel_k1(const ComplexBox& s, const Interval& x);
ComplexBox kernel_k2(const ComplexBox& s, const Interval& x);

// Inverse Mellin transforms. khat1 is supported on [x^2, x^4]:
//   u^{-1} log(u/x^2) on [x^2, x^3],  u^{-1} log(x^4/u) on [x^3, x^4].
// khat2 is the lognormal-type bump (4 pi log x)^{-1/2} exp(-log(u/x)^2 / (4 log x)).
Interval khat1(const Interval& u, const Interval& x);
Interval khat2(const Interval& u, const Interval& x);

enum class Kernel { K1, K2 };

struct MellinCheck {
  Interval forward;    // rigorous integral of khat(u) u^{s-1} du
  ComplexBox kernel;   // direct kernel value at s
  bool intersects;     // forward meets Re(kernel) (Im is zero for real s)
  double gap;          // distance between the enclosures when disjoint
};

// Rigorously integrates the inverse transform against u^{s-1} and compares
// with the direct kernel value at real s.
MellinCheck mellin_roundtrip_check(Kernel which, double s, const Interval& x, double tol);

}  // namespace cheb

#include "chebcert/special.hpp"

#include <mpfr.h>

#include <cmath>

namespace cheb {

// ---- real digamma / trigamma ----------------------------------------------

Interval digamma_real(const Interval& x) {
  if (x.is_empty()) return x;
  if (!(x.lo > 0.0)) throw DomainError("digamma_real: argument must be positive");
  // increasing on (0, inf); MPFR digamma is correctly rounded
  thread_local struct {
    mpfr_t a, r;
    bool init = false;
  } s;
  if (!s.init) {
    mpfr_init2(s.a, 96);
    mpfr_init2(s.r, 96);
    s.init = true;
  }
  mpfr_set_d(s.a, x.lo, MPFR_RNDN);
  mpfr_digamma(s.r, s.a, MPFR_RNDD);
  double lo = mpfr_get_d(s.r, MPFR_RNDD);
  mpfr_set_d(s.a, x.hi, MPFR_RNDN);
  mpfr_digamma(s.r, s.a, MPFR_RNDU);
  double hi = mpfr_get_d(s.r, MPFR_RNDU);
  return Interval(lo, hi);
}

namespace {

// trigamma at a point with directed rounding: shift to y >= 24, then the
// Stirling tail 1/y + 1/(2y^2) + 1/(6y^3) - 1/(30y^5) + 1/(42y^7) - 1/(30y^9),
// whose remainder lies between 0 and the next term 5/(66 y^11).
double trigamma_point(double x, mpfr_rnd_t r) {
  mpfr_t y, acc, t, ypow;
  mpfr_init2(y, 128);
  mpfr_init2(acc, 128);
  mpfr_init2(t, 128);
  mpfr_init2(ypow, 128);
  mpfr_set_d(y, x, MPFR_RNDN);
  mpfr_set_zero(acc, 1);
  // recurrence: psi'(x) = 1/x^2 + psi'(x+1)
  while (mpfr_cmp_ui(y, 24) < 0) {
    mpfr_sqr(t, y, r == MPFR_RNDU ? MPFR_RNDD : MPFR_RNDU);  // denominator opposite
    mpfr_ui_div(t, 1, t, r);
    mpfr_add(acc, acc, t, r);
    mpfr_add_ui(y, y, 1, MPFR_RNDN);  // integer step, exact
  }
  auto add_term = [&](long num, long den, long pow, mpfr_rnd_t rr) {
    // num/(den * y^pow)
    mpfr_rnd_t ro = rr == MPFR_RNDU ? MPFR_RNDD : MPFR_RNDU;
    mpfr_pow_ui(ypow, y, static_cast<unsigned long>(pow), num > 0 ? ro : rr);
    mpfr_mul_si(t, ypow, den, num > 0 ? ro : rr);
    mpfr_si_div(t, num, t, rr);
    mpfr_add(acc, acc, t, rr);
  };
  add_term(1, 1, 1, r);
  add_term(1, 2, 2, r);
  add_term(1, 6, 3, r);
  add_term(-1, 30, 5, r);
  add_term(1, 42, 7, r);
  add_term(-1, 30, 9, r);
  if (r == MPFR_RNDU) add_term(5, 66, 11, r);  // remainder in [0, next term]
  double out = mpfr_get_d(acc, r);
  mpfr_clears(y, acc, t, ypow, static_cast<mpfr_ptr>(nullptr));
  return out;
}

}  // namespace

Interval trigamma_real(const Interval& x) {
  if (x.is_empty()) return x;
  if (!(x.lo > 0.0)) throw DomainError("trigamma_real: argument must be positive");
  // decreasing on (0, inf)
  return Interval(trigamma_point(x.hi, MPFR_RNDD), trigamma_point(x.lo, MPFR_RNDU));
}

// ---- complex digamma band ---------------------------------------------------

Interval digamma_re(const ComplexBox& s) {
  if (!(s.re.lo > 0.0)) throw DomainError("digamma_re: requires Re s > 0");
  Interval a2 = abs2(s);
  Interval main = 0.5 * log_i(a2) - s.re / (2.0 * a2);
  Interval band = 1.0 / (12.0 * sq(s.re));
  return main + Interval(-band.hi, band.hi);
}

// ---- vertical-line weights --------------------------------------------------

Interval v_winckler(const Interval& t) {
  return log_i(sqrt_i(sq(t) + rational_i(1, 4)) + 2.0) + rational_i(19683, 812);
}
Jet v_winckler(const Jet& t) {
  return log_j(sqrt_j(sq(t) + Jet::constant(rational_i(1, 4))) + 2.0) +
         Jet::constant(rational_i(19683, 812));
}

namespace {
Interval v1_scale() {
  // ((1 + 101^{-3/2}) / (1 - 101^{-3/2}))^2
  static const Interval v = [] {
    Interval r = 1.0 / pow_i(sqrt_i(Interval::point(101.0)), 3);
    return sq((1.0 + r) / (1.0 - r));
  }();
  return v;
}
}  // namespace

Interval v1_weight(const Interval& t) { return v1_scale() * (9.0 / (9.0 + 4.0 * sq(t))); }
Jet v1_weight(const Jet& t) {
  Jet denom = 4.0 * sq(t) + 9.0;
  return Jet::constant(v1_scale()) * (Jet::constant(9.0) / denom);
}

Interval v2_weight(const Interval& t) {
  return exp_i(-10.0 * ln10_i() * sq(t));
}
Jet v2_weight(const Jet& t) {
  return exp_j(Jet::constant(-10.0 * ln10_i()) * sq(t));
}

Interval v1_scale_const() { return v1_scale(); }

Interval v1_tail_bound(double T) {
  Interval Ti = Interval::point(T);
  return rational_i(9, 4) * v1_scale() / Ti;
}

Interval v_v1_tail_bound(double T) {
  if (!(T >= 3.0)) throw DomainError("v_v1_tail_bound: needs T >= 3");
  Interval Ti = Interval::point(T);
  Interval R = rational_i(19683, 812);
  Interval main = (log_i(Ti) + 1.0 + R) / Ti + 1.0 / sq(Ti) + 1.0 / (24.0 * pow_i(Ti, 3));
  return rational_i(9, 4) * v1_scale() * main;
}

Interval v2_tail_bound(double T) {
  Interval Ti = Interval::point(T);
  Interval c = 10.0 * ln10_i();
  return exp_i(-c * sq(Ti)) / (2.0 * c * Ti);
}

Interval v_v2_tail_bound(double T) {
  if (!(T >= 3.0)) throw DomainError("v_v2_tail_bound: needs T >= 3");
  Interval Ti = Interval::point(T);
  Interval c = 10.0 * ln10_i();
  Interval R = rational_i(19683, 812);
  return exp_i(-c * sq(Ti)) * (log_i(Ti) + R + rational_i(41, 60)) / (2.0 * c * Ti);
}

// ---- kernels ----------------------------------------------------------------

namespace {

// (y^d - x^d)/d as an entire function of d, evaluated by the exponential
// series with a rigorous geometric remainder; used when the box d contains 0.
ComplexBox expm_ratio_series(const ComplexBox& d, const Interval& ly, const Interval& lx) {
  // sum_{n>=1} d^{n-1} (ly^n - lx^n)/n!
  ComplexBox sum = ComplexBox::real(ly - lx);
  ComplexBox dpow = ComplexBox::point(1.0, 0.0);
  Interval ly_pow = ly;
  Interval lx_pow = lx;
  Interval fact(1.0, 1.0);
  Interval dmag = sqrt_i(abs2(d));
  const double M = std::max(std::fabs(ly.mag()), std::fabs(lx.mag()));
  int n = 1;
  for (;;) {
    ++n;
    dpow = dpow * d;
    ly_pow = ly_pow * ly;
    lx_pow = lx_pow * lx;
    fact = fact * static_cast<double>(n);
    ComplexBox term = (Interval::point(1.0) / fact) * (dpow * ComplexBox::real(ly_pow - lx_pow));
    sum = sum + term;
    // remainder: 2 sum_{k>n} M^k |d|^{k-1} / k! <= 2 M^{n+1} |d|^n / (n+1)! * 1/(1-q)
    double q = M * dmag.hi / (n + 2.0);
    if (q < 0.5 && n > 4) {
      Interval Mn = pow_i(Interval(0.0, M), n + 1);
      Interval rem = 2.0 * Mn * pow_i(Interval(0.0, dmag.hi), n) / (fact * (n + 1.0));
      rem = rem * (1.0 / (1.0 - q));
      double rh = rem.hi;
      if (rh < 1e-18 * (1.0 + sqrt_i(abs2(sum)).hi) || n > 60) {
        Interval pad(-rh, rh);
        return ComplexBox(sum.re + pad, sum.im + pad);
      }
    }
    if (n > 80) {
      Interval pad(-1e30, 1e30);  // should not happen for the domains used
      return ComplexBox(sum.re + pad, sum.im + pad);
    }
  }
}

}  // namespace

ComplexBox kernel_k0(const ComplexBox& s, const Interval& x, const Interval& y) {
  if (!(x.lo > 1.0) || !(y.lo > x.hi)) throw DomainError("kernel_k0: requires y > x > 1");
  ComplexBox d = s - ComplexBox::point(1.0, 0.0);
  Interval lx = log_i(x);
  Interval ly = log_i(y);
  ComplexBox ratio;
  if (abs2(d).contains(0.0)) {
    ratio = expm_ratio_series(d, ly, lx);
  } else {
    ComplexBox yp = exp_c(ComplexBox(d.re * ly, d.im * ly));
    ComplexBox xp = exp_c(ComplexBox(d.re * lx, d.im * lx));
    ratio = (yp - xp) / d;
  }
  return ratio * ratio;
}

ComplexBox kernel_k1(const ComplexBox& s, const Interval& x) {
  if (!(x.lo >= 2.0)) throw DomainError("kernel_k1: requires x >= 2");
  return kernel_k0(s, x, sq(x));
}

ComplexBox kernel_k2(const ComplexBox& s, const Interval& x) {
  if (!(x.lo >= 2.0)) throw DomainError("kernel_k2: requires x >= 2");
  ComplexBox z = s * s + s;
  return pow_c(x, z);
}

Interval khat1(const Interval& u, const Interval& x) {
  if (!(u.lo > 0.0)) throw DomainError("khat1: requires u > 0");
  if (!(x.lo >= 2.0)) throw DomainError("khat1: requires x >= 2");
  Interval x2 = pow_i(x, 2), x3 = pow_i(x, 3), x4 = pow_i(x, 4);
  Interval out = Interval::empty();
  auto clamp_nonneg = [](const Interval& v) {
    return Interval(std::max(0.0, v.lo), std::max(0.0, v.hi));
  };
  // rising branch on [x^2, x^3]
  Interval lo_seg = intersect(u, Interval(x2.lo, x3.hi));
  if (!lo_seg.is_empty()) out = hull(out, clamp_nonneg(log_i(lo_seg / x2) / lo_seg));
  // falling branch on [x^3, x^4]
  Interval hi_seg = intersect(u, Interval(x3.lo, x4.hi));
  if (!hi_seg.is_empty()) out = hull(out, clamp_nonneg(log_i(x4 / hi_seg) / hi_seg));
  // outside the support the transform vanishes
  if (u.lo < x2.hi || u.hi > x4.lo) out = hull(out, Interval(0.0, 0.0));
  return out.is_empty() ? Interval(0.0, 0.0) : out;
}

Interval khat2(const Interval& u, const Interval& x) {
  if (!(u.lo > 0.0)) throw DomainError("khat2: requires u > 0");
  if (!(x.lo >= 2.0)) throw DomainError("khat2: requires x >= 2");
  Interval lx = log_i(x);
  Interval z = sq(log_i(u / x)) / (4.0 * lx);
  return exp_i(-z) / sqrt_i(4.0 * pi_i() * lx);
}

MellinCheck mellin_roundtrip_check(Kernel which, double s, const Interval& x, double tol) {
  MellinCheck out;
  QuadOptions q;
  q.tol = tol;
  const Interval si = Interval::point(s);
  if (which == Kernel::K1) {
    // compact support [x^2, x^4]
    double a = pow_i(x, 2).lo, b = pow_i(x, 4).hi;
    Integrand f;
    f.f = [x, si](const Interval& u) {
      if (!(u.lo > 0.0)) return Interval::entire();
      return khat1(u, x) * exp_i((si - 1.0) * log_i(u));
    };
    out.forward = integrate(f, a, b, q).value;
    out.kernel = kernel_k1(ComplexBox::real(si), x);
  } else {
    // substitute u = x e^t: integral of khat2(x e^t) (x e^t)^s dt over R
    Interval lx = log_i(x);
    Integrand f;
    f.f = [x, si, lx](const Interval& t) {
      Interval u_log = log_i(x) + t;  // log u
      Interval gauss = exp_i(-sq(t) / (4.0 * lx));
      return gauss * exp_i(si * u_log) / sqrt_i(4.0 * pi_i() * lx);
    };
    // completed square: exponent -t^2/(4L) + s t + s log x peaks at t = 2 L s
    double L = lx.hi;
    double center = 2.0 * L * s;
    double spread = std::sqrt(4.0 * L * 50.0);  // e^{-50} mass cutoff
    double lo_t = center - spread, hi_t = center + spread;
    QuadResult core = integrate(f, lo_t, hi_t, q);
    // tail: (4 pi L)^{-1/2} x^s e^{s^2 L} * int_{|tau|>spread'} e^{-tau^2/(4L)}
    Interval amp = exp_i(si * lx) * exp_i(sq(si) * lx) / sqrt_i(4.0 * pi_i() * lx);
    Interval tau = Interval::point(spread);
    Interval tail_one = exp_i(-sq(tau) / (4.0 * lx)) * (2.0 * lx) / tau;
    Interval tail = 2.0 * amp * tail_one;
    out.forward = core.value + Interval(0.0, tail.hi);
    out.kernel = kernel_k2(ComplexBox::real(si), x);
  }
  Interval kr = out.kernel.re;
  out.intersects = out.forward.intersects(kr);
  out.gap = out.intersects ? 0.0
                           : std::max(kr.lo - out.forward.hi, out.forward.lo - kr.hi);
  return out;
}

}  // namespace cheb

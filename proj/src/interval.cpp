#include "chebcert/interval.hpp"

#include <mpfr.h>

#include <cmath>
#include <sstream>

namespace cheb {

namespace {

constexpr mpfr_prec_t kWorkPrec = 96;

// Per-thread scratch registers so elementary calls do not allocate.
struct Scratch {
  mpfr_t a, r;
  Scratch() {
    mpfr_init2(a, kWorkPrec);
    mpfr_init2(r, kWorkPrec);
  }
  ~Scratch() {
    mpfr_clear(a);
    mpfr_clear(r);
  }
};
Scratch& scratch() {
  thread_local Scratch s;
  return s;
}

using Fn1 = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

double dir1(double x, Fn1 f, mpfr_rnd_t r) {
  Scratch& s = scratch();
  mpfr_set_d(s.a, x, MPFR_RNDN);  // exact
  f(s.r, s.a, r);
  return mpfr_get_d(s.r, r);
}

double nearest1(double x, Fn1 f) {
  Scratch& s = scratch();
  mpfr_set_d(s.a, x, MPFR_RNDN);
  f(s.r, s.a, MPFR_RNDN);
  return mpfr_get_d(s.r, MPFR_RNDN);
}

Interval monotone_inc(const Interval& x, Fn1 f) {
  if (x.is_empty()) return x;
  return Interval(dir1(x.lo, f, MPFR_RNDD), dir1(x.hi, f, MPFR_RNDU));
}

Interval const_from(int (*f)(mpfr_ptr, mpfr_rnd_t)) {
  mpfr_t t;
  mpfr_init2(t, 128);
  f(t, MPFR_RNDD);
  double lo = mpfr_get_d(t, MPFR_RNDD);
  f(t, MPFR_RNDU);
  double hi = mpfr_get_d(t, MPFR_RNDU);
  mpfr_clear(t);
  return Interval(lo, hi);
}

Interval log_of_ulong(unsigned long n) {
  mpfr_t t;
  mpfr_init2(t, 128);
  mpfr_set_ui(t, n, MPFR_RNDN);
  mpfr_log(t, t, MPFR_RNDD);
  double lo = mpfr_get_d(t, MPFR_RNDD);
  mpfr_set_ui(t, n, MPFR_RNDN);
  mpfr_log(t, t, MPFR_RNDU);
  double hi = mpfr_get_d(t, MPFR_RNDU);
  mpfr_clear(t);
  return Interval(lo, hi);
}

Interval sqrt_of_ulong(unsigned long n) {
  mpfr_t t;
  mpfr_init2(t, 128);
  mpfr_sqrt_ui(t, n, MPFR_RNDD);
  double lo = mpfr_get_d(t, MPFR_RNDD);
  mpfr_sqrt_ui(t, n, MPFR_RNDU);
  double hi = mpfr_get_d(t, MPFR_RNDU);
  mpfr_clear(t);
  return Interval(lo, hi);
}

}  // namespace

Interval exp_i(const Interval& a) { return monotone_inc(a, mpfr_exp); }

Interval log_i(const Interval& a) {
  if (a.is_empty()) return a;
  if (!(a.lo > 0.0)) throw DomainError("log: interval touches zero or negative axis");
  return monotone_inc(a, mpfr_log);
}

Interval sqrt_i(const Interval& a) {
  if (a.is_empty()) return a;
  if (a.lo < 0.0) throw DomainError("sqrt: negative part of argument");
  return monotone_inc(a, mpfr_sqrt);
}

Interval atan_i(const Interval& a) { return monotone_inc(a, mpfr_atan); }

Interval abs_i(const Interval& a) {
  if (a.is_empty()) return a;
  if (a.lo >= 0.0) return a;
  if (a.hi <= 0.0) return Interval(-a.hi, -a.lo);
  return Interval(0.0, std::max(-a.lo, a.hi));
}

namespace {
// Shared cosine core with critical-point detection via an enclosure of x/pi.
Interval cos_core(const Interval& a) {
  if (!a.is_finite() || a.width() >= 6.2831853) return Interval(-1.0, 1.0);
  double clo = dir1(a.lo, mpfr_cos, MPFR_RNDD);
  double chi_lo = dir1(a.lo, mpfr_cos, MPFR_RNDU);
  double clo2 = dir1(a.hi, mpfr_cos, MPFR_RNDD);
  double chi2 = dir1(a.hi, mpfr_cos, MPFR_RNDU);
  double lo = std::min(clo, clo2);
  double hi = std::max(chi_lo, chi2);
  // multiples of pi inside [a.lo, a.hi]? (conservative via outward division)
  Interval q = a / pi_i();
  double k0 = std::ceil(q.lo), k1 = std::floor(q.hi);
  if (k1 - k0 > 3.0 || std::fabs(k0) > 1e15 || std::fabs(k1) > 1e15)
    return Interval(-1.0, 1.0);
  for (double k = k0; k <= k1; k += 1.0) {
    if (std::fmod(k, 2.0) == 0.0)
      hi = 1.0;
    else
      lo = -1.0;
  }
  lo = std::max(lo, -1.0);
  hi = std::min(hi, 1.0);
  return Interval(lo, hi);
}
}  // namespace

Interval cos_i(const Interval& a) {
  if (a.is_empty()) return a;
  return cos_core(a);
}

Interval sin_i(const Interval& a) {
  if (a.is_empty()) return a;
  // sin(x) = cos(x - pi/2)
  return cos_core(a - pi_i() / 2.0);
}

Interval pow_i(const Interval& a, long k) {
  if (a.is_empty()) return a;
  if (k == 0) return Interval(1.0, 1.0);
  if (k < 0) return Interval(1.0, 1.0) / pow_i(a, -k);
  Interval acc(1.0, 1.0);
  Interval base = a;
  long e = k;
  // preserve the sign structure: even powers go through sq()
  if (e % 2 == 0) {
    Interval s = sq(a);
    return pow_i(s, e / 2);
  }
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = sq(base);
  }
  return acc;
}

Interval pow_i(const Interval& base, const Interval& expo) {
  return exp_i(expo * log_i(base));
}

const Interval& pi_i() {
  static const Interval v = const_from(mpfr_const_pi);
  return v;
}
const Interval& euler_e_i() {
  static const Interval v = exp_i(Interval(1.0, 1.0));
  return v;
}
const Interval& ln2_i() {
  static const Interval v = const_from(mpfr_const_log2);
  return v;
}
const Interval& ln3_i() {
  static const Interval v = log_of_ulong(3);
  return v;
}
const Interval& ln5_i() {
  static const Interval v = log_of_ulong(5);
  return v;
}
const Interval& ln10_i() {
  static const Interval v = log_of_ulong(10);
  return v;
}
const Interval& ln12_i() {
  static const Interval v = log_of_ulong(12);
  return v;
}
const Interval& sqrt5_i() {
  static const Interval v = sqrt_of_ulong(5);
  return v;
}
const Interval& sqrt17_i() {
  static const Interval v = sqrt_of_ulong(17);
  return v;
}
const Interval& sqrt_pi_i() {
  static const Interval v = []() {
    mpfr_t t;
    mpfr_init2(t, 128);
    mpfr_const_pi(t, MPFR_RNDD);
    mpfr_sqrt(t, t, MPFR_RNDD);
    double lo = mpfr_get_d(t, MPFR_RNDD);
    mpfr_const_pi(t, MPFR_RNDU);
    mpfr_sqrt(t, t, MPFR_RNDU);
    double hi = mpfr_get_d(t, MPFR_RNDU);
    mpfr_clear(t);
    return Interval(lo, hi);
  }();
  return v;
}

double exp_pt(double x) { return nearest1(x, mpfr_exp); }
double log_pt(double x) { return nearest1(x, mpfr_log); }
double cos_pt(double x) { return nearest1(x, mpfr_cos); }
double atan_pt(double x) { return nearest1(x, mpfr_atan); }

Interval rational_i(long long p, long long q) {
  Scratch& s = scratch();
  mpfr_set_si(s.a, static_cast<long>(p), MPFR_RNDN);
  mpfr_div_si(s.r, s.a, static_cast<long>(q), MPFR_RNDD);
  double lo = mpfr_get_d(s.r, MPFR_RNDD);
  mpfr_div_si(s.r, s.a, static_cast<long>(q), MPFR_RNDU);
  double hi = mpfr_get_d(s.r, MPFR_RNDU);
  return Interval(lo, hi);
}

std::string to_string(const Interval& a) {
  std::ostringstream os;
  os.precision(17);
  os << "[" << a.lo << ", " << a.hi << "]";
  return os.str();
}

}  // namespace cheb

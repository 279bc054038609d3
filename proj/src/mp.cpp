#include "chebcert/mp.hpp"

#include <algorithm>

namespace cheb {

MpInterval operator*(const MpInterval& a, const MpInterval& b) {
  mpfr_prec_t p = std::max(a.prec_, b.prec_);
  MpInterval r(p);
  mpfr_t c;
  mpfr_init2(c, p);
  bool first = true;
  auto consider = [&](mpfr_srcptr x, mpfr_srcptr y) {
    mpfr_mul(c, x, y, MPFR_RNDD);
    if (first || mpfr_cmp(c, r.lo_) < 0) mpfr_set(r.lo_, c, MPFR_RNDD);
    mpfr_mul(c, x, y, MPFR_RNDU);
    if (first || mpfr_cmp(c, r.hi_) > 0) mpfr_set(r.hi_, c, MPFR_RNDU);
    first = false;
  };
  consider(a.lo_, b.lo_);
  consider(a.lo_, b.hi_);
  consider(a.hi_, b.lo_);
  consider(a.hi_, b.hi_);
  mpfr_clear(c);
  return r;
}

MpInterval operator/(const MpInterval& a, const MpInterval& b) {
  if (b.contains_zero())
    throw DivisionByZeroInterval("mp interval division: denominator contains zero");
  mpfr_prec_t p = std::max(a.prec_, b.prec_);
  MpInterval r(p);
  mpfr_t c;
  mpfr_init2(c, p);
  bool first = true;
  auto consider = [&](mpfr_srcptr x, mpfr_srcptr y) {
    mpfr_div(c, x, y, MPFR_RNDD);
    if (first || mpfr_cmp(c, r.lo_) < 0) mpfr_set(r.lo_, c, MPFR_RNDD);
    mpfr_div(c, x, y, MPFR_RNDU);
    if (first || mpfr_cmp(c, r.hi_) > 0) mpfr_set(r.hi_, c, MPFR_RNDU);
    first = false;
  };
  consider(a.lo_, b.lo_);
  consider(a.lo_, b.hi_);
  consider(a.hi_, b.lo_);
  consider(a.hi_, b.hi_);
  mpfr_clear(c);
  return r;
}

MpInterval sq(const MpInterval& a) {
  MpInterval r = a * a;
  if (a.contains_zero() && mpfr_sgn(r.lo()) < 0) mpfr_set_zero(r.lo(), 1);
  return r;
}

namespace {
using Fn1 = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
MpInterval monotone_inc(const MpInterval& a, Fn1 f) {
  MpInterval r(a.prec());
  f(r.lo(), a.lo(), MPFR_RNDD);
  f(r.hi(), a.hi(), MPFR_RNDU);
  return r;
}
}  // namespace

MpInterval exp_i(const MpInterval& a) { return monotone_inc(a, mpfr_exp); }

MpInterval log_i(const MpInterval& a) {
  if (!(mpfr_sgn(a.lo()) > 0)) throw DomainError("mp log: interval touches zero");
  return monotone_inc(a, mpfr_log);
}

MpInterval sqrt_i(const MpInterval& a) {
  if (mpfr_sgn(a.lo()) < 0) throw DomainError("mp sqrt: negative part");
  return monotone_inc(a, mpfr_sqrt);
}

MpInterval atan_i(const MpInterval& a) { return monotone_inc(a, mpfr_atan); }

MpInterval abs_i(const MpInterval& a) {
  MpInterval r(a.prec());
  if (mpfr_sgn(a.lo()) >= 0) return a;
  if (mpfr_sgn(a.hi()) <= 0) return -a;
  mpfr_set_zero(r.lo(), 1);
  mpfr_neg(r.hi(), a.lo(), MPFR_RNDU);
  if (mpfr_cmp(a.hi(), r.hi()) > 0) mpfr_set(r.hi(), a.hi(), MPFR_RNDU);
  return r;
}

MpInterval pow_i(const MpInterval& a, long k) {
  if (k == 0) return MpInterval::point(1.0, a.prec());
  if (k < 0) return MpInterval::point(1.0, a.prec()) / pow_i(a, -k);
  if (k % 2 == 0) {
    MpInterval s = sq(a);
    if (k == 2) return s;
    return pow_i(s, k / 2);
  }
  MpInterval acc = MpInterval::point(1.0, a.prec());
  MpInterval base = a;
  long e = k;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

MpInterval pow_i(const MpInterval& base, const MpInterval& expo) {
  return exp_i(expo * log_i(base));
}

// MPFR digamma is increasing on (0, inf).
MpInterval digamma_i(const MpInterval& a) {
  if (!(mpfr_sgn(a.lo()) > 0)) throw DomainError("mp digamma: argument must be positive");
  return monotone_inc(a, mpfr_digamma);
}

MpInterval pi_mp(mpfr_prec_t prec) {
  MpInterval r(prec);
  mpfr_const_pi(r.lo(), MPFR_RNDD);
  mpfr_const_pi(r.hi(), MPFR_RNDU);
  return r;
}
MpInterval ln2_mp(mpfr_prec_t prec) {
  MpInterval r(prec);
  mpfr_const_log2(r.lo(), MPFR_RNDD);
  mpfr_const_log2(r.hi(), MPFR_RNDU);
  return r;
}
MpInterval log_ui_mp(unsigned long n, mpfr_prec_t prec) {
  MpInterval r(prec);
  mpfr_set_ui(r.lo(), n, MPFR_RNDN);
  mpfr_log(r.lo(), r.lo(), MPFR_RNDD);
  mpfr_set_ui(r.hi(), n, MPFR_RNDN);
  mpfr_log(r.hi(), r.hi(), MPFR_RNDU);
  return r;
}
MpInterval sqrt_ui_mp(unsigned long n, mpfr_prec_t prec) {
  MpInterval r(prec);
  mpfr_sqrt_ui(r.lo(), n, MPFR_RNDD);
  mpfr_sqrt_ui(r.hi(), n, MPFR_RNDU);
  return r;
}
MpInterval euler_e_mp(mpfr_prec_t prec) {
  MpInterval r(prec);
  mpfr_set_ui(r.lo(), 1, MPFR_RNDN);
  mpfr_exp(r.lo(), r.lo(), MPFR_RNDD);
  mpfr_set_ui(r.hi(), 1, MPFR_RNDN);
  mpfr_exp(r.hi(), r.hi(), MPFR_RNDU);
  return r;
}
MpInterval rational_mp(long p, long q, mpfr_prec_t prec) {
  MpInterval r(prec);
  mpfr_set_si(r.lo(), p, MPFR_RNDN);
  mpfr_div_si(r.lo(), r.lo(), q, MPFR_RNDD);
  mpfr_set_si(r.hi(), p, MPFR_RNDN);
  mpfr_div_si(r.hi(), r.hi(), q, MPFR_RNDU);
  return r;
}

double width_of(const MpInterval& a) {
  mpfr_t w;
  mpfr_init2(w, 64);
  mpfr_sub(w, a.hi(), a.lo(), MPFR_RNDU);
  double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

}  // namespace cheb

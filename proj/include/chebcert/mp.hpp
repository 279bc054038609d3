#pragma once

#include <mpfr.h>

#include <string>

#include "chebcert/errors.hpp"
#include "chebcert/interval.hpp"

namespace cheb {

// Interval with MPFR endpoints at a configurable precision. Mirrors the
// double-endpoint Interval closely enough that formula code templated on the
// interval type can run on either. Used for the automatic re-evaluation of
// nodes whose double enclosure is too wide to adjudicate.
class MpInterval {
 public:
  explicit MpInterval(mpfr_prec_t prec = 128) : prec_(prec) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }
  MpInterval(const MpInterval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  MpInterval(MpInterval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }
  MpInterval& operator=(const MpInterval& o) {
    if (this != &o) {
      set_prec(o.prec_);
      mpfr_set(lo_, o.lo_, MPFR_RNDD);
      mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
  }
  MpInterval& operator=(MpInterval&& o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
    return *this;
  }
  ~MpInterval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  static MpInterval point(double x, mpfr_prec_t prec) {
    MpInterval r(prec);
    mpfr_set_d(r.lo_, x, MPFR_RNDD);
    mpfr_set_d(r.hi_, x, MPFR_RNDU);
    return r;
  }
  static MpInterval from(const Interval& x, mpfr_prec_t prec) {
    MpInterval r(prec);
    mpfr_set_d(r.lo_, x.lo, MPFR_RNDD);
    mpfr_set_d(r.hi_, x.hi, MPFR_RNDU);
    return r;
  }

  Interval to_interval() const {
    return Interval(mpfr_get_d(lo_, MPFR_RNDD), mpfr_get_d(hi_, MPFR_RNDU));
  }

  mpfr_prec_t prec() const { return prec_; }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  mpfr_ptr lo() { return lo_; }
  mpfr_ptr hi() { return hi_; }

  bool contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
  }

  friend MpInterval operator+(const MpInterval& a, const MpInterval& b) {
    MpInterval r(std::max(a.prec_, b.prec_));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }
  friend MpInterval operator-(const MpInterval& a, const MpInterval& b) {
    MpInterval r(std::max(a.prec_, b.prec_));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
  }
  friend MpInterval operator-(const MpInterval& a) {
    MpInterval r(a.prec_);
    mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    return r;
  }
  friend MpInterval operator*(const MpInterval& a, const MpInterval& b);
  friend MpInterval operator/(const MpInterval& a, const MpInterval& b);

  friend MpInterval sq(const MpInterval& a);

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_, hi_;

  void set_prec(mpfr_prec_t p) {
    if (prec_ != p) {
      mpfr_set_prec(lo_, p);
      mpfr_set_prec(hi_, p);
      prec_ = p;
    }
  }
};

inline MpInterval operator+(const MpInterval& a, double b) {
  return a + MpInterval::point(b, a.prec());
}
inline MpInterval operator+(double a, const MpInterval& b) {
  return MpInterval::point(a, b.prec()) + b;
}
inline MpInterval operator-(const MpInterval& a, double b) {
  return a - MpInterval::point(b, a.prec());
}
inline MpInterval operator-(double a, const MpInterval& b) {
  return MpInterval::point(a, b.prec()) - b;
}
inline MpInterval operator*(const MpInterval& a, double b) {
  return a * MpInterval::point(b, a.prec());
}
inline MpInterval operator*(double a, const MpInterval& b) {
  return MpInterval::point(a, b.prec()) * b;
}
inline MpInterval operator/(const MpInterval& a, double b) {
  return a / MpInterval::point(b, a.prec());
}
inline MpInterval operator/(double a, const MpInterval& b) {
  return MpInterval::point(a, b.prec()) / b;
}

MpInterval exp_i(const MpInterval& a);
MpInterval log_i(const MpInterval& a);
MpInterval sqrt_i(const MpInterval& a);
MpInterval atan_i(const MpInterval& a);
MpInterval abs_i(const MpInterval& a);
MpInterval pow_i(const MpInterval& a, long k);
MpInterval pow_i(const MpInterval& base, const MpInterval& expo);
MpInterval digamma_i(const MpInterval& a);

MpInterval pi_mp(mpfr_prec_t prec);
MpInterval ln2_mp(mpfr_prec_t prec);
MpInterval log_ui_mp(unsigned long n, mpfr_prec_t prec);
MpInterval sqrt_ui_mp(unsigned long n, mpfr_prec_t prec);
MpInterval euler_e_mp(mpfr_prec_t prec);
MpInterval rational_mp(long p, long q, mpfr_prec_t prec);

double width_of(const MpInterval& a);

}  // namespace cheb

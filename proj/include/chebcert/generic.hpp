#pragma once

#include "chebcert/interval.hpp"
#include "chebcert/jet.hpp"
#include "chebcert/mp.hpp"

namespace cheb {

Interval digamma_real(const Interval& x);
Interval trigamma_real(const Interval& x);

// Uniformly named elementary operations so formula templates evaluate over
// plain intervals, jets, or high-precision intervals with one body.
inline Interval g_exp(const Interval& x) { return exp_i(x); }
inline Interval g_log(const Interval& x) { return log_i(x); }
inline Interval g_sqrt(const Interval& x) { return sqrt_i(x); }
inline Interval g_atan(const Interval& x) { return atan_i(x); }
inline Interval g_abs(const Interval& x) { return abs_i(x); }
inline Interval g_sq(const Interval& x) { return sq(x); }
inline Interval g_pow(const Interval& x, long k) { return pow_i(x, k); }
inline Interval g_digamma(const Interval& x) { return digamma_real(x); }

inline Jet g_exp(const Jet& x) { return exp_j(x); }
inline Jet g_log(const Jet& x) { return log_j(x); }
inline Jet g_sqrt(const Jet& x) { return sqrt_j(x); }
inline Jet g_atan(const Jet& x) { return atan_j(x); }
inline Jet g_sq(const Jet& x) { return sq(x); }
inline Jet g_pow(const Jet& x, long k) { return pow_j(x, k); }
inline Jet g_digamma(const Jet& x) {
  return Jet{digamma_real(x.v), trigamma_real(x.v) * x.d};
}

inline MpInterval g_exp(const MpInterval& x) { return exp_i(x); }
inline MpInterval g_log(const MpInterval& x) { return log_i(x); }
inline MpInterval g_sqrt(const MpInterval& x) { return sqrt_i(x); }
inline MpInterval g_atan(const MpInterval& x) { return atan_i(x); }
inline MpInterval g_abs(const MpInterval& x) { return abs_i(x); }
inline MpInterval g_sq(const MpInterval& x) { return sq(x); }
inline MpInterval g_pow(const MpInterval& x, long k) { return pow_i(x, k); }
inline MpInterval g_digamma(const MpInterval& x) { return digamma_i(x); }

// Numeric contexts: carriers for typed literals and named constants.
struct DCtx {
  using num = Interval;
  num lit(double x) const { return Interval::point(x); }
  num rat(long p, long q) const { return rational_i(p, q); }
  num dec(const char* s) const;
  num pi() const { return pi_i(); }
  num ln2() const { return ln2_i(); }
  num ln3() const { return ln3_i(); }
  num ln5() const { return ln5_i(); }
  num ln10() const { return ln10_i(); }
  num ln12() const { return ln12_i(); }
  num sqrt5() const { return sqrt5_i(); }
  num sqrt17() const { return sqrt17_i(); }
  num sqrt_pi() const { return sqrt_pi_i(); }
  num euler_e() const { return euler_e_i(); }
};

struct JCtx {
  using num = Jet;
  num lit(double x) const { return Jet::constant(x); }
  num rat(long p, long q) const { return Jet::constant(rational_i(p, q)); }
  num pi() const { return Jet::constant(pi_i()); }
  num ln2() const { return Jet::constant(ln2_i()); }
  num ln3() const { return Jet::constant(ln3_i()); }
  num ln5() const { return Jet::constant(ln5_i()); }
  num ln10() const { return Jet::constant(ln10_i()); }
  num ln12() const { return Jet::constant(ln12_i()); }
  num sqrt5() const { return Jet::constant(sqrt5_i()); }
  num sqrt17() const { return Jet::constant(sqrt17_i()); }
  num sqrt_pi() const { return Jet::constant(sqrt_pi_i()); }
  num euler_e() const { return Jet::constant(euler_e_i()); }
};

struct MpCtx {
  using num = MpInterval;
  mpfr_prec_t prec;
  explicit MpCtx(mpfr_prec_t p) : prec(p) {}
  num lit(double x) const { return MpInterval::point(x, prec); }
  num rat(long p, long q) const { return rational_mp(p, q, prec); }
  num pi() const { return pi_mp(prec); }
  num ln2() const { return ln2_mp(prec); }
  num ln3() const { return log_ui_mp(3, prec); }
  num ln5() const { return log_ui_mp(5, prec); }
  num ln10() const { return log_ui_mp(10, prec); }
  num ln12() const { return log_ui_mp(12, prec); }
  num sqrt5() const { return sqrt_ui_mp(5, prec); }
  num sqrt17() const { return sqrt_ui_mp(17, prec); }
  num sqrt_pi() const { return sqrt_i(pi_mp(prec)); }
  num euler_e() const { return euler_e_mp(prec); }
};

}  // namespace cheb

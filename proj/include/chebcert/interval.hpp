#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "chebcert/errors.hpp"

namespace cheb {

// Closed interval [lo, hi] over the extended reals. Every operation rounds
// outward, so for x in a and y in b the exact value of x op y lies in a op b.
// Exact floating-point results are detected (via fma residues) and kept
// exact; this is what lets structural zeros like 1 + cos(pi) survive as
// honest zero lower bounds.
struct Interval {
  double lo;
  double hi;

  Interval() : lo(0.0), hi(0.0) {}
  Interval(double l, double h) : lo(l), hi(h) {}

  static Interval point(double x) { return Interval(x, x); }
  static Interval entire() {
    return Interval(-std::numeric_limits<double>::infinity(),
                    std::numeric_limits<double>::infinity());
  }
  // Distinct sentinel; never produced by arithmetic on valid inputs.
  static Interval empty() {
    return Interval(std::numeric_limits<double>::quiet_NaN(),
                    std::numeric_limits<double>::quiet_NaN());
  }

  bool is_empty() const { return std::isnan(lo) || std::isnan(hi); }
  bool is_point() const { return lo == hi; }
  bool is_finite() const { return std::isfinite(lo) && std::isfinite(hi); }

  double width() const { return hi - lo; }
  double mid() const {
    if (lo == hi) return lo;
    double m = 0.5 * (lo + hi);
    if (!std::isfinite(m)) m = 0.5 * lo + 0.5 * hi;
    if (!std::isfinite(m)) m = 0.0;
    if (m < lo) m = lo;
    if (m > hi) m = hi;
    return m;
  }
  double mag() const { return std::max(std::fabs(lo), std::fabs(hi)); }

  bool contains(double x) const { return !is_empty() && lo <= x && x <= hi; }
  bool contains(const Interval& o) const {
    return !is_empty() && !o.is_empty() && lo <= o.lo && o.hi <= hi;
  }
  bool intersects(const Interval& o) const {
    return !is_empty() && !o.is_empty() && lo <= o.hi && o.lo <= hi;
  }
};

namespace rnd {
inline double down(double x) {
  return std::isfinite(x) ? std::nextafter(x, -std::numeric_limits<double>::infinity()) : x;
}
inline double up(double x) {
  return std::isfinite(x) ? std::nextafter(x, std::numeric_limits<double>::infinity()) : x;
}
}  // namespace rnd

inline Interval hull(const Interval& a, const Interval& b) {
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;
  return Interval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

inline Interval intersect(const Interval& a, const Interval& b) {
  if (a.is_empty() || b.is_empty()) return Interval::empty();
  double l = std::max(a.lo, b.lo), h = std::min(a.hi, b.hi);
  if (l > h) return Interval::empty();
  return Interval(l, h);
}

// ---- arithmetic -----------------------------------------------------------

inline Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }

namespace detail {
// x + y is exact iff both differences recover the operands (Sterbenz-style
// test; valid when z is finite).
inline double add_down(double x, double y) {
  double z = x + y;
  if (!std::isfinite(z)) return z == std::numeric_limits<double>::infinity()
                                    ? std::numeric_limits<double>::max()
                                    : z;
  if (z - x == y && z - y == x) return z;
  return rnd::down(z);
}
inline double add_up(double x, double y) {
  double z = x + y;
  if (!std::isfinite(z)) return z == -std::numeric_limits<double>::infinity()
                                    ? -std::numeric_limits<double>::max()
                                    : z;
  if (z - x == y && z - y == x) return z;
  return rnd::up(z);
}
inline double mul_down(double x, double y) {
  if (x == 0.0 || y == 0.0) return 0.0;  // 0 * inf convention for endpoints
  double z = x * y;
  if (!std::isfinite(z)) return z == std::numeric_limits<double>::infinity()
                                    ? std::numeric_limits<double>::max()
                                    : z;
  if (std::isfinite(x) && std::isfinite(y) && std::fma(x, y, -z) == 0.0) return z;
  return rnd::down(z);
}
inline double mul_up(double x, double y) {
  if (x == 0.0 || y == 0.0) return 0.0;
  double z = x * y;
  if (!std::isfinite(z)) return z == -std::numeric_limits<double>::infinity()
                                    ? -std::numeric_limits<double>::max()
                                    : z;
  if (std::isfinite(x) && std::isfinite(y) && std::fma(x, y, -z) == 0.0) return z;
  return rnd::up(z);
}
inline double div_down(double x, double y) {
  if (std::isinf(y) && std::isfinite(x)) return 0.0;
  double z = x / y;
  if (!std::isfinite(z)) return z == std::numeric_limits<double>::infinity()
                                    ? std::numeric_limits<double>::max()
                                    : z;
  if (std::isfinite(x) && std::isfinite(y) && std::fma(z, y, -x) == 0.0) return z;
  return rnd::down(z);
}
inline double div_up(double x, double y) {
  if (std::isinf(y) && std::isfinite(x)) return 0.0;
  double z = x / y;
  if (!std::isfinite(z)) return z == -std::numeric_limits<double>::infinity()
                                    ? -std::numeric_limits<double>::max()
                                    : z;
  if (std::isfinite(x) && std::isfinite(y) && std::fma(z, y, -x) == 0.0) return z;
  return rnd::up(z);
}
}  // namespace detail

inline Interval operator+(const Interval& a, const Interval& b) {
  if (a.is_empty() || b.is_empty()) return Interval::empty();
  return Interval(detail::add_down(a.lo, b.lo), detail::add_up(a.hi, b.hi));
}
inline Interval operator-(const Interval& a, const Interval& b) {
  if (a.is_empty() || b.is_empty()) return Interval::empty();
  return Interval(detail::add_down(a.lo, -b.hi), detail::add_up(a.hi, -b.lo));
}
inline Interval operator*(const Interval& a, const Interval& b) {
  if (a.is_empty() || b.is_empty()) return Interval::empty();
  double c1d = detail::mul_down(a.lo, b.lo), c1u = detail::mul_up(a.lo, b.lo);
  double c2d = detail::mul_down(a.lo, b.hi), c2u = detail::mul_up(a.lo, b.hi);
  double c3d = detail::mul_down(a.hi, b.lo), c3u = detail::mul_up(a.hi, b.lo);
  double c4d = detail::mul_down(a.hi, b.hi), c4u = detail::mul_up(a.hi, b.hi);
  return Interval(std::min(std::min(c1d, c2d), std::min(c3d, c4d)),
                  std::max(std::max(c1u, c2u), std::max(c3u, c4u)));
}
inline Interval operator/(const Interval& a, const Interval& b) {
  if (a.is_empty() || b.is_empty()) return Interval::empty();
  if (b.lo <= 0.0 && 0.0 <= b.hi)
    throw DivisionByZeroInterval("interval division: denominator contains zero");
  double c1d = detail::div_down(a.lo, b.lo), c1u = detail::div_up(a.lo, b.lo);
  double c2d = detail::div_down(a.lo, b.hi), c2u = detail::div_up(a.lo, b.hi);
  double c3d = detail::div_down(a.hi, b.lo), c3u = detail::div_up(a.hi, b.lo);
  double c4d = detail::div_down(a.hi, b.hi), c4u = detail::div_up(a.hi, b.hi);
  return Interval(std::min(std::min(c1d, c2d), std::min(c3d, c4d)),
                  std::max(std::max(c1u, c2u), std::max(c3u, c4u)));
}

inline Interval operator+(const Interval& a, double b) { return a + Interval::point(b); }
inline Interval operator+(double a, const Interval& b) { return Interval::point(a) + b; }
inline Interval operator-(const Interval& a, double b) { return a - Interval::point(b); }
inline Interval operator-(double a, const Interval& b) { return Interval::point(a) - b; }
inline Interval operator*(const Interval& a, double b) { return a * Interval::point(b); }
inline Interval operator*(double a, const Interval& b) { return Interval::point(a) * b; }
inline Interval operator/(const Interval& a, double b) { return a / Interval::point(b); }
inline Interval operator/(double a, const Interval& b) { return Interval::point(a) / b; }

// Tight square: never negative even when the argument straddles zero.
inline Interval sq(const Interval& a) {
  if (a.is_empty()) return a;
  double l = std::fabs(a.lo), h = std::fabs(a.hi);
  double mn = std::min(l, h), mx = std::max(l, h);
  double hi = detail::mul_up(mx, mx);
  if (a.lo <= 0.0 && 0.0 <= a.hi) return Interval(0.0, hi);
  return Interval(detail::mul_down(mn, mn), hi);
}

Interval abs_i(const Interval& a);
Interval pow_i(const Interval& a, long k);

// Elementary functions with directed rounding (MPFR-backed).
Interval exp_i(const Interval& a);
Interval log_i(const Interval& a);
Interval sqrt_i(const Interval& a);
Interval cos_i(const Interval& a);
Interval sin_i(const Interval& a);
Interval atan_i(const Interval& a);
Interval pow_i(const Interval& base, const Interval& expo);

// Named constants, width <= 2 ulp.
const Interval& pi_i();
const Interval& euler_e_i();
const Interval& ln2_i();
const Interval& ln3_i();
const Interval& ln5_i();
const Interval& ln10_i();
const Interval& ln12_i();
const Interval& sqrt5_i();
const Interval& sqrt17_i();
const Interval& sqrt_pi_i();

// Point evaluation of x through an elementary function, rounded to nearest,
// computed at high intermediate precision. Used by fuzz tests as the sample
// that must land inside the interval extension.
double exp_pt(double x);
double log_pt(double x);
double cos_pt(double x);
double atan_pt(double x);

// Outward-rounded enclosure of the rational p/q.
Interval rational_i(long long p, long long q);

std::string to_string(const Interval& a);

}  // namespace cheb

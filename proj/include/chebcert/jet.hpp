#pragma once

#include "chebcert/interval.hpp"

namespace cheb {

// First-order automatic differentiation over intervals: value and derivative
// enclosures evaluated together. Supplies the derivative extensions used by
// the mean-value quadrature form and the monotonicity verifier.
struct Jet {
  Interval v;  // value enclosure
  Interval d;  // derivative enclosure

  static Jet variable(const Interval& x) { return Jet{x, Interval(1.0, 1.0)}; }
  static Jet constant(const Interval& c) { return Jet{c, Interval(0.0, 0.0)}; }
  static Jet constant(double c) { return constant(Interval::point(c)); }
};

inline Jet operator+(const Jet& a, const Jet& b) { return {a.v + b.v, a.d + b.d}; }
inline Jet operator-(const Jet& a, const Jet& b) { return {a.v - b.v, a.d - b.d}; }
inline Jet operator-(const Jet& a) { return {-a.v, -a.d}; }
inline Jet operator*(const Jet& a, const Jet& b) {
  return {a.v * b.v, a.d * b.v + a.v * b.d};
}
inline Jet operator/(const Jet& a, const Jet& b) {
  Interval q = a.v / b.v;
  return {q, (a.d - q * b.d) / b.v};
}
inline Jet operator+(const Jet& a, double c) { return {a.v + c, a.d}; }
inline Jet operator+(double c, const Jet& a) { return a + c; }
inline Jet operator-(const Jet& a, double c) { return {a.v - c, a.d}; }
inline Jet operator-(double c, const Jet& a) { return {c - a.v, -a.d}; }
inline Jet operator*(const Jet& a, double c) { return {a.v * c, a.d * c}; }
inline Jet operator*(double c, const Jet& a) { return a * c; }
inline Jet operator*(const Interval& c, const Jet& a) { return {c * a.v, c * a.d}; }
inline Jet operator/(const Jet& a, const Interval& c) { return {a.v / c, a.d / c}; }
inline Jet operator/(const Jet& a, double c) { return {a.v / c, a.d / c}; }
inline Jet operator/(double c, const Jet& a) { return Jet::constant(c) / a; }

inline Jet sq(const Jet& a) { return {sq(a.v), 2.0 * a.v * a.d}; }
inline Jet exp_j(const Jet& a) {
  Interval e = exp_i(a.v);
  return {e, e * a.d};
}
inline Jet log_j(const Jet& a) { return {log_i(a.v), a.d / a.v}; }
inline Jet sqrt_j(const Jet& a) {
  Interval s = sqrt_i(a.v);
  return {s, a.d / (2.0 * s)};
}
inline Jet atan_j(const Jet& a) { return {atan_i(a.v), a.d / (1.0 + sq(a.v))}; }
inline Jet cos_j(const Jet& a) { return {cos_i(a.v), -sin_i(a.v) * a.d}; }
inline Jet pow_j(const Jet& a, long k) {
  return {pow_i(a.v, k), static_cast<double>(k) * pow_i(a.v, k - 1) * a.d};
}

}  // namespace cheb

#pragma once

#include "chebcert/interval.hpp"

namespace cheb {

// Rectangular complex enclosure. Containment law: z in box => op(z) in op(box).
struct ComplexBox {
  Interval re, im;

  ComplexBox() = default;
  ComplexBox(Interval r, Interval i) : re(r), im(i) {}
  static ComplexBox point(double r, double i) {
    return ComplexBox(Interval::point(r), Interval::point(i));
  }
  static ComplexBox real(const Interval& r) { return ComplexBox(r, Interval(0.0, 0.0)); }

  bool contains_zero() const { return re.contains(0.0) && im.contains(0.0); }
};

inline ComplexBox operator+(const ComplexBox& a, const ComplexBox& b) {
  return ComplexBox(a.re + b.re, a.im + b.im);
}
inline ComplexBox operator-(const ComplexBox& a, const ComplexBox& b) {
  return ComplexBox(a.re - b.re, a.im - b.im);
}
inline ComplexBox operator-(const ComplexBox& a) { return ComplexBox(-a.re, -a.im); }
inline ComplexBox operator*(const ComplexBox& a, const ComplexBox& b) {
  return ComplexBox(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}
inline ComplexBox operator*(const Interval& a, const ComplexBox& b) {
  return ComplexBox(a * b.re, a * b.im);
}

// |z|^2 and |z| enclosures.
inline Interval abs2(const ComplexBox& z) { return sq(z.re) + sq(z.im); }
inline Interval abs_i(const ComplexBox& z) { return sqrt_i(abs2(z)); }

inline ComplexBox conj(const ComplexBox& z) { return ComplexBox(z.re, -z.im); }

// Throws DivisionByZeroInterval when |b|^2 contains zero.
inline ComplexBox operator/(const ComplexBox& a, const ComplexBox& b) {
  Interval d = abs2(b);
  if (d.contains(0.0))
    throw DivisionByZeroInterval("complex box division: denominator box contains zero");
  ComplexBox n = a * conj(b);
  return ComplexBox(n.re / d, n.im / d);
}

inline ComplexBox exp_c(const ComplexBox& z) {
  Interval m = exp_i(z.re);
  return ComplexBox(m * cos_i(z.im), m * sin_i(z.im));
}

// x^z = exp(z log x) for a positive real interval base.
inline ComplexBox pow_c(const Interval& base, const ComplexBox& z) {
  Interval lx = log_i(base);
  return exp_c(ComplexBox(z.re * lx, z.im * lx));
}

// z^k, k >= 0, by repeated squaring.
inline ComplexBox pow_c(const ComplexBox& z, long k) {
  ComplexBox acc = ComplexBox::point(1.0, 0.0);
  ComplexBox base = z;
  long e = k;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

// Re(1/z); throws when |z|^2 contains zero.
inline Interval re_recip(const ComplexBox& z) {
  Interval d = abs2(z);
  if (d.contains(0.0)) throw DivisionByZeroInterval("re_recip: box contains zero");
  return z.re / d;
}

}  // namespace cheb

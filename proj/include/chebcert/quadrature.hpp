#pragma once

#include <functional>

#include "chebcert/interval.hpp"
#include "chebcert/jet.hpp"

namespace cheb {

// Interval extension of the integrand over a declared domain, optionally with
// a derivative extension used for the mean-value tightening.
struct Integrand {
  std::function<Interval(const Interval&)> f;
  std::function<Jet(const Jet&)> fj;  // may be empty
};

// Closed-form bound for an improper tail: integral of |f| over [threshold,
// +inf) is at most bound(threshold). `sign` restricts which side the tail can
// contribute to (+1: f >= 0 there, -1: f <= 0, 0: unknown).
struct TailMajorant {
  double threshold;
  std::function<Interval(double)> bound;
  int sign = 0;
};

struct QuadOptions {
  double tol = 1e-10;
  long max_pieces = 2000000;
  int threads = 0;  // 0: library default
};

struct QuadResult {
  Interval value;
  double achieved_width = 0.0;
  bool converged = false;  // tolerance reached; enclosure is valid either way
  long pieces = 0;
  int rounds = 0;
};

// Adaptive bisection with interval evaluation. The enclosure always contains
// the true integral; `converged` reports whether the width tolerance was met.
QuadResult integrate(const Integrand& f, double a, double b, const QuadOptions& opts);

QuadResult integrate_halfline(const Integrand& f, double a, const TailMajorant& tail,
                              const QuadOptions& opts);

// Plain recursive serial bisection, kept as the reference the parallel
// kernel is tested against.
Interval integrate_reference(const std::function<Interval(const Interval&)>& f, double a,
                             double b, double tol, int max_depth = 48);

}  // namespace cheb

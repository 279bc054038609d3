#include "chebcert/quadrature.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <vector>

namespace cheb {

namespace {

struct Piece {
  double a, b;
  Interval est;
};

Interval estimate(const Integrand& f, double a, double b) {
  const Interval X(a, b);
  const Interval len = Interval::point(b) - Interval::point(a);
  Interval plain = f.f(X) * len;
  if (f.fj) {
    // midpoint value plus symmetric derivative deviation: the odd part of
    // f'(xi)(t-m) integrates to a term bounded by width(f') len^2 / 8
    double m = X.mid();
    Interval fm = f.f(Interval::point(m));
    Jet J = f.fj(Jet::variable(X));
    Interval dev = J.d - J.d;  // symmetric [-w, w], outward
    Interval mv = fm * len + dev * sq(len) / 8.0;
    Interval tightened = intersect(plain, mv);
    if (!tightened.is_empty()) return tightened;
  }
  return plain;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  return omp_get_max_threads();
}

}  // namespace

QuadResult integrate(const Integrand& f, double a, double b, const QuadOptions& opts) {
  QuadResult out;
  if (!(a < b)) throw DomainError("integrate: requires a < b");
  const int nthreads = resolve_threads(opts.threads);

  std::vector<Piece> pieces;
  {
    // start from a few equal pieces so the first refinement round has shape
    const int n0 = 8;
    pieces.reserve(n0);
    for (int i = 0; i < n0; ++i) {
      double pa = a + (b - a) * i / n0;
      double pb = (i == n0 - 1) ? b : a + (b - a) * (i + 1) / n0;
      pieces.push_back({pa, pb, estimate(f, pa, pb)});
    }
  }

  for (int round = 0; round < 200; ++round) {
    double total_width = 0.0;
    double wmax = 0.0;
    for (const Piece& p : pieces) {
      total_width += p.est.width();
      wmax = std::max(wmax, p.est.width());
    }
    out.rounds = round;
    if (total_width <= opts.tol || static_cast<long>(pieces.size()) >= opts.max_pieces) {
      out.converged = total_width <= opts.tol;
      break;
    }
    // split every piece whose width contribution is within half of the worst
    const double cut = std::max(wmax * 0.5, opts.tol / (4.0 * pieces.size()));
    std::vector<size_t> split_idx;
    for (size_t i = 0; i < pieces.size(); ++i)
      if (pieces[i].est.width() >= cut) split_idx.push_back(i);
    if (split_idx.empty()) {
      out.converged = total_width <= opts.tol;
      break;
    }
    std::vector<Piece> next(pieces.size() + split_idx.size());
    // stable placement: walk pieces in order, expanding the split ones
    std::vector<size_t> place(pieces.size());
    {
      size_t shift = 0, k = 0;
      for (size_t i = 0; i < pieces.size(); ++i) {
        place[i] = i + shift;
        if (k < split_idx.size() && split_idx[k] == i) {
          ++shift;
          ++k;
        }
      }
    }
#pragma omp parallel for schedule(dynamic, 16) num_threads(nthreads)
    for (long ii = 0; ii < static_cast<long>(pieces.size()); ++ii) {
      const size_t i = static_cast<size_t>(ii);
      const Piece& p = pieces[i];
      const size_t at = place[i];
      const bool split =
          std::binary_search(split_idx.begin(), split_idx.end(), i) && p.b - p.a > 1e-300;
      if (split) {
        double m = 0.5 * (p.a + p.b);
        if (!(p.a < m && m < p.b)) m = std::nextafter(p.a, p.b);
        next[at] = {p.a, m, estimate(f, p.a, m)};
        next[at + 1] = {m, p.b, estimate(f, m, p.b)};
      } else {
        next[at] = p;
      }
    }
    pieces.swap(next);
  }

  Interval total(0.0, 0.0);
  for (const Piece& p : pieces) total = total + p.est;
  out.value = total;
  out.achieved_width = total.width();
  out.pieces = static_cast<long>(pieces.size());
  return out;
}

QuadResult integrate_halfline(const Integrand& f, double a, const TailMajorant& tail,
                              const QuadOptions& opts) {
  if (!(tail.threshold >= a)) throw DomainError("integrate_halfline: threshold < a");
  QuadResult core = integrate(f, a, tail.threshold, opts);
  Interval B = tail.bound(tail.threshold);
  double mag = std::max(0.0, B.hi);
  Interval tail_box;
  if (tail.sign > 0)
    tail_box = Interval(0.0, mag);
  else if (tail.sign < 0)
    tail_box = Interval(-mag, 0.0);
  else
    tail_box = Interval(-mag, mag);
  core.value = core.value + tail_box;
  core.achieved_width = core.value.width();
  return core;
}

Interval integrate_reference(const std::function<Interval(const Interval&)>& f, double a,
                             double b, double tol, int max_depth) {
  Interval est = f(Interval(a, b)) * (Interval::point(b) - Interval::point(a));
  if (est.width() <= tol || max_depth == 0) return est;
  double m = 0.5 * (a + b);
  if (!(a < m && m < b)) return est;
  return integrate_reference(f, a, m, tol / 2.0, max_depth - 1) +
         integrate_reference(f, m, b, tol / 2.0, max_depth - 1);
}

}  // namespace cheb

#include "chebcert/trigpoly.hpp"

namespace cheb {

Interval TrigPoly::eval(const Interval& phi) const {
  Interval s(0.0, 0.0);
  for (size_t m = 0; m < b.size(); ++m) {
    if (m == 0)
      s = s + b[m];
    else
      s = s + b[m] * cos_i(Interval::point(static_cast<double>(m)) * phi);
  }
  return s;
}

TrigPoly expand_Q(const Interval& a) {
  if (!(a.lo > 0.0)) throw ShapeError("expand_Q: requires a > 0");
  TrigPoly q;
  Interval a2 = sq(a);
  q.b.resize(4);
  q.b[0] = 4.0 * a2 + 4.0 * a + 2.0;
  q.b[1] = 4.0 * a2 + 8.0 * a + 3.0;
  q.b[2] = 4.0 * a + 2.0;
  q.b[3] = Interval(1.0, 1.0);
  for (const Interval& c : q.b)
    if (!(c.lo >= 0.0)) throw ShapeError("expand_Q: negative cosine coefficient");
  if (!(q.b[0].hi < q.b[1].lo)) throw ShapeError("expand_Q: needs b0 < b1");
  return q;
}

}  // namespace cheb

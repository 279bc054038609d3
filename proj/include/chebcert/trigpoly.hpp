#pragma once

#include <vector>

#include "chebcert/interval.hpp"

namespace cheb {

// Nonnegative cosine polynomial Q(phi) = sum b_m cos(m phi).
struct TrigPoly {
  std::vector<Interval> b;  // b[0] .. b[d]

  Interval q0() const {
    Interval s(0.0, 0.0);
    for (const Interval& c : b) s = s + c;
    return s;
  }
  Interval eval(const Interval& phi) const;
};

// Exact cosine-series expansion of 4 (1 + cos phi)(a + cos phi)^2 via the
// power-reduction identities cos^2 = (1 + cos 2phi)/2 and
// cos^3 = (3 cos phi + cos 3phi)/4:
//   b0 = 4a^2 + 4a + 2,  b1 = 4a^2 + 8a + 3,  b2 = 4a + 2,  b3 = 1.
// Throws ShapeError if any coefficient is not certainly nonnegative or the
// required ordering b0 < b1 fails.
TrigPoly expand_Q(const Interval& a);

}  // namespace cheb

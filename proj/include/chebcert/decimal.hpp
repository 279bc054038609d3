#pragma once

#include <optional>
#include <string>

#include "chebcert/interval.hpp"

namespace cheb {

enum class Adjudication { CONFIRMS, TIGHTER, CONTRADICTS, INCONCLUSIVE };

const char* to_string(Adjudication a);

// A printed decimal claim like "36.759", "0.34162...", "6.7934e-4" or
// "1.7700e8". A trailing "..." (or the ellipsis character) marks truncation;
// either way the claim is adjudicated with one last-digit unit of slack on
// each side, since printed values mix truncation and rounding.
struct PrintedDecimal {
  std::string text;        // as parsed, without the truncation marker
  int frac_digits = 0;     // digits after the decimal point in the mantissa
  int exponent10 = 0;      // scientific exponent, 0 for plain decimals
  bool truncated = false;  // had a trailing ellipsis

  static PrintedDecimal parse(const std::string& s);
};

// Adjudicates an enclosure against a printed decimal:
//   CONFIRMS      a inside [v - u, v + u], u = one unit in the last digit
//   TIGHTER       a strictly inside and width(a) < u / 100
//   CONTRADICTS   a disjoint from [v - u, v + u]
//   INCONCLUSIVE  anything else (enclosure too wide)
Adjudication matches_printed(const Interval& a, const std::string& printed);
Adjudication matches_printed(const Interval& a, const PrintedDecimal& p);

// Exact-rational claims. `contains`: p/q lies in a. `lower_bound`: the whole
// enclosure sits at or above p/q (the claim "this constant may be taken to be
// p/q" for bounds that only improve when decreased).
Adjudication matches_rational_contains(const Interval& a, long long p, long long q);
Adjudication matches_rational_lower_bound(const Interval& a, long long p, long long q);

// Upper-bound claims ("coefficient <= v").
Adjudication matches_upper_bound(const Interval& a, const std::string& printed);

// Outward enclosure of the decimal value itself.
Interval decimal_to_interval(const std::string& s);

// Decimal endpoint strings that never round inward: lo is printed rounded
// toward -inf, hi toward +inf, with enough digits that parsing them back
// with strtod recovers the exact double.
std::string format_lo(double lo);
std::string format_hi(double hi);
double parse_endpoint(const std::string& s);

}  // namespace cheb

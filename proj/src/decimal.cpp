#include "chebcert/decimal.hpp"

#include <mpfr.h>

#include <cctype>
#include <cstdlib>
#include <cstring>

namespace cheb {

const char* to_string(Adjudication a) {
  switch (a) {
    case Adjudication::CONFIRMS: return "CONFIRMS";
    case Adjudication::TIGHTER: return "TIGHTER";
    case Adjudication::CONTRADICTS: return "CONTRADICTS";
    case Adjudication::INCONCLUSIVE: return "INCONCLUSIVE";
  }
  return "?";
}

PrintedDecimal PrintedDecimal::parse(const std::string& input) {
  std::string s = input;
  PrintedDecimal out;
  // strip truncation markers: "...", the UTF-8 ellipsis, or a trailing dot run
  auto strip_suffix = [&](const std::string& suf) {
    if (s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0) {
      s.erase(s.size() - suf.size());
      out.truncated = true;
    }
  };
  strip_suffix("\xE2\x8B\xAF");  // U+22EF midline ellipsis
  strip_suffix("\xE2\x80\xA6");  // U+2026 ellipsis
  strip_suffix("...");
  if (s.empty()) throw ParseError("empty printed value");

  size_t epos = s.find_first_of("eE");
  std::string mant = (epos == std::string::npos) ? s : s.substr(0, epos);
  if (epos != std::string::npos) {
    const std::string es = s.substr(epos + 1);
    if (es.empty()) throw ParseError("malformed exponent in: " + input);
    char* end = nullptr;
    long v = std::strtol(es.c_str(), &end, 10);
    if (end == nullptr || *end != '\0') throw ParseError("malformed exponent in: " + input);
    out.exponent10 = static_cast<int>(v);
  }
  if (mant.empty()) throw ParseError("malformed decimal: " + input);

  size_t i = 0;
  if (mant[i] == '+' || mant[i] == '-') ++i;
  bool saw_digit = false, saw_point = false;
  int frac = 0;
  for (; i < mant.size(); ++i) {
    char c = mant[i];
    if (c == '.') {
      if (saw_point) throw ParseError("malformed decimal: " + input);
      saw_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      saw_digit = true;
      if (saw_point) ++frac;
    } else {
      throw ParseError("malformed decimal: " + input);
    }
  }
  if (!saw_digit) throw ParseError("malformed decimal: " + input);
  out.text = mant + (epos == std::string::npos ? "" : "e" + std::to_string(out.exponent10));
  out.frac_digits = frac;
  return out;
}

namespace {

struct Mpfr200 {
  mpfr_t x;
  Mpfr200() { mpfr_init2(x, 200); }
  ~Mpfr200() { mpfr_clear(x); }
};

// v and u = 10^(exponent10 - frac_digits) as 200-bit enclosures; comparisons
// against double endpoints are then exact for any double (200 bits cover the
// decimal strings used here).
void band(const PrintedDecimal& p, mpfr_ptr lo_out, mpfr_ptr hi_out, mpfr_ptr unit_out,
          mpfr_rnd_t lo_rnd, mpfr_rnd_t hi_rnd) {
  Mpfr200 v, u;
  mpfr_set_str(v.x, p.text.c_str(), 10, MPFR_RNDN);
  mpfr_set_ui(u.x, 10, MPFR_RNDN);
  mpfr_pow_si(u.x, u.x, p.exponent10 - p.frac_digits, MPFR_RNDU);
  mpfr_sub(lo_out, v.x, u.x, lo_rnd);
  mpfr_add(hi_out, v.x, u.x, hi_rnd);
  if (unit_out != nullptr) mpfr_set(unit_out, u.x, MPFR_RNDU);
}

}  // namespace

Adjudication matches_printed(const Interval& a, const PrintedDecimal& p) {
  if (a.is_empty()) return Adjudication::INCONCLUSIVE;
  Mpfr200 bl, bh, unit;
  band(p, bl.x, bh.x, unit.x, MPFR_RNDD, MPFR_RNDU);

  const bool inside = mpfr_cmp_d(bl.x, a.lo) <= 0 && mpfr_cmp_d(bh.x, a.hi) >= 0;
  const bool disjoint = mpfr_cmp_d(bh.x, a.lo) < 0 || mpfr_cmp_d(bl.x, a.hi) > 0;
  if (disjoint) return Adjudication::CONTRADICTS;
  if (inside) {
    const bool strict = mpfr_cmp_d(bl.x, a.lo) < 0 && mpfr_cmp_d(bh.x, a.hi) > 0;
    Mpfr200 w;
    mpfr_set_d(w.x, a.width(), MPFR_RNDU);
    mpfr_mul_ui(w.x, w.x, 100, MPFR_RNDU);
    if (strict && mpfr_cmp(w.x, unit.x) < 0) return Adjudication::TIGHTER;
    return Adjudication::CONFIRMS;
  }
  return Adjudication::INCONCLUSIVE;
}

Adjudication matches_printed(const Interval& a, const std::string& printed) {
  return matches_printed(a, PrintedDecimal::parse(printed));
}

Adjudication matches_rational_contains(const Interval& a, long long p, long long q) {
  if (a.is_empty()) return Adjudication::INCONCLUSIVE;
  Mpfr200 vd, vu;
  mpfr_set_si(vd.x, static_cast<long>(p), MPFR_RNDN);
  mpfr_div_si(vd.x, vd.x, static_cast<long>(q), MPFR_RNDD);
  mpfr_set_si(vu.x, static_cast<long>(p), MPFR_RNDN);
  mpfr_div_si(vu.x, vu.x, static_cast<long>(q), MPFR_RNDU);
  if (mpfr_cmp_d(vd.x, a.lo) >= 0 && mpfr_cmp_d(vu.x, a.hi) <= 0) return Adjudication::CONFIRMS;
  if (mpfr_cmp_d(vu.x, a.lo) < 0 || mpfr_cmp_d(vd.x, a.hi) > 0) return Adjudication::CONTRADICTS;
  return Adjudication::INCONCLUSIVE;
}

Adjudication matches_rational_lower_bound(const Interval& a, long long p, long long q) {
  if (a.is_empty()) return Adjudication::INCONCLUSIVE;
  Mpfr200 vu, vd;
  mpfr_set_si(vu.x, static_cast<long>(p), MPFR_RNDN);
  mpfr_div_si(vu.x, vu.x, static_cast<long>(q), MPFR_RNDU);
  mpfr_set_si(vd.x, static_cast<long>(p), MPFR_RNDN);
  mpfr_div_si(vd.x, vd.x, static_cast<long>(q), MPFR_RNDD);
  if (mpfr_cmp_d(vu.x, a.lo) <= 0) return Adjudication::CONFIRMS;
  if (mpfr_cmp_d(vd.x, a.hi) > 0) return Adjudication::CONTRADICTS;
  return Adjudication::INCONCLUSIVE;
}

Adjudication matches_upper_bound(const Interval& a, const std::string& printed) {
  if (a.is_empty()) return Adjudication::INCONCLUSIVE;
  PrintedDecimal p = PrintedDecimal::parse(printed);
  Mpfr200 v;
  mpfr_set_str(v.x, p.text.c_str(), 10, MPFR_RNDD);
  if (mpfr_cmp_d(v.x, a.hi) >= 0) return Adjudication::CONFIRMS;
  mpfr_set_str(v.x, p.text.c_str(), 10, MPFR_RNDU);
  if (mpfr_cmp_d(v.x, a.lo) < 0) return Adjudication::CONTRADICTS;
  return Adjudication::INCONCLUSIVE;
}

Interval decimal_to_interval(const std::string& s) {
  PrintedDecimal p = PrintedDecimal::parse(s);
  Mpfr200 v;
  mpfr_set_str(v.x, p.text.c_str(), 10, MPFR_RNDD);
  double lo = mpfr_get_d(v.x, MPFR_RNDD);
  mpfr_set_str(v.x, p.text.c_str(), 10, MPFR_RNDU);
  double hi = mpfr_get_d(v.x, MPFR_RNDU);
  return Interval(lo, hi);
}

namespace {
std::string format_dir(double x, mpfr_rnd_t r) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  Mpfr200 v;
  mpfr_set_d(v.x, x, MPFR_RNDN);  // exact
  char buf[64];
  mpfr_snprintf(buf, sizeof(buf), "%.20R*e", r, v.x);
  return std::string(buf);
}
}  // namespace

std::string format_lo(double lo) { return format_dir(lo, MPFR_RNDD); }
std::string format_hi(double hi) { return format_dir(hi, MPFR_RNDU); }

double parse_endpoint(const std::string& s) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  return std::strtod(s.c_str(), nullptr);
}

}  // namespace cheb

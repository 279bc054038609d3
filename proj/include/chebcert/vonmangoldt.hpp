#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "chebcert/interval.hpp"

namespace cheb {

// Prime powers up to a cutoff with cached log enclosures; backs the von
// Mangoldt series for -zeta'/zeta on the real axis. The tail bound makes the
// result correct for any cutoff; the cutoff only controls the width.
class LambdaTable {
 public:
  struct Entry {
    uint64_t n;  // prime power
    uint32_t p;  // its prime
  };

  static std::shared_ptr<const LambdaTable> build(uint64_t limit, int threads = 0);

  uint64_t limit() const { return limit_; }
  const std::vector<Entry>& entries() const { return entries_; }
  const Interval& log_n(size_t idx) const { return log_n_[idx]; }
  const Interval& log_p(size_t idx) const { return log_p_[idx]; }

 private:
  uint64_t limit_ = 0;
  std::vector<Entry> entries_;
  std::vector<Interval> log_n_;
  std::vector<Interval> log_p_;
};

// Enclosure of sum over n >= 2 of Lambda(n) n^{-sigma} = -zeta'/zeta(sigma).
// Requires sigma.lo > 1; the series part runs to the table limit and the
// remainder is enclosed by log(N) N^{-sigma} + integral of log(t) t^{-sigma}.
Interval neg_zeta_log_deriv(const Interval& sigma, const LambdaTable& table, int threads = 0);

// Serial reference implementation (identical result expected).
Interval neg_zeta_log_deriv_serial(const Interval& sigma, const LambdaTable& table);

// Default shared table (built on first use at the given limit).
std::shared_ptr<const LambdaTable> default_lambda_table(uint64_t limit = 1000000);

}  // namespace cheb

#include "chebcert/vonmangoldt.hpp"

#include <omp.h>

#include <cmath>
#include <map>
#include <mutex>

namespace cheb {

namespace {

std::vector<uint32_t> primes_up_to(uint32_t n) {
  std::vector<bool> composite(n + 1, false);
  std::vector<uint32_t> primes;
  for (uint32_t i = 2; i <= n; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      for (uint64_t j = static_cast<uint64_t>(i) * i; j <= n; j += i) composite[j] = true;
    }
  }
  return primes;
}

}  // namespace

std::shared_ptr<const LambdaTable> LambdaTable::build(uint64_t limit, int threads) {
  auto table = std::make_shared<LambdaTable>();
  table->limit_ = limit;
  auto primes = primes_up_to(static_cast<uint32_t>(limit));
  auto& entries = table->entries_;
  entries.reserve(primes.size() + 1024);
  for (uint32_t p : primes) {
    for (uint64_t q = p; q <= limit; q *= p) {
      entries.push_back({q, p});
      if (q > limit / p) break;
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.n < b.n; });

  const size_t m = entries.size();
  table->log_n_.resize(m);
  table->log_p_.resize(m);
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(static, 1024) num_threads(nthreads)
  for (long i = 0; i < static_cast<long>(m); ++i) {
    const Entry& e = entries[i];
    Interval ln_n = log_i(Interval::point(static_cast<double>(e.n)));
    table->log_n_[i] = ln_n;
    if (e.n == e.p)
      table->log_p_[i] = ln_n;
    else
      table->log_p_[i] = log_i(Interval::point(static_cast<double>(e.p)));
  }
  return table;
}

namespace {

Interval lambda_tail_bound(const Interval& sigma, double N) {
  // sum_{n>N} log(n) n^{-sigma} <= log N * N^{-sigma} + int_N^inf log t t^{-sigma} dt
  Interval Ni = Interval::point(N);
  Interval s1 = sigma - 1.0;
  Interval lnN = log_i(Ni);
  Interval integral = exp_i(-s1 * lnN) * (lnN / s1 + 1.0 / sq(s1));
  Interval first = lnN * exp_i(-sigma * lnN);
  Interval hi = integral + first;
  return Interval(0.0, hi.hi);
}

Interval sum_block(const Interval& sigma, const LambdaTable& t, size_t lo, size_t hi) {
  Interval acc(0.0, 0.0);
  for (size_t i = lo; i < hi; ++i) {
    acc = acc + t.log_p(i) * exp_i(-sigma * t.log_n(i));
  }
  return acc;
}

}  // namespace

Interval neg_zeta_log_deriv(const Interval& sigma, const LambdaTable& table, int threads) {
  if (!(sigma.lo > 1.0)) throw DomainError("neg_zeta_log_deriv: requires sigma > 1");
  const size_t m = table.entries().size();
  const size_t block = 2048;
  const size_t nblocks = (m + block - 1) / block;
  std::vector<Interval> partial(nblocks);
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
  for (long b = 0; b < static_cast<long>(nblocks); ++b) {
    size_t lo = static_cast<size_t>(b) * block;
    size_t hi = std::min(m, lo + block);
    partial[b] = sum_block(sigma, table, lo, hi);
  }
  Interval acc(0.0, 0.0);
  for (size_t b = 0; b < nblocks; ++b) acc = acc + partial[b];
  return acc + lambda_tail_bound(sigma, static_cast<double>(table.limit()));
}

Interval neg_zeta_log_deriv_serial(const Interval& sigma, const LambdaTable& table) {
  if (!(sigma.lo > 1.0)) throw DomainError("neg_zeta_log_deriv: requires sigma > 1");
  const size_t m = table.entries().size();
  const size_t block = 2048;
  Interval acc(0.0, 0.0);
  for (size_t lo = 0; lo < m; lo += block)
    acc = acc + sum_block(sigma, table, lo, std::min(m, lo + block));
  return acc + lambda_tail_bound(sigma, static_cast<double>(table.limit()));
}

std::shared_ptr<const LambdaTable> default_lambda_table(uint64_t limit) {
  static std::mutex mu;
  static std::map<uint64_t, std::shared_ptr<const LambdaTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(limit);
  if (it != cache.end()) return it->second;
  auto t = LambdaTable::build(limit);
  cache[limit] = t;
  return t;
}

}  // namespace cheb

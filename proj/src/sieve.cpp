#include "chebcert/sieve.hpp"

#include <gmpxx.h>
#include <omp.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "chebcert/errors.hpp"

namespace cheb {

std::vector<uint8_t> sieve_serial(uint64_t limit) {
  std::vector<uint8_t> is_prime(limit + 1, 1);
  if (limit >= 0) is_prime[0] = 0;
  if (limit >= 1) is_prime[1] = 0;
  for (uint64_t i = 2; i * i <= limit; ++i)
    if (is_prime[i])
      for (uint64_t j = i * i; j <= limit; j += i) is_prime[j] = 0;
  return is_prime;
}

std::vector<uint8_t> sieve_parallel(uint64_t limit, int threads) {
  const uint64_t root = static_cast<uint64_t>(std::sqrt(static_cast<double>(limit))) + 2;
  std::vector<uint8_t> base = sieve_serial(std::min(limit, root));
  std::vector<uint32_t> small_primes;
  for (uint64_t i = 2; i < base.size(); ++i)
    if (base[i]) small_primes.push_back(static_cast<uint32_t>(i));

  std::vector<uint8_t> is_prime(limit + 1, 1);
  is_prime[0] = 0;
  if (limit >= 1) is_prime[1] = 0;
  const uint64_t seg = 1 << 20;
  const uint64_t nseg = (limit + seg) / seg;
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
  for (long s = 0; s < static_cast<long>(nseg); ++s) {
    uint64_t lo = static_cast<uint64_t>(s) * seg;
    uint64_t hi = std::min(limit, lo + seg - 1);
    for (uint32_t p : small_primes) {
      uint64_t p2 = static_cast<uint64_t>(p) * p;
      if (p2 > hi) break;
      uint64_t start = std::max(p2, ((lo + p - 1) / p) * p);
      for (uint64_t j = start; j <= hi; j += p) is_prime[j] = 0;
    }
  }
  return is_prime;
}

std::vector<uint32_t> primes_up_to_list(uint32_t limit) {
  auto flags = sieve_serial(limit);
  std::vector<uint32_t> out;
  for (uint32_t i = 2; i <= limit; ++i)
    if (flags[i]) out.push_back(i);
  return out;
}

uint64_t prime_count(uint64_t x, const std::vector<uint8_t>& flags) {
  uint64_t c = 0;
  for (uint64_t i = 2; i <= x && i < flags.size(); ++i) c += flags[i];
  return c;
}

namespace {
const Interval& alpha0_i() {
  static const Interval v = rational_i(125506, 100000);
  return v;
}
}  // namespace

SandboxResult check_pi_bound(uint64_t x_max, int threads) {
  if (x_max > 100000000ULL) throw RangeError("check_pi_bound: x_max beyond desk scale 1e8");
  SandboxResult out;
  out.check = "pi_bound";
  out.x_max = x_max;
  auto flags = sieve_parallel(x_max, threads);

  // prefix counts per block, then verify blocks independently
  const uint64_t block = 1 << 16;
  const uint64_t nblk = x_max / block + 1;
  std::vector<uint64_t> block_count(nblk, 0);
  for (uint64_t b = 0; b < nblk; ++b) {
    uint64_t lo = b * block, hi = std::min(x_max, lo + block - 1);
    uint64_t c = 0;
    for (uint64_t i = std::max<uint64_t>(lo, 2); i <= hi; ++i) c += flags[i];
    block_count[b] = c;
  }
  std::vector<uint64_t> prefix(nblk, 0);
  std::partial_sum(block_count.begin(), block_count.end() - 1, prefix.begin() + 1);

  const double a0_lo = alpha0_i().lo;
  uint64_t first_fail = 0;
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(nthreads)
  {
    uint64_t local_fail = 0;
#pragma omp for schedule(dynamic)
    for (long b = 0; b < static_cast<long>(nblk); ++b) {
      uint64_t lo = static_cast<uint64_t>(b) * block;
      uint64_t hi = std::min(x_max, lo + block - 1);
      uint64_t count = prefix[b];
      for (uint64_t x = lo; x <= hi; ++x) {
        if (x >= 2) count += flags[x];
        if (x < 2) continue;
        // pi(x) < alpha0 x / log x; compare against a certified lower bound
        double lx_hi = rnd::up(std::log(static_cast<double>(x)));  // log within 1 ulp
        lx_hi = rnd::up(lx_hi);
        double bound_lo = rnd::down(rnd::down(a0_lo * static_cast<double>(x)) / lx_hi);
        if (!(static_cast<double>(count) < bound_lo)) {
          if (local_fail == 0) local_fail = x;
        }
      }
    }
#pragma omp critical
    {
      if (local_fail && (first_fail == 0 || local_fail < first_fail)) first_fail = local_fail;
    }
  }
  out.pi_value = prime_count(x_max, flags);
  out.first_failure = first_fail;
  out.pass = first_fail == 0;
  return out;
}

uint64_t prime_power_count(uint64_t x) {
  uint64_t count = 0;
  auto primes = primes_up_to_list(static_cast<uint32_t>(std::sqrt(static_cast<double>(x))) + 1);
  for (uint64_t p : primes) {
    if (p * p > x) break;
    uint64_t q = p * p;
    for (;;) {
      ++count;
      if (q > x / p) break;
      q *= p;
    }
  }
  return count;
}

SandboxResult check_prime_power_bound(uint64_t x_max) {
  if (x_max > 100000000ULL) throw RangeError("check_prime_power_bound: beyond desk scale");
  SandboxResult out;
  out.check = "prime_power_bound";
  out.x_max = x_max;
  // collect all prime powers p^h <= x_max, h >= 2
  std::vector<uint64_t> powers;
  auto primes =
      primes_up_to_list(static_cast<uint32_t>(std::sqrt(static_cast<double>(x_max))) + 1);
  for (uint64_t p : primes) {
    if (p * p > x_max) break;
    uint64_t q = p * p;
    for (;;) {
      powers.push_back(q);
      if (q > x_max / p) break;
      q *= p;
    }
  }
  std::sort(powers.begin(), powers.end());
  out.s_value = powers.size();
  // S jumps only at prime powers and the bound is increasing, so checking at
  // each jump point suffices
  const Interval coeff = 2.0 * alpha0_i() / ln2_i();
  uint64_t running = 0;
  for (uint64_t q : powers) {
    ++running;
    Interval bound = coeff * sqrt_i(Interval::point(static_cast<double>(q)));
    if (!(static_cast<double>(running) <= bound.lo)) {
      out.first_failure = q;
      out.pass = false;
      break;
    }
  }
  return out;
}

Interval tail_prime_power_partial(uint64_t x, uint64_t prime_limit) {
  auto primes = primes_up_to_list(static_cast<uint32_t>(prime_limit));
  Interval total(0.0, 0.0);
  const uint64_t x2_threshold = x * x;
  for (uint64_t p : primes) {
    int h = 2;
    unsigned __int128 ph = static_cast<unsigned __int128>(p) * p;
    while (ph < x2_threshold) {
      ph *= p;
      ++h;
    }
    Interval pi_ = Interval::point(static_cast<double>(p));
    total = total + pow_i(pi_, -static_cast<long>(h)) / (1.0 - 1.0 / pi_);
  }
  return total;
}

Interval tail_prime_power_sum(uint64_t x, uint64_t prime_limit) {
  // sum over primes p of p^{-h_p} / (1 - 1/p), h_p = max(ceil(log x^2 / log p), 2)
  auto primes = primes_up_to_list(static_cast<uint32_t>(prime_limit));
  Interval total(0.0, 0.0);
  const uint64_t x2_threshold = x * x;
  for (uint64_t p : primes) {
    // h_p: smallest h >= 2 with p^h >= x^2 (exact integer walk)
    int h = 2;
    // compute p^h overflow-safely against x^2 <= 1e12 at desk scale
    unsigned __int128 ph = static_cast<unsigned __int128>(p) * p;
    while (ph < x2_threshold) {
      ph *= p;
      ++h;
    }
    Interval pi_ = Interval::point(static_cast<double>(p));
    Interval term = pow_i(pi_, -static_cast<long>(h)) / (1.0 - 1.0 / pi_);
    total = total + term;
  }
  // tail over p > prime_limit: each h_p = 2 at worst, so bounded by
  // (P/(P-1)) * sum_{n > P} n^{-2} <= (P/(P-1)) / P
  Interval P = Interval::point(static_cast<double>(prime_limit));
  Interval tail = (P / (P - 1.0)) / P;
  return total + Interval(0.0, tail.hi);
}

SandboxResult check_tail_sum(const std::vector<uint64_t>& xs, uint64_t prime_limit) {
  SandboxResult out;
  out.check = "tail_sum";
  for (uint64_t x : xs) {
    if (x < 101) throw RangeError("check_tail_sum: bound requires x >= 101");
    if (x > prime_limit) throw RangeError("check_tail_sum: x beyond prime table");
    Interval lhs = tail_prime_power_sum(x, prime_limit);
    Interval xi = Interval::point(static_cast<double>(x));
    Interval rhs = rational_i(402, 100) * alpha0_i() / (xi * log_i(xi));
    bool ok = lhs.hi <= rhs.lo;
    out.notes.push_back("x=" + std::to_string(x) + " lhs<=" + std::to_string(lhs.hi) +
                        " rhs>=" + std::to_string(rhs.lo) + (ok ? " ok" : " FAIL"));
    if (!ok) {
      out.pass = false;
      if (out.first_failure == 0) out.first_failure = x;
    }
    out.x_max = std::max(out.x_max, x);
  }
  return out;
}

std::string cyclotomic_discriminant(uint64_t q, double* log_value) {
  if (q < 3) throw RangeError("cyclotomic_discriminant: q >= 3 required");
  // phi(q) and the distinct primes of q
  uint64_t n = q, phi = q;
  std::vector<uint64_t> ps;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      phi -= phi / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) {
    ps.push_back(n);
    phi -= phi / n;
  }
  mpz_class disc;
  mpz_ui_pow_ui(disc.get_mpz_t(), static_cast<unsigned long>(q),
                static_cast<unsigned long>(phi));
  for (uint64_t p : ps) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(phi / (p - 1)));
    mpz_divexact(disc.get_mpz_t(), disc.get_mpz_t(), den.get_mpz_t());
  }
  if (log_value != nullptr) {
    signed long exp2;
    double m = mpz_get_d_2exp(&exp2, disc.get_mpz_t());
    *log_value = std::log(m) + static_cast<double>(exp2) * std::log(2.0);
  }
  return disc.get_str();
}

ApResult least_prime_progressions(uint64_t q, uint64_t search_limit) {
  if (q < 3 || q > 10000) throw RangeError("least_prime_progressions: need 3 <= q <= 1e4");
  ApResult out;
  out.q = q;
  out.discriminant = cyclotomic_discriminant(q, &out.log_discriminant);

  std::vector<uint64_t> residues;
  for (uint64_t a = 1; a < q; ++a)
    if (std::gcd(a, q) == 1) residues.push_back(a);
  std::vector<uint64_t> least(q, 0);
  size_t found = 0;

  const uint64_t seg = 1 << 22;
  std::vector<uint32_t> base = primes_up_to_list(1 << 16);
  for (uint64_t lo = 2; lo <= search_limit && found < residues.size(); lo += seg) {
    uint64_t hi = std::min(search_limit, lo + seg - 1);
    std::vector<uint8_t> flags(hi - lo + 1, 1);
    for (uint32_t p : base) {
      uint64_t p2 = static_cast<uint64_t>(p) * p;
      if (p2 > hi) break;
      uint64_t start = std::max(p2, ((lo + p - 1) / p) * p);
      for (uint64_t j = start; j <= hi; j += p) flags[j - lo] = 0;
    }
    for (uint64_t x = lo; x <= hi; ++x) {
      if (x < 2 || !flags[x - lo]) continue;
      uint64_t r = x % q;
      if (std::gcd(r, q) != 1) continue;
      if (least[r] == 0) {
        least[r] = x;
        ++found;
        if (found == residues.size()) break;
      }
    }
  }
  if (found < residues.size())
    throw RangeError("least_prime_progressions: search limit exhausted");
  for (uint64_t a : residues) {
    ApRow row;
    row.residue = a;
    row.least_prime = least[a];
    row.ratio = std::log(static_cast<double>(least[a])) / out.log_discriminant;
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace cheb

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chebcert/interval.hpp"

namespace cheb {

// Bit sieve of Eratosthenes over [2, limit]. The parallel version works in
// segments; both produce the same flags.
std::vector<uint8_t> sieve_serial(uint64_t limit);
std::vector<uint8_t> sieve_parallel(uint64_t limit, int threads = 0);

std::vector<uint32_t> primes_up_to_list(uint32_t limit);

uint64_t prime_count(uint64_t x, const std::vector<uint8_t>& flags);

// Exact empirical checks for the classical prime bounds; all integer
// quantities exact, all bound comparisons outward-rounded.
struct SandboxResult {
  std::string check;
  bool pass = true;
  uint64_t x_max = 0;
  uint64_t pi_value = 0;       // pi(x_max) for the pi check
  uint64_t s_value = 0;        // S(x_max) for the prime-power check
  uint64_t first_failure = 0;  // x of the first violated comparison, 0 if none
  std::vector<std::string> notes;
};

// (i) pi(x) < alpha0 x / log x for every integer x in [2, x_max]
SandboxResult check_pi_bound(uint64_t x_max, int threads = 0);

// (ii) S(x) <= (2 alpha0 / log 2) sqrt(x) for every integer x in [2, x_max],
// where S counts prime powers p^h <= x with h >= 2
SandboxResult check_prime_power_bound(uint64_t x_max);

// exact S(x)
uint64_t prime_power_count(uint64_t x);

// (iii) sum over p^h >= x^2 (h >= 2) of p^{-h} <= 4.02 alpha0 / (x log x) at
// the sampled x values; partial sums enclosed outward, tail p > P bounded by
// (P/(P-1)) sum_{n>P} n^{-2} < 1.01/P
SandboxResult check_tail_sum(const std::vector<uint64_t>& xs, uint64_t prime_limit = 1000000);

// Enclosure of sum_{p^h >= x^2, h >= 2} p^{-h} (used by the check and tests).
Interval tail_prime_power_sum(uint64_t x, uint64_t prime_limit);

// The same partial sum over p <= prime_limit only (no tail term), so tests
// can compare against an exact rational evaluation.
Interval tail_prime_power_partial(uint64_t x, uint64_t prime_limit);

// Least prime p = a (mod q) for each residue a coprime to q, the cyclotomic
// discriminant d(Q(zeta_q)) as an exact integer, and log p / log d ratios.
struct ApRow {
  uint64_t residue;
  uint64_t least_prime;
  double ratio;  // log p / log d
};
struct ApResult {
  uint64_t q = 0;
  std::string discriminant;  // exact integer, decimal string
  double log_discriminant = 0.0;
  std::vector<ApRow> rows;
};
ApResult least_prime_progressions(uint64_t q, uint64_t search_limit = 100000000);

// Exact cyclotomic discriminant |d(Q(zeta_q))| = q^phi(q) / prod_{p|q} p^{phi(q)/(p-1)}
std::string cyclotomic_discriminant(uint64_t q, double* log_value = nullptr);

}  // namespace cheb

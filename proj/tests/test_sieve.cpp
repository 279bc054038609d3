#include <doctest.h>

#include <gmpxx.h>

#include "chebcert/sieve.hpp"

using namespace cheb;

TEST_CASE("prime counts") {
  auto flags = sieve_serial(1000000);
  CHECK(prime_count(1000000, flags) == 78498);
  CHECK(prime_count(100, flags) == 25);
  auto par = sieve_parallel(1000000, 2);
  CHECK(par == flags);
}

TEST_CASE("rosser-style bound over the full range") {
  SandboxResult r = check_pi_bound(1000000, 2);
  CHECK(r.pass);
  CHECK(r.pi_value == 78498);
  CHECK(r.first_failure == 0);
}

TEST_CASE("prime-power counting function") {
  CHECK(prime_power_count(100) == 10);  // 4 8 16 32 64 9 27 81 25 49
  CHECK(prime_power_count(4) == 1);
  SandboxResult r = check_prime_power_bound(100000);
  CHECK(r.pass);
}

TEST_CASE("tail sum against an exact rational evaluation") {
  // partial over p <= 1000, exact rational arithmetic
  auto primes = primes_up_to_list(1000);
  mpq_class exact(0);
  const unsigned long x = 101;
  for (unsigned long p : primes) {
    int h = 2;
    unsigned long long ph = static_cast<unsigned long long>(p) * p;
    while (ph < static_cast<unsigned long long>(x) * x) {
      ph *= p;
      ++h;
    }
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), p, h);
    mpq_class term(1);
    term /= mpq_class(den);
    mpq_class geom(p, p - 1);  // 1/(1 - 1/p)
    exact += term * geom;
  }
  Interval enclosure = tail_prime_power_partial(101, 1000);
  double exact_d = exact.get_d();
  CHECK(enclosure.lo <= exact_d);
  CHECK(enclosure.hi >= exact_d);
  CHECK(enclosure.width() < 1e-12);
}

TEST_CASE("tail bound holds at the sampled points") {
  SandboxResult r = check_tail_sum({101, 128, 1000, 10000});
  CHECK(r.pass);
  CHECK_THROWS_AS(check_tail_sum({50}), RangeError);
}

TEST_CASE("cyclotomic discriminants, exact") {
  CHECK(cyclotomic_discriminant(4) == "4");
  CHECK(cyclotomic_discriminant(5) == "125");
  CHECK(cyclotomic_discriminant(7) == "16807");
  CHECK(cyclotomic_discriminant(12) == "144");
  double logd = 0.0;
  cyclotomic_discriminant(3, &logd);
  CHECK(logd == doctest::Approx(std::log(3.0)));
  // a value that overflows 64-bit integers comfortably
  double big = 0.0;
  std::string d = cyclotomic_discriminant(101, &big);
  CHECK(d.size() > 150);
  CHECK(big > 400.0);
}

TEST_CASE("least prime progressions") {
  ApResult r = least_prime_progressions(4);
  REQUIRE(r.rows.size() == 2);
  CHECK(r.rows[0].residue == 1);
  CHECK(r.rows[0].least_prime == 5);
  CHECK(r.rows[1].residue == 3);
  CHECK(r.rows[1].least_prime == 3);
  CHECK(r.discriminant == "4");
  CHECK(r.rows[0].ratio == doctest::Approx(std::log(5.0) / std::log(4.0)));

  ApResult r9 = least_prime_progressions(9);
  for (const auto& row : r9.rows) {
    CHECK(row.least_prime % 9 == row.residue);
    if (row.residue == 1) CHECK(row.least_prime == 19);
    if (row.residue == 2) CHECK(row.least_prime == 2);
  }
  CHECK_THROWS_AS(least_prime_progressions(20000), RangeError);
}

TEST_CASE("desk-scale limits enforced") {
  CHECK_THROWS_AS(check_pi_bound(200000000ULL), RangeError);
}

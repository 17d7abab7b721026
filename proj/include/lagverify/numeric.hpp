#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace lagverify {

// All exact arithmetic in this project runs on GMP integers. Nothing here
// ever touches floating point.
using BigInt = mpz_class;

// Eratosthenes sieve. Holds every prime <= limit, ascending.
struct PrimeSieve {
  explicit PrimeSieve(std::int64_t limit);

  std::int64_t limit;
  std::vector<std::int64_t> primes;

  // Prime test for 0 <= m <= limit.
  bool contains(std::int64_t m) const;

 private:
  std::vector<bool> is_prime_;
};

// Trial-division primality for word-sized integers.
bool is_prime_int(std::int64_t m);

// Number of primes <= s. prime_pi(1) == 0.
std::int64_t prime_pi(std::int64_t s);

// nu_p(m) for m != 0.
std::int64_t nu_int(std::int64_t p, std::int64_t m);

// nu_p(m!) by Legendre's formula, sum of floor(m / p^i). The factorial is
// never materialized. Throws std::invalid_argument unless p is prime.
std::int64_t nu_factorial(std::int64_t p, std::int64_t m);

namespace detail {
// Same as nu_factorial without the primality check; the enumeration scans
// call this in tight loops with a prime that was checked once.
inline std::int64_t nu_factorial_unchecked(std::int64_t p, std::int64_t m) {
  std::int64_t sum = 0;
  for (std::int64_t q = m / p; q > 0; q /= p) sum += q;
  return sum;
}
}  // namespace detail

// True iff p divides binomial(n + s, s), decided by Kummer's theorem:
// adding n and s in base p produces at least one carry.
bool kummer_divides(std::int64_t p, std::int64_t n, std::int64_t s);

// Floor square root of m >= 0 via integer Newton iteration.
BigInt isqrt(const BigInt& m);

// The nonnegative root when m is a perfect square, empty otherwise.
// Negative inputs yield empty (a negative discriminant certifies
// irreducibility, so this is a result, not an error).
std::optional<BigInt> is_perfect_square(const BigInt& m);

// All ordered factorizations N = d1 * d2 with d1 <= d2, ascending in d1.
// Throws std::invalid_argument for N <= 0.
std::vector<std::pair<std::int64_t, std::int64_t>> factor_pairs(std::int64_t N);

// Distinct prime factors of m >= 1, ascending.
std::vector<std::int64_t> prime_factors(std::int64_t m);

// Exact m! and binomial(a, b) as big integers (test oracles and the
// coefficient builder use these; the scan paths never do).
BigInt factorial(std::int64_t m);
BigInt binomial(std::int64_t a, std::int64_t b);

// nu_p of a nonzero big integer.
std::int64_t nu_bigint(std::int64_t p, const BigInt& m);

// base^exp as a big integer, exp >= 0.
BigInt ipow(std::int64_t base, std::int64_t exp);

}  // namespace lagverify

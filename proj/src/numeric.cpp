#include "lagverify/numeric.hpp"

#include <algorithm>
#include <stdexcept>

namespace lagverify {

PrimeSieve::PrimeSieve(std::int64_t limit_in) : limit(std::max<std::int64_t>(limit_in, 2)) {
  is_prime_.assign(static_cast<std::size_t>(limit) + 1, true);
  is_prime_[0] = false;
  is_prime_[1] = false;
  for (std::int64_t i = 2; i * i <= limit; ++i) {
    if (!is_prime_[static_cast<std::size_t>(i)]) continue;
    for (std::int64_t j = i * i; j <= limit; j += i) is_prime_[static_cast<std::size_t>(j)] = false;
  }
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (is_prime_[static_cast<std::size_t>(i)]) primes.push_back(i);
  }
}

bool PrimeSieve::contains(std::int64_t m) const {
  if (m < 0 || m > limit) throw std::out_of_range("PrimeSieve::contains: value beyond sieve limit");
  return is_prime_[static_cast<std::size_t>(m)];
}

bool is_prime_int(std::int64_t m) {
  if (m < 2) return false;
  if (m < 4) return true;
  if (m % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= m; d += 2) {
    if (m % d == 0) return false;
  }
  return true;
}

std::int64_t prime_pi(std::int64_t s) {
  if (s < 0) throw std::invalid_argument("prime_pi: negative argument");
  if (s < 2) return 0;
  PrimeSieve sieve(s);
  return static_cast<std::int64_t>(sieve.primes.size());
}

std::int64_t nu_int(std::int64_t p, std::int64_t m) {
  if (m == 0) throw std::invalid_argument("nu_int: valuation of zero");
  if (m < 0) m = -m;
  std::int64_t v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

std::int64_t nu_factorial(std::int64_t p, std::int64_t m) {
  if (!is_prime_int(p)) throw std::invalid_argument("nu_factorial: p must be prime");
  if (m < 0) throw std::invalid_argument("nu_factorial: m must be nonnegative");
  return detail::nu_factorial_unchecked(p, m);
}

bool kummer_divides(std::int64_t p, std::int64_t n, std::int64_t s) {
  std::int64_t a = n;
  std::int64_t b = s;
  std::int64_t carry = 0;
  while (a > 0 || b > 0) {
    std::int64_t digit = a % p + b % p + carry;
    if (digit >= p) return true;
    carry = 0;
    a /= p;
    b /= p;
  }
  return false;
}

BigInt isqrt(const BigInt& m) {
  if (m < 0) throw std::invalid_argument("isqrt: negative argument");
  if (m == 0) return 0;
  // Start above the root, then Newton steps descend monotonically.
  std::size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
  BigInt x = BigInt(1) << static_cast<unsigned long>((bits + 2) / 2);
  while (true) {
    BigInt y = (x + m / x) / 2;
    if (y >= x) break;
    x = y;
  }
  return x;
}

std::optional<BigInt> is_perfect_square(const BigInt& m) {
  if (m < 0) return std::nullopt;
  BigInt r = isqrt(m);
  if (r * r == m) return r;
  return std::nullopt;
}

std::vector<std::pair<std::int64_t, std::int64_t>> factor_pairs(std::int64_t N) {
  if (N <= 0) throw std::invalid_argument("factor_pairs: N must be >= 1");
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t d = 1; d * d <= N; ++d) {
    if (N % d == 0) out.emplace_back(d, N / d);
  }
  return out;
}

std::vector<std::int64_t> prime_factors(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("prime_factors: m must be >= 1");
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

BigInt factorial(std::int64_t m) {
  if (m < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
  return r;
}

BigInt binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) throw std::invalid_argument("binomial: negative argument");
  if (b > a) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

std::int64_t nu_bigint(std::int64_t p, const BigInt& m) {
  if (m == 0) throw std::invalid_argument("nu_bigint: valuation of zero");
  BigInt rem;
  BigInt pz(static_cast<long>(p));
  return static_cast<std::int64_t>(mpz_remove(rem.get_mpz_t(), m.get_mpz_t(), pz.get_mpz_t()));
}

BigInt ipow(std::int64_t base, std::int64_t exp) {
  if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
  BigInt r;
  BigInt b(static_cast<long>(base));
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

}  // namespace lagverify

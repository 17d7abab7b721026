#include "lagverify/laguerre.hpp"

namespace lagverify {

std::vector<BigInt> g1_coefficients(const LaguerrePair& pair, std::int64_t cap) {
  const std::int64_t n = pair.n;
  const std::int64_t s = pair.s;
  if (n > cap) {
    throw MaterializeCapError(
        "g1_coefficients: degree " + std::to_string(n) + " exceeds the materialization cap " +
        std::to_string(cap) + "; too large to materialize, use valuation profiles instead");
  }
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = 1;
  // c_j = c_{j+1} * (n+s-j) * (j+1) / (n-j), exact at every step.
  for (std::int64_t j = n - 1; j >= 0; --j) {
    BigInt t = c[static_cast<std::size_t>(j + 1)];
    t *= static_cast<long>(n + s - j);
    t *= static_cast<long>(j + 1);
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(n - j));
    c[static_cast<std::size_t>(j)] = t;
  }
  return c;
}

std::int64_t g1_valuation(std::int64_t p, const LaguerrePair& pair, std::int64_t j) {
  if (j < 0 || j > pair.n) throw std::out_of_range("g1_valuation: coefficient index out of range");
  if (!is_prime_int(p)) throw std::invalid_argument("g1_valuation: p must be prime");
  const std::int64_t n = pair.n;
  const std::int64_t s = pair.s;
  using detail::nu_factorial_unchecked;
  return nu_factorial_unchecked(p, n + s - j) - nu_factorial_unchecked(p, n - j) -
         nu_factorial_unchecked(p, s) + nu_factorial_unchecked(p, n) -
         nu_factorial_unchecked(p, j);
}

bool for_each_valuation(std::int64_t p, const LaguerrePair& pair,
                        const std::function<bool(std::int64_t, std::int64_t)>& visit) {
  if (!is_prime_int(p)) throw std::invalid_argument("for_each_valuation: p must be prime");
  const std::int64_t n = pair.n;
  const std::int64_t s = pair.s;
  using detail::nu_factorial_unchecked;
  const std::int64_t base = nu_factorial_unchecked(p, n) - nu_factorial_unchecked(p, s);
  for (std::int64_t j = 0; j <= n; ++j) {
    std::int64_t v = nu_factorial_unchecked(p, n + s - j) - nu_factorial_unchecked(p, n - j) +
                     base - nu_factorial_unchecked(p, j);
    if (!visit(j, v)) return false;
  }
  return true;
}

ValuationProfile valuation_profile(std::int64_t p, const LaguerrePair& pair) {
  ValuationProfile profile;
  profile.p = p;
  profile.n = pair.n;
  profile.values.resize(static_cast<std::size_t>(pair.n) + 1);
  for_each_valuation(p, pair, [&](std::int64_t j, std::int64_t v) {
    profile.values[static_cast<std::size_t>(j)] = v;
    return true;
  });
  return profile;
}

}  // namespace lagverify

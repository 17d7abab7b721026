#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "lagverify/numeric.hpp"

namespace lagverify {

// A pair (n, s) naming the degree-n polynomial with shift s. Coefficients:
//   c_j = binomial(n + s - j, n - j) * n! / j!,   c_n = 1,
// ascending by degree.
struct LaguerrePair {
  std::int64_t n = 1;
  std::int64_t s = 1;

  LaguerrePair() = default;
  LaguerrePair(std::int64_t n_in, std::int64_t s_in) : n(n_in), s(s_in) {
    if (n < 1 || s < 1) throw std::invalid_argument("LaguerrePair: need n >= 1 and s >= 1");
  }
};

// Raised when a caller asks for literal coefficients beyond the
// materialization cap. Callers at that scale must use the valuation
// profile operations instead.
struct MaterializeCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::int64_t kMaterializeCap = 10'000;

// Exact coefficient vector c_0..c_n. Throws MaterializeCapError when
// n exceeds the cap.
std::vector<BigInt> g1_coefficients(const LaguerrePair& pair,
                                    std::int64_t cap = kMaterializeCap);

// nu_p(c_j) in closed form, for any n the pipeline ever visits:
//   nu_p((n+s-j)!) - nu_p((n-j)!) - nu_p(s!) + nu_p(n!) - nu_p(j!).
// Throws std::out_of_range unless 0 <= j <= n.
std::int64_t g1_valuation(std::int64_t p, const LaguerrePair& pair, std::int64_t j);

// The sequence nu_p(c_j), j = 0..n, for one prime. values[n] is always 0.
struct ValuationProfile {
  std::int64_t p = 2;
  std::int64_t n = 0;
  std::vector<std::int64_t> values;
};

ValuationProfile valuation_profile(std::int64_t p, const LaguerrePair& pair);

// Streaming variant: visit(j, v_j) for j = 0..n until the visitor returns
// false. Returns true when the scan ran to completion.
bool for_each_valuation(std::int64_t p, const LaguerrePair& pair,
                        const std::function<bool(std::int64_t, std::int64_t)>& visit);

}  // namespace lagverify

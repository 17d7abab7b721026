#pragma once

// Test-only exhaustive reducibility oracle for monic integer polynomials of
// degree <= 6 with small coefficients. Independent of the certification
// path: linear factors via divisor enumeration of the constant term,
// degree-2/3 factors via Kronecker interpolation through the values at
// -1, 0, 1 (a monic factor g satisfies g(t) | f(t) for every integer t).

#include <cstdint>
#include <vector>

#include "lagverify/irreducibility.hpp"

namespace lagverify::testing {

inline std::vector<BigInt> signed_divisors(const BigInt& value) {
  std::vector<BigInt> out;
  BigInt v = abs(value);
  for (BigInt d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    out.push_back(d);
    out.push_back(-d);
    BigInt q = v / d;
    if (q != d) {
      out.push_back(q);
      out.push_back(-q);
    }
  }
  return out;
}

inline bool has_integer_root_exhaustive(const PolynomialZ& f) {
  if (f.c[0] == 0) return true;
  for (const BigInt& d : signed_divisors(f.c[0])) {
    if (f(d) == 0) return true;
  }
  return false;
}

inline bool monic_reducible_exhaustive(const PolynomialZ& f) {
  const std::int64_t n = f.degree();
  if (n <= 1) return false;
  if (has_integer_root_exhaustive(f)) return true;
  if (n <= 3) return false;  // monic cubic without integer root is irreducible

  const BigInt f0 = f(BigInt(0));
  const BigInt f1 = f(BigInt(1));
  const BigInt fm1 = f(BigInt(-1));
  // f(+-1) == 0 would have been caught by the root test above; f(0) != 0 too.

  // Degree-2 monic factors x^2 + a x + b:  b = g(0),  a = g(1) - 1 - b.
  for (const BigInt& g0 : signed_divisors(f0)) {
    for (const BigInt& g1 : signed_divisors(f1)) {
      PolynomialZ candidate({g0, g1 - 1 - g0, BigInt(1)});
      if (divide_exact(f, candidate)) return true;
    }
  }
  if (n < 6) return false;  // degree 4/5: a proper factorization needs degree <= 2

  // Degree-3 monic factors x^3 + a x^2 + b x + d:
  //   d = g(0),  a = (g(1) + g(-1))/2 - d,  b = (g(1) - g(-1))/2 - 1.
  for (const BigInt& g0 : signed_divisors(f0)) {
    for (const BigInt& g1 : signed_divisors(f1)) {
      for (const BigInt& gm1 : signed_divisors(fm1)) {
        BigInt sum = g1 + gm1;
        BigInt diff = g1 - gm1;
        if (sum % 2 != 0 || diff % 2 != 0) continue;
        PolynomialZ candidate({g0, diff / 2 - 1, sum / 2 - g0, BigInt(1)});
        if (divide_exact(f, candidate)) return true;
      }
    }
  }
  return false;
}

}  // namespace lagverify::testing

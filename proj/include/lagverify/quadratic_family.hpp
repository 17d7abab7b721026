#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lagverify/numeric.hpp"

namespace lagverify {

// The degree-2 family has two defensible constant terms. The printed form
// uses (2+s)(1+s)/2; the value that actually follows from the coefficient
// formulas is (2+s)(1+s), twice as large. Both are carried side by side.
enum class Normalization { Printed, Derived };

const char* to_string(Normalization mode);

// The monic family member is x^2 - A*b1*x + sign*C with A = 2(1+s).
// (The leading unit is handled by global negation, which preserves
// reducibility, so only monic forms are analyzed.)
struct QuadraticFamily {
  std::int64_t s = 3;
  Normalization mode = Normalization::Printed;
  int sign = +1;  // sign of the constant term's unit b0

  std::int64_t A() const { return 2 * (1 + s); }
  std::int64_t C() const {
    std::int64_t full = (2 + s) * (1 + s);
    return mode == Normalization::Printed ? full / 2 : full;
  }
  std::int64_t signed_constant() const { return sign * C(); }
};

// One integer b1 making the family member reducible, plus the explicit
// factorization evidence: disc = m^2 and the two integer roots.
struct QuadraticWitness {
  std::int64_t b1 = 0;
  std::int64_t m = 0;
  std::int64_t r1 = 0;
  std::int64_t r2 = 0;
};

// One factor pair of 4C examined by the solver. sum = d1 + d2 and
// diff = d2 - d1; a pair produces b1 only when the parities match and the
// relevant half-sum or half-difference is divisible by A.
struct FactorPairTrace {
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;
  std::int64_t sum = 0;
  std::int64_t diff = 0;
  bool parity_ok = false;
  bool produces_b1 = false;
};

struct ExceptionalB1Result {
  QuadraticFamily family;
  std::vector<QuadraticWitness> witnesses;  // sorted by b1, closed under negation
  std::vector<FactorPairTrace> trace;       // every factor pair of 4C, ascending d1
};

// The complete set of integers b1 for which x^2 - A*b1*x + sign*C is
// reducible, found by the factor-pair scan of |disc - m^2| = 4C.
ExceptionalB1Result exceptional_b1(const QuadraticFamily& family);

// Integer root pair of monic x^2 + Bx + C when the discriminant is a
// perfect square, largest root first; empty otherwise.
std::optional<std::pair<BigInt, BigInt>> is_reducible_quadratic(const BigInt& B, const BigInt& C);

// Brute-force cross-check: every b1 in [-range, range] whose family member
// is reducible, via the discriminant test. Test oracle for the solver.
std::vector<std::int64_t> brute_exceptional_b1(const QuadraticFamily& family, std::int64_t range);

}  // namespace lagverify

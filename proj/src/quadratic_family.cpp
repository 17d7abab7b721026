#include "lagverify/quadratic_family.hpp"

#include <algorithm>
#include <set>

namespace lagverify {

const char* to_string(Normalization mode) {
  return mode == Normalization::Printed ? "printed" : "derived";
}

std::optional<std::pair<BigInt, BigInt>> is_reducible_quadratic(const BigInt& B, const BigInt& C) {
  BigInt disc = B * B - 4 * C;
  auto m = is_perfect_square(disc);
  if (!m) return std::nullopt;
  // B and m share parity since m^2 = B^2 - 4C.
  BigInt r1 = (-B + *m) / 2;
  BigInt r2 = (-B - *m) / 2;
  return std::make_pair(r1, r2);
}

namespace {

QuadraticWitness make_witness(const QuadraticFamily& family, std::int64_t b1, std::int64_t m) {
  QuadraticWitness w;
  w.b1 = b1;
  w.m = m;
  BigInt B = BigInt(static_cast<long>(-family.A())) * static_cast<long>(b1);
  auto roots = is_reducible_quadratic(B, BigInt(static_cast<long>(family.signed_constant())));
  // The caller only constructs witnesses for square discriminants.
  w.r1 = static_cast<std::int64_t>(roots->first.get_si());
  w.r2 = static_cast<std::int64_t>(roots->second.get_si());
  return w;
}

}  // namespace

ExceptionalB1Result exceptional_b1(const QuadraticFamily& family) {
  ExceptionalB1Result result;
  result.family = family;
  const std::int64_t A = family.A();
  const std::int64_t fourC = 4 * family.C();

  std::set<std::int64_t> found;
  for (auto [d1, d2] : factor_pairs(fourC)) {
    FactorPairTrace t;
    t.d1 = d1;
    t.d2 = d2;
    t.sum = d1 + d2;
    t.diff = d2 - d1;
    t.parity_ok = ((d1 ^ d2) & 1) == 0;
    if (t.parity_ok) {
      if (family.sign > 0) {
        // disc = (A b1)^2 - 4C = m^2, so (A b1 - m)(A b1 + m) = 4C and
        // d1 + d2 = 2 A b1.
        if (t.sum % (2 * A) == 0) {
          std::int64_t b1 = t.sum / (2 * A);
          t.produces_b1 = true;
          found.insert(b1);
          found.insert(-b1);
        }
      } else {
        // disc = (A b1)^2 + 4C = m^2, so (m - A b1)(m + A b1) = 4C and
        // d2 - d1 = 2 A b1.
        if (t.diff % (2 * A) == 0) {
          std::int64_t b1 = t.diff / (2 * A);
          t.produces_b1 = true;
          found.insert(b1);
          found.insert(-b1);
        }
      }
    }
    result.trace.push_back(t);
  }

  // The discriminant is even in b1, so the set closes under negation; the
  // square root is re-derived per signed b1 to populate the witness.
  for (std::int64_t b1 : found) {
    BigInt B = BigInt(static_cast<long>(-A)) * static_cast<long>(b1);
    BigInt disc = B * B - 4 * BigInt(static_cast<long>(family.signed_constant()));
    auto m = is_perfect_square(disc);
    if (!m) continue;
    result.witnesses.push_back(make_witness(family, b1, static_cast<std::int64_t>(m->get_si())));
  }
  std::sort(result.witnesses.begin(), result.witnesses.end(),
            [](const QuadraticWitness& a, const QuadraticWitness& b) { return a.b1 < b.b1; });
  return result;
}

std::vector<std::int64_t> brute_exceptional_b1(const QuadraticFamily& family, std::int64_t range) {
  std::vector<std::int64_t> out;
  const BigInt C(static_cast<long>(family.signed_constant()));
  for (std::int64_t b1 = -range; b1 <= range; ++b1) {
    BigInt B = BigInt(static_cast<long>(-family.A())) * static_cast<long>(b1);
    if (is_reducible_quadratic(B, C)) out.push_back(b1);
  }
  return out;
}

}  // namespace lagverify

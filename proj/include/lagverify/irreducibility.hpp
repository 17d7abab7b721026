#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lagverify/laguerre.hpp"
#include "lagverify/numeric.hpp"

namespace lagverify {

// Dense integer polynomial, ascending coefficients, nonzero leading
// coefficient after normalization.
struct PolynomialZ {
  std::vector<BigInt> c;

  PolynomialZ() = default;
  explicit PolynomialZ(std::vector<BigInt> coeffs);

  static PolynomialZ from_g1(const LaguerrePair& pair, std::int64_t cap = kMaterializeCap);
  static PolynomialZ parse(const std::string& line);  // whitespace-separated, ascending

  bool is_zero() const { return c.empty(); }
  std::int64_t degree() const { return static_cast<std::int64_t>(c.size()) - 1; }
  const BigInt& leading() const { return c.back(); }
  bool is_monic() const { return !c.empty() && c.back() == 1; }

  BigInt operator()(const BigInt& x) const;  // Horner
  std::string str() const;                   // ascending, space-separated

  friend bool operator==(const PolynomialZ&, const PolynomialZ&) = default;
};

PolynomialZ multiply(const PolynomialZ& a, const PolynomialZ& b);

// Quotient when divisor divides f exactly over the integers, else empty.
std::optional<PolynomialZ> divide_exact(const PolynomialZ& f, const PolynomialZ& divisor);

// All integer roots. Small constant terms go through divisor enumeration;
// large ones through root sets modulo the prime ladder with CRT lifting
// and exact re-evaluation. Throws std::invalid_argument on the zero
// polynomial.
std::vector<BigInt> integer_roots(const PolynomialZ& f);

// Multiset of irreducible-factor degrees of f mod p via distinct-degree
// factorization, ascending. Empty optional signals a bad prime (p divides
// the leading coefficient or f is not squarefree mod p); callers retry
// with the next prime.
std::optional<std::vector<int>> modp_degree_multiset(const PolynomialZ& f, std::int64_t p);

// Achievable factor degrees: dp over the multiset, always holding 0 and
// the full degree.
std::vector<char> subset_sums(const std::vector<int>& multiset, std::int64_t degree);

// Fixed deterministic prime ladder used by the certifier.
const std::vector<std::int64_t>& certifier_prime_ladder();

enum class Verdict { Irreducible, Reducible, Unresolved };
const char* to_string(Verdict v);

enum class EvidenceKind {
  DegreeOne,             // degree-1 input
  NegativeDiscriminant,  // quadratic fast path
  DegreePattern,         // mod-p degree multiset intersection reduced to {0, n}
  NewtonExclusion,       // degree pattern closed by polygon windows
  ExplicitFactor,        // reducible, factor included
  None                   // unresolved
};
const char* to_string(EvidenceKind k);

struct NewtonExclusionNote {
  std::int64_t p = 0;
  std::int64_t l = 0;
  std::int64_t k = 0;
};

struct IrredCertificate {
  Verdict verdict = Verdict::Unresolved;
  EvidenceKind evidence = EvidenceKind::None;
  std::vector<std::int64_t> primes_used;
  std::vector<std::vector<int>> degree_multisets;   // parallel to primes_used
  std::vector<NewtonExclusionNote> np_exclusions;
  std::optional<PolynomialZ> factor;                // set for Reducible
  bool no_integer_roots = false;
  std::vector<std::int64_t> unresolved_degrees;     // set for Unresolved
};

// Certification strategy, in order: quadratic discriminant, integer-root
// test, degree-pattern sieve over up to `budget` good primes, Newton
// polygon windows for leftover middle degrees. Unresolved is a first-class
// verdict; Reducible always carries a verified factor.
IrredCertificate certify(const PolynomialZ& f, int budget = 12);

}  // namespace lagverify

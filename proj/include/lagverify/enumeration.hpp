#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "lagverify/newton_polygon.hpp"
#include "lagverify/quadratic_family.hpp"

namespace lagverify {

// Candidate pair, ordered by (s, n) everywhere.
struct Pair {
  std::int64_t n = 0;
  std::int64_t s = 0;

  friend bool operator==(const Pair&, const Pair&) = default;
  friend bool operator<(const Pair& a, const Pair& b) {
    if (a.s != b.s) return a.s < b.s;
    return a.n < b.n;
  }
};

// Which primes the exclusion scan tries for a pair.
//   Divisors:   the primes dividing n.
//   Hypothesis: every prime that can satisfy the exclusion lemma's
//               divisibility hypothesis at the k = 1 stage; for these
//               coefficients that is exactly the primes dividing n*(s+1).
enum class PrimeSearch { Divisors, Hypothesis };

const char* to_string(PrimeSearch mode);

inline std::vector<std::array<std::int64_t, 3>> exceptional_triples() {
  return {{4, 2, 7},   {4, 2, 23},  {9, 2, 19}, {9, 2, 47}, {16, 2, 14},
          {16, 2, 34}, {16, 2, 89}, {9, 3, 47}, {16, 3, 19}, {10, 5, 4}};
}

struct PipelineConfig {
  std::int64_t s_max = 30;
  std::int64_t n_cap = 10'000'000;
  std::int64_t n_min = 2;
  Normalization mode = Normalization::Printed;  // used by the n = 2 justification
  PrimeSearch t1_search = PrimeSearch::Hypothesis;
  PrimeSearch t4_search = PrimeSearch::Divisors;
  int jobs = 1;
  std::vector<std::array<std::int64_t, 3>> triples = exceptional_triples();
};

// All n >= 2 whose prime factors are all <= s and whose prime-power parts
// p^(nu_p(n)) are all <= s, ascending, capped at n_cap.
std::vector<std::int64_t> smooth_candidates(std::int64_t s, std::int64_t n_cap);

// Same enumeration split into kept (<= n_cap) and deferred (> n_cap); the
// full candidate set is finite, so nothing is silently dropped.
struct SmoothSplit {
  std::vector<std::int64_t> kept;
  std::vector<std::int64_t> deferred;
};
SmoothSplit smooth_candidates_split(std::int64_t s, std::int64_t n_cap);

// Keeps n iff p | binomial(n+s, s) for every prime p | n (Kummer carries).
std::vector<std::int64_t> condition4_filter(const std::vector<std::int64_t>& candidates,
                                            std::int64_t s);

// s^prime_pi(s): the bound every linear-factor candidate must satisfy.
BigInt lemma2_bound(std::int64_t s);

enum class Stage { T, T1, T2, T3, T4, X };
const char* to_string(Stage st);

struct PrimeOutcome {
  std::int64_t p = 0;
  FFLOutcome outcome;
};

struct SurvivorRecord {
  Pair pair;
  Stage stage = Stage::T;
  std::vector<PrimeOutcome> t1_outcomes;  // k = 1 stage, in scan order
  std::vector<PrimeOutcome> t4_outcomes;  // l = 1, k = floor(n/2) stage
  bool triple_pair = false;               // appears in the hypothesis triple list
};

struct PipelineResult {
  PipelineConfig config;
  std::vector<Pair> T, T1, T2, T3, T4, X;
  std::vector<Pair> deferred;  // smooth candidates beyond n_cap
  bool partial = false;        // deferred nonempty
  std::map<Pair, SurvivorRecord> records;
  // Quadratic analysis justifying the removal of each n = 2 pair, keyed by
  // s, run in the configured normalization for both constant signs.
  std::map<std::int64_t, std::vector<ExceptionalB1Result>> quad_checks;
  std::vector<Pair> lemma2_violations;
};

// Primes the k = 1 stage scans for a pair under the given search mode.
std::vector<std::int64_t> scan_primes(const Pair& pair, PrimeSearch mode);

// Survivors of the k = 1 exclusion stage: pairs for which the check fails
// at every scanned prime (one holding prime excludes a pair).
std::vector<Pair> filter_T1(const std::vector<Pair>& T, const PipelineConfig& config);

// The stage split applied to a k=1 survivor set: the n = 2 slice goes to
// the quadratic analysis, pairs with an empty l = 1 window bypass straight
// into X, the rest faces the (l, k) = (1, floor(n/2)) exclusion.
struct XAssembly {
  std::vector<Pair> T2, T3, T4, X;
  std::vector<Pair> bypass;
  std::map<Pair, std::vector<PrimeOutcome>> t4_outcomes;
  std::map<std::int64_t, std::vector<ExceptionalB1Result>> quad_checks;
};
XAssembly assemble_X(const std::vector<Pair>& T1, const PipelineConfig& config);

// Runs every stage; the entry point the CLI uses.
PipelineResult run_pipeline(const PipelineConfig& config);

}  // namespace lagverify

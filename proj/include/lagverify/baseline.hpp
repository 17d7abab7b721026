#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lagverify/enumeration.hpp"

namespace lagverify {

// The published lists this tool diffs its own computations against. They
// are kept verbatim, including the duplicated (16,19) entry in the k = 1
// survivor list and the (216,29)-vs-(16,29) mismatch between that list and
// the final set; the diff machinery reports such anomalies, it never edits
// them away.
struct PaperBaseline {
  // k = 1 stage survivors as printed (27 entries, one duplicate).
  std::vector<Pair> printed_T1;
  // Final exceptional set as printed (15 pairs).
  std::vector<Pair> printed_X;
  // The ten (n, k, s) triples carried as hypothesis data.
  std::vector<std::array<std::int64_t, 3>> triples;
  // The six-triple subset the main theorem assumes away.
  std::vector<std::array<std::int64_t, 3>> theorem_triples;
  // Printed quadratic-family claims: exceptional b1 per shift (printed
  // normalization); s = 3 and s = 15 claim none, s = 7 claims exactly
  // b1 = 0 with the polynomial x^2 - 36.
  struct QuadraticClaim {
    std::int64_t s;
    std::vector<std::int64_t> exceptional_b1;
  };
  std::vector<QuadraticClaim> quadratic_claims;
};

const PaperBaseline& paper_baseline();

// Pairs the corollary certifies directly (the theorem-hypothesis pairs
// plus the quadratic pair the proof checks by hand).
std::vector<Pair> corollary_direct_pairs();

}  // namespace lagverify

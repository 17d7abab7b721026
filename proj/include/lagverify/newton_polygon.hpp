#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lagverify/laguerre.hpp"

namespace lagverify {

// Exact rational slope. Always reduced, denominator >= 1. Comparisons use
// cross multiplication in 128-bit, never floating point.
struct Slope {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Slope of(std::int64_t dy, std::int64_t dx);

  bool operator==(const Slope& o) const;
  bool operator<(const Slope& o) const;
  bool operator<=(const Slope& o) const { return *this == o || *this < o; }

  // Strict test against 1/k (k >= 1): num * k < den.
  bool less_than_inverse(std::int64_t k) const;

  std::string str() const;  // "num/den"
};

// Lower convex hull of the points P_i = (i, nu_p(c_{n-i})), i = 0..n.
// Edge slopes strictly increase left to right; the rightmost edge is the
// maximal-slope edge.
struct NewtonPolygon {
  struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;
    bool operator==(const Point&) const = default;
  };
  struct Edge {
    Point from;
    Point to;
    Slope slope;
  };
  std::vector<Point> vertices;
  std::vector<Edge> edges;
};

NewtonPolygon build_polygon(const ValuationProfile& profile);

// Slope of the final hull edge, computed as the streaming maximum of
// (v_0 - v_j) / j over 0 < j <= n. Requires v_n = 0 (p does not divide the
// leading coefficient); throws std::invalid_argument otherwise. A profile
// of length 1 or with all values equal yields 0.
Slope rightmost_slope(const ValuationProfile& profile);

enum class FflViolation { None, LeadingCoefficient, Divisibility, Slope };

const char* to_string(FflViolation v);

// Outcome of the factor-exclusion test with parameters (l, k): when holds
// is true, no unit-ended twist of the profiled polynomial has a factor
// with degree in [l+1, k].
struct FFLOutcome {
  bool holds = false;
  FflViolation violated = FflViolation::None;
  std::int64_t witness_j = -1;  // index of the first violating coefficient
  Slope witness_slope;          // (v_0 - v_j)/j at the slope witness
};

// Checks, against the profile of one prime:
//   (i)   v_n = 0,
//   (ii)  v_j >= 1 for all 0 <= j < n - l,
//   (iii) rightmost slope strictly below 1/k.
// Throws std::invalid_argument unless k > l >= 0.
FFLOutcome ffl_check(const ValuationProfile& profile, std::int64_t l, std::int64_t k);

// The widest exclusion the profile supports: the minimal admissible l and
// the maximal k with slope < 1/k (0 when the slope already blocks k = 1).
// Factor degrees in [l_min + 1, k_max] are excluded when k_max > l_min.
struct ExclusionWindow {
  std::int64_t l_min = 0;
  std::int64_t k_max = 0;
  Slope slope;
};

ExclusionWindow strongest_exclusion(const ValuationProfile& profile);

}  // namespace lagverify

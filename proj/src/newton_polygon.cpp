#include "lagverify/newton_polygon.hpp"

#include <numeric>
#include <stdexcept>

namespace lagverify {

namespace {
using I128 = __int128;

// Cross product (b - a) x (c - a); > 0 means c lies left of a->b.
I128 cross(const NewtonPolygon::Point& a, const NewtonPolygon::Point& b,
           const NewtonPolygon::Point& c) {
  return static_cast<I128>(b.x - a.x) * (c.y - a.y) - static_cast<I128>(b.y - a.y) * (c.x - a.x);
}
}  // namespace

Slope Slope::of(std::int64_t dy, std::int64_t dx) {
  if (dx == 0) throw std::invalid_argument("Slope: zero run");
  if (dx < 0) {
    dy = -dy;
    dx = -dx;
  }
  std::int64_t g = std::gcd(dy < 0 ? -dy : dy, dx);
  if (g == 0) g = 1;
  return Slope{dy / g, dx / g};
}

bool Slope::operator==(const Slope& o) const {
  return static_cast<I128>(num) * o.den == static_cast<I128>(o.num) * den;
}

bool Slope::operator<(const Slope& o) const {
  return static_cast<I128>(num) * o.den < static_cast<I128>(o.num) * den;
}

bool Slope::less_than_inverse(std::int64_t k) const {
  if (k < 1) throw std::invalid_argument("Slope::less_than_inverse: k must be >= 1");
  return static_cast<I128>(num) * k < static_cast<I128>(den);
}

std::string Slope::str() const { return std::to_string(num) + "/" + std::to_string(den); }

NewtonPolygon build_polygon(const ValuationProfile& profile) {
  if (profile.values.empty()) throw std::invalid_argument("build_polygon: empty profile");
  const std::int64_t n = static_cast<std::int64_t>(profile.values.size()) - 1;
  NewtonPolygon polygon;
  std::vector<NewtonPolygon::Point>& hull = polygon.vertices;
  for (std::int64_t i = 0; i <= n; ++i) {
    NewtonPolygon::Point pt{i, profile.values[static_cast<std::size_t>(n - i)]};
    // Pop while the turn is not strictly left; collinear points merge into
    // one edge so slopes stay strictly increasing.
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) {
      hull.pop_back();
    }
    hull.push_back(pt);
  }
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    NewtonPolygon::Edge e;
    e.from = hull[i];
    e.to = hull[i + 1];
    e.slope = Slope::of(e.to.y - e.from.y, e.to.x - e.from.x);
    polygon.edges.push_back(e);
  }
  return polygon;
}

Slope rightmost_slope(const ValuationProfile& profile) {
  if (profile.values.empty()) throw std::invalid_argument("rightmost_slope: empty profile");
  if (profile.values.back() != 0) {
    throw std::invalid_argument("rightmost_slope: leading coefficient valuation must be 0");
  }
  const std::int64_t n = static_cast<std::int64_t>(profile.values.size()) - 1;
  if (n == 0) return Slope{0, 1};
  const std::int64_t v0 = profile.values[0];
  Slope best = Slope::of(v0 - profile.values[1], 1);
  for (std::int64_t j = 2; j <= n; ++j) {
    Slope cand = Slope::of(v0 - profile.values[static_cast<std::size_t>(j)], j);
    if (best < cand) best = cand;
  }
  return best;
}

const char* to_string(FflViolation v) {
  switch (v) {
    case FflViolation::None:
      return "none";
    case FflViolation::LeadingCoefficient:
      return "leading-coefficient";
    case FflViolation::Divisibility:
      return "divisibility";
    case FflViolation::Slope:
      return "slope";
  }
  return "?";
}

FFLOutcome ffl_check(const ValuationProfile& profile, std::int64_t l, std::int64_t k) {
  if (l < 0 || k <= l) throw std::invalid_argument("ffl_check: need k > l >= 0");
  if (profile.values.empty()) throw std::invalid_argument("ffl_check: empty profile");
  const std::int64_t n = static_cast<std::int64_t>(profile.values.size()) - 1;
  FFLOutcome out;

  if (profile.values.back() != 0) {
    out.violated = FflViolation::LeadingCoefficient;
    out.witness_j = n;
    return out;
  }
  for (std::int64_t j = 0; j < n - l; ++j) {
    if (profile.values[static_cast<std::size_t>(j)] < 1) {
      out.violated = FflViolation::Divisibility;
      out.witness_j = j;
      return out;
    }
  }
  const std::int64_t v0 = profile.values[0];
  for (std::int64_t j = 1; j <= n; ++j) {
    const std::int64_t rise = v0 - profile.values[static_cast<std::size_t>(j)];
    // slope >= 1/k  <=>  (v0 - v_j) * k >= j
    if (static_cast<__int128>(rise) * k >= j) {
      out.violated = FflViolation::Slope;
      out.witness_j = j;
      out.witness_slope = Slope::of(rise, j);
      return out;
    }
  }
  out.holds = true;
  return out;
}

ExclusionWindow strongest_exclusion(const ValuationProfile& profile) {
  if (profile.values.empty() || profile.values.back() != 0) {
    throw std::invalid_argument("strongest_exclusion: profile must end with valuation 0");
  }
  const std::int64_t n = static_cast<std::int64_t>(profile.values.size()) - 1;
  ExclusionWindow w;
  std::int64_t first_zero = n;
  for (std::int64_t j = 0; j <= n; ++j) {
    if (profile.values[static_cast<std::size_t>(j)] == 0) {
      first_zero = j;
      break;
    }
  }
  w.l_min = n - first_zero;
  w.slope = rightmost_slope(profile);
  if (w.slope.num <= 0) {
    w.k_max = n > 0 ? n - 1 : 0;
  } else {
    w.k_max = (w.slope.den - 1) / w.slope.num;  // largest k with slope < 1/k
    if (w.k_max > n - 1) w.k_max = n - 1;
  }
  return w;
}

}  // namespace lagverify

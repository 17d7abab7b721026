#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "lagverify/baseline.hpp"
#include "lagverify/enumeration.hpp"

using namespace lagverify;

namespace {

bool contains(const std::vector<std::int64_t>& v, std::int64_t x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

bool contains(const std::vector<Pair>& v, Pair p) {
  return std::find(v.begin(), v.end(), p) != v.end();
}

}  // namespace

TEST_CASE("smooth candidates respect the prime-power caps") {
  auto s17 = smooth_candidates(17, 1'000'000);
  CHECK(contains(s17, 16));
  CHECK(contains(s17, 272));  // 2^4 * 17
  CHECK_FALSE(contains(s17, 32));  // 2^5 = 32 > 17
  CHECK_FALSE(contains(s17, 2 * 19));

  auto s25 = smooth_candidates(25, 1'000'000);
  CHECK(contains(s25, 786600));  // 2^3 * 3^2 * 5^2 * 19 * 23, all parts <= 25
  CHECK_FALSE(contains(smooth_candidates(24, 1'000'000), 786600));  // the 5^2 part needs s >= 25

  for (std::int64_t n : smooth_candidates(11, 100'000)) {
    CHECK(n >= 2);
    for (std::int64_t p : prime_factors(n)) {
      CHECK(p <= 11);
      CHECK(ipow(p, nu_int(p, n)) <= 11);
    }
  }
  CHECK(smooth_candidates(1, 100).empty());
}

TEST_CASE("the split never drops candidates") {
  SmoothSplit split = smooth_candidates_split(30, 10);
  CHECK(!split.deferred.empty());
  for (std::int64_t n : split.kept) CHECK(n <= 10);
  for (std::int64_t n : split.deferred) CHECK(n > 10);
  SmoothSplit full = smooth_candidates_split(30, 3'000'000'000'000LL);
  CHECK(full.deferred.empty());
  CHECK(full.kept.size() == split.kept.size() + split.deferred.size());
}

TEST_CASE("constant-term divisibility filter") {
  CHECK(condition4_filter({6}, 3) == std::vector<std::int64_t>{6});    // 84 divisible by 2 and 3
  CHECK(condition4_filter({4}, 1) == std::vector<std::int64_t>{});     // C(5,1) = 5 is odd
  CHECK(condition4_filter({786600}, 25) == std::vector<std::int64_t>{786600});
  CHECK(condition4_filter({2, 3, 4, 6, 9}, 3) == std::vector<std::int64_t>{2, 6});
}

TEST_CASE("degree bound") {
  CHECK(lemma2_bound(3) == 9);
  CHECK(lemma2_bound(1) == 1);
  CHECK(lemma2_bound(30) == ipow(30, 10));
}

TEST_CASE("prime search modes") {
  CHECK(scan_primes({786600, 25}, PrimeSearch::Divisors) ==
        std::vector<std::int64_t>{2, 3, 5, 19, 23});
  CHECK(scan_primes({786600, 25}, PrimeSearch::Hypothesis) ==
        std::vector<std::int64_t>{2, 3, 5, 13, 19, 23});
  CHECK(scan_primes({2, 3}, PrimeSearch::Hypothesis) == std::vector<std::int64_t>{2});
  CHECK(scan_primes({2, 2}, PrimeSearch::Hypothesis) == std::vector<std::int64_t>{2, 3});
}

TEST_CASE("small slices of the k=1 stage") {
  PipelineConfig config;
  config.s_max = 3;
  config.n_cap = 1'000'000;
  PipelineResult r = run_pipeline(config);
  CHECK(r.T1 == std::vector<Pair>{{2, 3}, {6, 3}});
  CHECK(r.X == std::vector<Pair>{{6, 3}});
  CHECK(r.T2 == std::vector<Pair>{{2, 3}});

  // (9,3) never reaches T1: its prime-power part 9 exceeds s = 3, and even
  // on its own profile the k = 1 check holds at p = 3.
  CHECK_FALSE(contains(r.T, Pair{9, 3}));
  CHECK_FALSE(contains(r.T1, Pair{9, 3}));
  CHECK(ffl_check(valuation_profile(3, LaguerrePair{9, 3}), 0, 1).holds);
}

// The full-run expectations below are machine-derived and double-checked in
// this test against the independent literal-coefficient route for every
// pair of materializable degree.
TEST_CASE("full run: k=1 survivors, final set, stage chain") {
  PipelineConfig config;
  config.s_max = 30;
  config.n_cap = 1'000'000;
  PipelineResult r = run_pipeline(config);

  const std::vector<Pair> expected_T1 = {
      {2, 3},   {6, 3},   {4, 5},    {2, 7},       {4, 7},       {8, 11},  {72, 11},
      {8, 13},  {2, 15},  {3, 15},   {4, 15},      {8, 15},      {10, 15}, {12, 15},
      {16, 17}, {272, 17}, {16, 19}, {4, 23},      {6, 23},      {16, 23}, {16, 24},
      {2, 26},  {3, 26},  {16, 26},  {8, 27},      {16, 29},     {216, 29}};
  std::vector<Pair> sorted_T1 = r.T1;
  std::sort(sorted_T1.begin(), sorted_T1.end());
  std::vector<Pair> sorted_expected = expected_T1;
  std::sort(sorted_expected.begin(), sorted_expected.end());
  CHECK(sorted_T1 == sorted_expected);

  // Independent verification: for every candidate pair with materializable
  // degree, recompute the k=1 verdict from literal coefficients.
  for (const Pair& pair : r.T) {
    if (pair.n > 300) continue;
    auto coeffs = g1_coefficients({pair.n, pair.s});
    bool excluded = false;
    for (std::int64_t p : scan_primes(pair, config.t1_search)) {
      ValuationProfile prof;
      prof.p = p;
      prof.n = pair.n;
      for (const BigInt& c : coeffs) prof.values.push_back(nu_bigint(p, c));
      if (ffl_check(prof, 0, 1).holds) {
        excluded = true;
        break;
      }
    }
    CAPTURE(pair.n);
    CAPTURE(pair.s);
    CHECK(excluded == !contains(r.T1, pair));
  }

  // The two large pairs are excluded by p = 3; record the witnesses.
  for (std::int64_t s : {25, 26}) {
    REQUIRE(contains(r.T, Pair{786600, s}));
    CHECK_FALSE(contains(r.T1, Pair{786600, s}));
    const SurvivorRecord& rec = r.records.at(Pair{786600, s});
    bool held_at_3 = false;
    for (const auto& po : rec.t1_outcomes) {
      if (po.p == 3 && po.outcome.holds) held_at_3 = true;
    }
    CHECK(held_at_3);
  }

  // Stage chain: T4 within T3 within T1 within T.
  std::set<Pair> T(r.T.begin(), r.T.end()), T1(r.T1.begin(), r.T1.end()),
      T3(r.T3.begin(), r.T3.end()), T4(r.T4.begin(), r.T4.end());
  for (const Pair& p : T1) CHECK(T.count(p));
  for (const Pair& p : T3) CHECK(T1.count(p));
  for (const Pair& p : T4) CHECK(T3.count(p));

  // T2 is exactly the n = 2 slice of T1.
  for (const Pair& p : r.T2) CHECK(p.n == 2);
  for (const Pair& p : r.T1) {
    if (p.n == 2) CHECK(contains(r.T2, p));
  }
  // Quadratic justifications exist for each T2 shift, in both signs.
  for (const Pair& p : r.T2) {
    REQUIRE(r.quad_checks.count(p.s));
    CHECK(r.quad_checks.at(p.s).size() == 2);
  }

  // X = T4 plus the bypass pairs (n = 3: the l = 1 window is empty).
  std::set<Pair> X(r.X.begin(), r.X.end());
  for (const Pair& p : r.T4) CHECK(X.count(p));
  for (const Pair& p : r.X) {
    if (!T4.count(p)) CHECK(p.n == 3);
  }

  // Every final-set member satisfies the degree bound.
  CHECK(r.lemma2_violations.empty());
  for (const Pair& p : r.X) {
    CHECK(BigInt(static_cast<long>(p.n)) <= lemma2_bound(p.s));
  }

  // Re-verify the candidate conditions independently for every X member:
  // smoothness with capped prime-power parts, and the Kummer divisibility
  // of the constant term at each prime divisor.
  for (const Pair& p : r.X) {
    for (std::int64_t q : prime_factors(p.n)) {
      CHECK(q <= p.s);
      CHECK(ipow(q, nu_int(q, p.n)) <= p.s);
      CHECK(kummer_divides(q, p.n, p.s));
    }
  }
}

TEST_CASE("assemble_X splits a survivor set per the stage rules") {
  PipelineConfig config;
  std::vector<Pair> T1 = {{2, 3}, {2, 7}, {3, 15}, {6, 3}, {4, 5}, {8, 13}};
  XAssembly out = assemble_X(T1, config);
  CHECK(out.T2 == std::vector<Pair>{{2, 3}, {2, 7}});
  CHECK(out.bypass == std::vector<Pair>{{3, 15}});
  CHECK(out.T3 == std::vector<Pair>{{6, 3}, {4, 5}, {8, 13}});
  // Quadratic justifications in both constant signs for each T2 shift.
  REQUIRE(out.quad_checks.count(3));
  REQUIRE(out.quad_checks.count(7));
  CHECK(out.quad_checks.at(7).size() == 2);
  // X = T4 plus the bypass, sorted by (s, n).
  std::set<Pair> x(out.X.begin(), out.X.end());
  CHECK(x.count(Pair{3, 15}) == 1);
  for (const Pair& p : out.T4) CHECK(x.count(p) == 1);
  CHECK(out.X.size() == out.T4.size() + out.bypass.size());
  CHECK(std::is_sorted(out.X.begin(), out.X.end()));
  // Every T3 member carries its l = 1 outcomes.
  for (const Pair& p : out.T3) CHECK(out.t4_outcomes.count(p) == 1);
}

TEST_CASE("records are kept for excluded pairs too") {
  PipelineConfig config;
  config.s_max = 5;
  config.n_cap = 10'000;
  PipelineResult r = run_pipeline(config);
  for (const Pair& p : r.T) {
    REQUIRE(r.records.count(p));
    const SurvivorRecord& rec = r.records.at(p);
    CHECK(rec.pair == p);
    CHECK_FALSE(rec.t1_outcomes.empty());
  }
}

TEST_CASE("cap semantics: deferral and monotonicity") {
  PipelineConfig small;
  small.s_max = 30;
  small.n_cap = 10;
  PipelineResult r_small = run_pipeline(small);
  CHECK(r_small.partial);
  CHECK(!r_small.deferred.empty());

  PipelineConfig mid = small;
  mid.n_cap = 10'000;
  PipelineConfig big = small;
  big.n_cap = 1'000'000;
  PipelineResult r_mid = run_pipeline(mid);
  PipelineResult r_big = run_pipeline(big);
  std::set<Pair> big_T1(r_big.T1.begin(), r_big.T1.end());
  std::set<Pair> big_X(r_big.X.begin(), r_big.X.end());
  for (const Pair& p : r_mid.T1) CHECK(big_T1.count(p));
  for (const Pair& p : r_mid.X) CHECK(big_X.count(p));
}

TEST_CASE("parallel scan merges deterministically") {
  PipelineConfig serial;
  serial.s_max = 17;
  serial.n_cap = 100'000;
  PipelineConfig parallel = serial;
  parallel.jobs = 4;
  PipelineResult a = run_pipeline(serial);
  PipelineResult b = run_pipeline(parallel);
  CHECK(a.T1 == b.T1);
  CHECK(a.X == b.X);
  CHECK(a.T.size() == b.T.size());
}

TEST_CASE("divisor-only prime search keeps more pairs") {
  PipelineConfig hyp;
  hyp.s_max = 11;
  hyp.n_cap = 100'000;
  PipelineConfig div = hyp;
  div.t1_search = PrimeSearch::Divisors;
  PipelineResult a = run_pipeline(hyp);
  PipelineResult b = run_pipeline(div);
  std::set<Pair> div_T1(b.T1.begin(), b.T1.end());
  for (const Pair& p : a.T1) CHECK(div_T1.count(p));
  CHECK(b.T1.size() > a.T1.size());
  CHECK(contains(b.T1, Pair{2, 2}));       // 3-Eisenstein shape, only visible to q | s+1
  CHECK_FALSE(contains(a.T1, Pair{2, 2}));
}

#include "lagverify/enumeration.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace lagverify {

const char* to_string(PrimeSearch mode) {
  return mode == PrimeSearch::Divisors ? "divisors" : "hypothesis";
}

const char* to_string(Stage st) {
  switch (st) {
    case Stage::T:
      return "T";
    case Stage::T1:
      return "T1";
    case Stage::T2:
      return "T2";
    case Stage::T3:
      return "T3";
    case Stage::T4:
      return "T4";
    case Stage::X:
      return "X";
  }
  return "?";
}

namespace {

void extend_products(const std::vector<std::int64_t>& primes, std::size_t idx, std::int64_t s,
                     std::int64_t acc, std::vector<std::int64_t>& out) {
  if (idx == primes.size()) {
    out.push_back(acc);
    return;
  }
  extend_products(primes, idx + 1, s, acc, out);
  std::int64_t p = primes[idx];
  std::int64_t power = p;
  while (power <= s) {
    extend_products(primes, idx + 1, s, acc * power, out);
    if (power > s / p) break;
    power *= p;
  }
}

}  // namespace

SmoothSplit smooth_candidates_split(std::int64_t s, std::int64_t n_cap) {
  if (s < 1) throw std::invalid_argument("smooth_candidates: s must be >= 1");
  SmoothSplit split;
  if (s < 2) return split;
  PrimeSieve sieve(s);
  std::vector<std::int64_t> all;
  extend_products(sieve.primes, 0, s, 1, all);
  std::sort(all.begin(), all.end());
  for (std::int64_t n : all) {
    if (n < 2) continue;
    (n <= n_cap ? split.kept : split.deferred).push_back(n);
  }
  return split;
}

std::vector<std::int64_t> smooth_candidates(std::int64_t s, std::int64_t n_cap) {
  return smooth_candidates_split(s, n_cap).kept;
}

std::vector<std::int64_t> condition4_filter(const std::vector<std::int64_t>& candidates,
                                            std::int64_t s) {
  std::vector<std::int64_t> out;
  for (std::int64_t n : candidates) {
    bool keep = true;
    for (std::int64_t p : prime_factors(n)) {
      if (!kummer_divides(p, n, s)) {
        keep = false;
        break;
      }
    }
    if (keep) out.push_back(n);
  }
  return out;
}

BigInt lemma2_bound(std::int64_t s) {
  if (s < 1) throw std::invalid_argument("lemma2_bound: s must be >= 1");
  return ipow(s, prime_pi(s));
}

std::vector<std::int64_t> scan_primes(const Pair& pair, PrimeSearch mode) {
  std::vector<std::int64_t> primes = prime_factors(pair.n);
  if (mode == PrimeSearch::Hypothesis) {
    for (std::int64_t q : prime_factors(pair.s + 1)) {
      if (std::find(primes.begin(), primes.end(), q) == primes.end()) primes.push_back(q);
    }
    std::sort(primes.begin(), primes.end());
  }
  return primes;
}

namespace {

// k = 1 stage for one pair: excluded as soon as the check holds at one
// scanned prime. Divisibility failures at a candidate prime just mean the
// lemma does not apply there; they never exclude.
bool t1_excluded(const Pair& pair, PrimeSearch mode, std::vector<PrimeOutcome>& outcomes) {
  LaguerrePair lp{pair.n, pair.s};
  for (std::int64_t p : scan_primes(pair, mode)) {
    ValuationProfile profile = valuation_profile(p, lp);
    PrimeOutcome po;
    po.p = p;
    po.outcome = ffl_check(profile, 0, 1);
    outcomes.push_back(po);
    if (po.outcome.holds) return true;
  }
  return false;
}

bool t4_excluded(const Pair& pair, PrimeSearch mode, std::vector<PrimeOutcome>& outcomes) {
  LaguerrePair lp{pair.n, pair.s};
  const std::int64_t k = pair.n / 2;
  for (std::int64_t p : scan_primes(pair, mode)) {
    ValuationProfile profile = valuation_profile(p, lp);
    PrimeOutcome po;
    po.p = p;
    po.outcome = ffl_check(profile, 1, k);
    outcomes.push_back(po);
    if (po.outcome.holds) return true;
  }
  return false;
}

}  // namespace

std::vector<Pair> filter_T1(const std::vector<Pair>& T, const PipelineConfig& config) {
  std::vector<Pair> survivors;
  for (const Pair& pair : T) {
    std::vector<PrimeOutcome> outcomes;
    if (!t1_excluded(pair, config.t1_search, outcomes)) survivors.push_back(pair);
  }
  return survivors;
}

XAssembly assemble_X(const std::vector<Pair>& T1, const PipelineConfig& config) {
  XAssembly out;
  for (const Pair& pair : T1) {
    if (pair.n == 2) {
      out.T2.push_back(pair);
    } else if (pair.n / 2 <= 1) {
      out.bypass.push_back(pair);  // the window [2, floor(n/2)] is empty
    } else {
      out.T3.push_back(pair);
    }
  }
  for (const Pair& pair : out.T2) {
    auto& checks = out.quad_checks[pair.s];
    if (!checks.empty()) continue;
    for (int sign : {+1, -1}) {
      QuadraticFamily family;
      family.s = pair.s;
      family.mode = config.mode;
      family.sign = sign;
      checks.push_back(exceptional_b1(family));
    }
  }
  for (const Pair& pair : out.T3) {
    std::vector<PrimeOutcome>& outcomes = out.t4_outcomes[pair];
    if (!t4_excluded(pair, config.t4_search, outcomes)) out.T4.push_back(pair);
  }
  out.X = out.T4;
  out.X.insert(out.X.end(), out.bypass.begin(), out.bypass.end());
  std::sort(out.X.begin(), out.X.end());
  return out;
}

PipelineResult run_pipeline(const PipelineConfig& config) {
  PipelineResult result;
  result.config = config;

  std::set<Pair> triple_pairs;
  for (const auto& t : config.triples) triple_pairs.insert(Pair{t[0], t[2]});

  // Stage T: conditions on smoothness, prime-power parts and the Kummer
  // divisibility of the constant term.
  for (std::int64_t s = 1; s <= config.s_max; ++s) {
    SmoothSplit split = smooth_candidates_split(s, config.n_cap);
    for (std::int64_t n : split.deferred) {
      if (n >= config.n_min) result.deferred.push_back(Pair{n, s});
    }
    for (std::int64_t n : condition4_filter(split.kept, s)) {
      if (n < config.n_min) continue;
      Pair pair{n, s};
      result.T.push_back(pair);
      SurvivorRecord rec;
      rec.pair = pair;
      rec.stage = Stage::T;
      rec.triple_pair = triple_pairs.count(pair) > 0;
      result.records[pair] = rec;
    }
  }
  result.partial = !result.deferred.empty();

  // Stage T1, the dominant scan. Pairs are independent work items; the
  // merge is deterministic because records land keyed by pair.
  {
    const int jobs = std::max(1, config.jobs);
    std::vector<Pair> pairs = result.T;
    std::vector<std::vector<PrimeOutcome>> all_outcomes(pairs.size());
    std::vector<char> excluded(pairs.size(), 0);
    auto worker = [&](std::size_t begin) {
      for (std::size_t i = begin; i < pairs.size(); i += static_cast<std::size_t>(jobs)) {
        excluded[i] = t1_excluded(pairs[i], config.t1_search, all_outcomes[i]) ? 1 : 0;
      }
    };
    if (jobs == 1) {
      worker(0);
    } else {
      std::vector<std::thread> threads;
      for (int t = 0; t < jobs; ++t) threads.emplace_back(worker, static_cast<std::size_t>(t));
      for (auto& th : threads) th.join();
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      SurvivorRecord& rec = result.records[pairs[i]];
      rec.t1_outcomes = std::move(all_outcomes[i]);
      if (!excluded[i]) {
        rec.stage = Stage::T1;
        result.T1.push_back(pairs[i]);
      }
    }
  }

  // Remaining stages.
  XAssembly assembly = assemble_X(result.T1, config);
  result.T2 = std::move(assembly.T2);
  result.T3 = std::move(assembly.T3);
  result.T4 = std::move(assembly.T4);
  result.X = std::move(assembly.X);
  result.quad_checks = std::move(assembly.quad_checks);
  for (const Pair& pair : result.T2) result.records[pair].stage = Stage::T2;
  for (const Pair& pair : result.T3) result.records[pair].stage = Stage::T3;
  for (auto& [pair, outcomes] : assembly.t4_outcomes) {
    result.records[pair].t4_outcomes = std::move(outcomes);
  }
  for (const Pair& pair : result.T4) result.records[pair].stage = Stage::T4;
  for (const Pair& pair : result.X) result.records[pair].stage = Stage::X;

  for (const Pair& pair : result.X) {
    if (BigInt(static_cast<long>(pair.n)) > lemma2_bound(pair.s)) {
      result.lemma2_violations.push_back(pair);
    }
  }
  return result;
}

}  // namespace lagverify

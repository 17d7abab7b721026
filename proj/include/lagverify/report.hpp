#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "lagverify/baseline.hpp"
#include "lagverify/enumeration.hpp"
#include "lagverify/irreducibility.hpp"

namespace lagverify {

using Json = nlohmann::ordered_json;

// Exit codes shared by every command: 0 clean match, 2 usage/config error,
// 3 run completed with findings in the discrepancy ledger.
inline constexpr int kExitMatch = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitFindings = 3;

struct CommandResult {
  Json report;       // deterministic: no clocks, stable ordering
  int exit_code = kExitMatch;
  std::string text;  // human rendering, may include timings
};

struct TheoremOptions {
  PipelineConfig config;
};

// Runs the full pipeline, diffs every stage against the printed lists and
// assembles the discrepancy ledger.
CommandResult run_theorem1(const TheoremOptions& options);

// The result bundle for reuse by the corollary command.
struct TheoremRun {
  PipelineResult pipeline;
  Json report;
  std::vector<std::string> discrepancies;
};
TheoremRun run_theorem1_core(const PipelineConfig& config);

struct Lemma5Options {
  Normalization mode = Normalization::Printed;
  bool both_modes = true;      // report the other normalization alongside
  std::int64_t brute_range = 10'000;
};
CommandResult run_lemma5(const Lemma5Options& options);

struct CorollaryOptions {
  PipelineConfig config;
  int budget = 12;
  std::int64_t degree_cap = 300;
  // Test hook: replaces the polynomial certified for one pair.
  std::map<Pair, PolynomialZ> overrides;
};
CommandResult run_corollary(const CorollaryOptions& options);

struct CertifyOptions {
  std::string path;
  int budget = 12;
};
CommandResult run_certify(const CertifyOptions& options);

CommandResult run_inspect_np(std::int64_t n, std::int64_t s, std::int64_t p);

struct EnumerateOptions {
  PipelineConfig config;
};
// Emits one JSON line per pair record to `out`; returns the summary result.
CommandResult run_enumerate(const EnumerateOptions& options, std::ostream& out);

// Shared serialization helpers.
Json pairs_to_json(const std::vector<Pair>& pairs);
Json certificate_to_json(const IrredCertificate& cert);

}  // namespace lagverify

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lagverify/report.hpp"

namespace {

using namespace lagverify;

std::int64_t default_ncap() {
  if (const char* env = std::getenv("LAGVERIFY_NCAP")) {
    try {
      return std::stoll(env);
    } catch (...) {
      throw CLI::ValidationError("LAGVERIFY_NCAP", "not an integer");
    }
  }
  return 10'000'000;
}

Normalization parse_mode(const std::string& mode) {
  if (mode == "printed") return Normalization::Printed;
  if (mode == "derived") return Normalization::Derived;
  throw CLI::ValidationError("--mode", "expected 'printed' or 'derived'");
}

PrimeSearch parse_search(const std::string& search) {
  if (search == "divisors") return PrimeSearch::Divisors;
  if (search == "hypothesis") return PrimeSearch::Hypothesis;
  throw CLI::ValidationError("--primes", "expected 'divisors' or 'hypothesis'");
}

void emit(const CommandResult& result, bool json) {
  if (json) {
    std::cout << result.report.dump(2) << "\n";
  } else {
    std::cout << result.text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic verification of the linear-factor enumeration for generalized "
               "Laguerre polynomials"};
  app.require_subcommand(1);
  bool json = false;

  std::int64_t smax = 30;
  std::int64_t ncap = 0;  // resolved after parse: flag > env > default
  std::string mode = "printed";
  std::string t1_primes = "hypothesis";
  std::string t4_primes = "divisors";
  int jobs = 1;
  int budget = 12;

  auto add_pipeline_flags = [&](CLI::App* cmd) {
    cmd->add_option("--smax", smax, "largest shift to scan")->capture_default_str();
    cmd->add_option("--ncap", ncap, "largest degree the scan materializes profiles for");
    cmd->add_option("--mode", mode, "degree-2 normalization: printed|derived")
        ->capture_default_str();
    cmd->add_option("--t1-primes", t1_primes, "k=1 stage prime search: divisors|hypothesis")
        ->capture_default_str();
    cmd->add_option("--t4-primes", t4_primes, "l=1 stage prime search: divisors|hypothesis")
        ->capture_default_str();
    cmd->add_option("--jobs", jobs, "parallel scan workers")->capture_default_str();
  };

  auto* theorem1 = app.add_subcommand("theorem1", "run the full enumeration pipeline");
  add_pipeline_flags(theorem1);

  auto* lemma5 = app.add_subcommand("lemma5", "analyze the degree-2 family");
  lemma5->add_option("--mode", mode, "normalization to lead with: printed|derived")
      ->capture_default_str();

  auto* corollary = app.add_subcommand("corollary", "certify the final-set polynomials");
  add_pipeline_flags(corollary);
  corollary->add_option("--budget", budget, "good primes per certification")
      ->capture_default_str();

  std::string certify_path;
  auto* certify_cmd = app.add_subcommand("certify", "certify polynomials from a file");
  certify_cmd->add_option("file", certify_path, "one polynomial per line, ascending coefficients")
      ->required();
  certify_cmd->add_option("--budget", budget, "good primes per certification")
      ->capture_default_str();

  std::int64_t np_n = 0, np_s = 0, np_p = 0;
  auto* inspect = app.add_subcommand("inspect-np", "print one polygon and its exclusion checks");
  inspect->add_option("n", np_n, "degree")->required();
  inspect->add_option("s", np_s, "shift")->required();
  inspect->add_option("p", np_p, "prime")->required();

  auto* enumerate = app.add_subcommand("enumerate", "dump per-pair records as JSON lines");
  add_pipeline_flags(enumerate);

  for (CLI::App* cmd : {theorem1, lemma5, corollary, certify_cmd, inspect, enumerate}) {
    cmd->add_flag("--json,!--text", json, "emit the JSON report instead of text");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    PipelineConfig config;
    config.s_max = smax;
    config.n_cap = ncap > 0 ? ncap : default_ncap();
    config.mode = parse_mode(mode);
    config.t1_search = parse_search(t1_primes);
    config.t4_search = parse_search(t4_primes);
    config.jobs = jobs;
    if (config.s_max < 1 || config.n_cap < 2 || jobs < 1) {
      std::cerr << "lagverify: invalid configuration\n";
      return kExitUsage;
    }

    if (theorem1->parsed()) {
      CommandResult result = run_theorem1(TheoremOptions{config});
      emit(result, json);
      return result.exit_code;
    }
    if (lemma5->parsed()) {
      Lemma5Options options;
      options.mode = config.mode;
      CommandResult result = run_lemma5(options);
      emit(result, json);
      return result.exit_code;
    }
    if (corollary->parsed()) {
      CorollaryOptions options;
      options.config = config;
      options.budget = budget;
      CommandResult result = run_corollary(options);
      emit(result, json);
      return result.exit_code;
    }
    if (certify_cmd->parsed()) {
      CommandResult result = run_certify(CertifyOptions{certify_path, budget});
      emit(result, json);
      return result.exit_code;
    }
    if (inspect->parsed()) {
      if (!is_prime_int(np_p)) {
        std::cerr << "lagverify: inspect-np requires a prime p\n";
        return kExitUsage;
      }
      if (np_n < 1 || np_s < 1) {
        std::cerr << "lagverify: inspect-np requires n >= 1 and s >= 1\n";
        return kExitUsage;
      }
      CommandResult result = run_inspect_np(np_n, np_s, np_p);
      emit(result, json);
      return result.exit_code;
    }
    if (enumerate->parsed()) {
      CommandResult result = run_enumerate(EnumerateOptions{config}, std::cout);
      if (json) std::cerr << result.report.dump(2) << "\n";
      return result.exit_code;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "lagverify: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "lagverify: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "lagverify: error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}

// toepsense: command-line front end. JSON on stdout, a short summary on
// stderr. Exit status 0 when the run verified, 2 when it did not, 1 on
// usage errors.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "toepsense/commands.hpp"
#include "toepsense/error.hpp"
#include "toepsense/fixtures.hpp"

using namespace toepsense;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUnverified = 2;

struct Common {
  std::uint64_t prime = kMersenne61;
  std::size_t trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;

  OracleConfig oracle() const {
    if (!is_prime(prime)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "--prime " + std::to_string(prime) + " is not prime");
    }
    OracleConfig cfg{trials, seed, PrimeField(prime)};
    cfg.validate();
    return cfg;
  }
};

// Shared --prime/--trials/--seed with the env fallbacks. CLI11 gives
// flags priority over the environment.
void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--prime", c.prime, "field modulus, a prime below 2^62")
      ->envname("TOEPSENSE_PRIME")
      ->capture_default_str();
  sub->add_option("--trials", c.trials, "oracle trials per rank")
      ->envname("TOEPSENSE_TRIALS")
      ->capture_default_str();
  sub->add_option("--seed", c.seed, "base seed")
      ->envname("TOEPSENSE_SEED")
      ->capture_default_str();
}

struct PermArgs {
  std::size_t n = 0;
  std::size_t d = 0;
  std::string perm;
  std::int64_t power = 1;

  Permutation parse() const {
    Permutation sigma = parse_permutation(perm, n);
    return power == 1 ? sigma : sigma.pow(power);
  }
};

void add_perm(CLI::App* sub, PermArgs& p, bool with_power = false) {
  sub->add_option("--n", p.n, "ambient dimension")->required();
  sub->add_option("--d", p.d, "subspace dimension")->required();
  sub->add_option("--perm", p.perm, "one-line image, e.g. \"1 3 4 5 6 2\"")->required();
  if (with_power) sub->add_option("--power", p.power, "use sigma^power");
}

int emit(std::string_view command, const CommandResult& r) {
  std::cout << envelope(command, r.payload).dump(2) << '\n';
  std::cerr << r.summary;
  return r.verified ? kExitOk : kExitUnverified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toeplitz unlabeled-sensing analysis"};
  app.require_subcommand(1);

  Common common;
  PermArgs pa;

  auto* analyze = app.add_subcommand("analyze", "shift-rank table, prediction and oracle");
  add_perm(analyze, pa);
  add_common(analyze, common);

  bool consult_oracle = false;
  auto* usp = app.add_subcommand("usp", "three-valued USP verdict");
  add_perm(usp, pa);
  add_common(usp, common);
  usp->add_flag("--oracle", consult_oracle, "also report the probabilistic check");

  auto* orank = app.add_subcommand("oracle-rank", "sampled rank of [V, PV]");
  add_perm(orank, pa, true);
  add_common(orank, common);

  bool with_terms = false;
  auto* symdet = app.add_subcommand("symdet", "symbolic det [U, PU] for n = 2d");
  add_perm(symdet, pa, true);
  symdet->add_flag("--terms", with_terms, "include every term");

  HarnessConfig hc;
  std::optional<std::string> resume;
  bool long_run = false;
  bool timing = false;
  bool progress = false;
  auto* conj = app.add_subcommand("conjecture", "exhaustive check over S_{2d}");
  conj->add_option("--d", hc.d, "subspace dimension")->required();
  conj->add_option("--n", hc.n, "ambient dimension (needs --exploratory if not 2d)");
  conj->add_flag("--exploratory", hc.exploratory, "allow n != 2d; results are not a verification");
  conj->add_option("--workers", hc.workers, "worker threads")->capture_default_str();
  conj->add_option("--resume", resume, "checkpoint file, read if present and rewritten");
  conj->add_option("--checkpoint-every", hc.checkpoint_every, "permutations between checkpoints")
      ->capture_default_str();
  conj->add_flag("--symmetry", hc.symmetry_reduction, "classify one of sigma, w sigma w");
  conj->add_flag("--long", long_run, "permit n >= 10 (hours-scale on few cores)");
  conj->add_flag("--timing", timing, "include wall time and worker count in the JSON");
  conj->add_flag("--progress", progress, "progress on stderr");
  add_common(conj, common);

  std::uint64_t demo_seed = kDefaultSeed;
  std::string mode_text = "generic";
  bool list_candidates = false;
  auto* demo = app.add_subcommand("demo", "brute-force recovery on a sampled instance");
  add_perm(demo, pa);
  demo->add_option("--prime", common.prime)->envname("TOEPSENSE_PRIME")->capture_default_str();
  demo->add_option("--seed", demo_seed, "instance seed")
      ->envname("TOEPSENSE_SEED")
      ->capture_default_str();
  demo->add_option("--mode", mode_text, "generic | witness")
      ->check(CLI::IsMember({"generic", "witness"}))
      ->capture_default_str();
  demo->add_flag("--candidates", list_candidates, "list every consistent permutation");

  std::string fixture_run;
  bool fixture_list = false;
  auto* fixtures = app.add_subcommand("fixtures", "stored worked examples");
  auto* run_opt = fixtures->add_option("--run", fixture_run, "fixture name or 'all'");
  auto* list_opt = fixtures->add_flag("--list", fixture_list, "list fixture names");
  run_opt->excludes(list_opt);
  fixtures->require_option(1);
  add_common(fixtures, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return emit("analyze", analyze_command(pa.parse(), pa.d, common.oracle()));
    if (*usp) {
      return emit("usp", usp_command(pa.parse(), pa.d, common.oracle(), consult_oracle));
    }
    if (*orank) return emit("oracle-rank", oracle_rank_command(pa.parse(), pa.d, common.oracle()));
    if (*symdet) return emit("symdet", symdet_command(pa.parse(), pa.d, with_terms));
    if (*conj) {
      hc.oracle = common.oracle();
      hc.checkpoint_path = resume;
      const std::size_t n = hc.n == 0 ? 2 * hc.d : hc.n;
      if (n >= 10 && !long_run) {
        throw Error(ErrorCode::kGuardExceeded,
                    "n = " + std::to_string(n) + " enumerates " + std::to_string(factorial(n)) +
                        " permutations; pass --long to run it");
      }
      if (progress) {
        hc.progress = [](std::uint64_t done, std::uint64_t total) {
          std::cerr << "\r" << done << " / " << total << std::flush;
          if (done == total) std::cerr << '\n';
        };
      }
      return emit("conjecture", conjecture_command(hc, timing));
    }
    if (*demo) {
      const auto mode = mode_text == "witness" ? CoefficientMode::kWitness
                                               : CoefficientMode::kGeneric;
      if (!is_prime(common.prime)) {
        throw Error(ErrorCode::kInvalidArgument, "--prime is not prime");
      }
      return emit("demo", demo_command(pa.parse(), pa.d, demo_seed, PrimeField(common.prime),
                                       mode, list_candidates));
    }
    if (*fixtures) {
      if (fixture_list) {
        CommandResult r;
        r.payload = {{"fixtures", fixture_names()}};
        for (const auto& name : fixture_names()) r.summary += name + '\n';
        return emit("fixtures", r);
      }
      return emit("fixtures", fixtures_command(fixture_run, common.oracle()));
    }
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::kInvariantViolation:
      case ErrorCode::kRankDeficient:
        return kExitUnverified;
      default:
        return kExitUsage;
    }
  }
  return kExitUsage;
}

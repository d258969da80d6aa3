#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "toepsense/harness.hpp"
#include "toepsense/oracle.hpp"
#include "toepsense/permutation.hpp"
#include "toepsense/report.hpp"
#include "toepsense/sensing_demo.hpp"

namespace toepsense {

// Payload builders behind each CLI subcommand. Each returns the JSON body
// (without the schema envelope) and whether the run verified.
struct CommandResult {
  json payload;
  bool verified = true;
  std::string summary;  // human-readable, for stderr
};

CommandResult analyze_command(const Permutation& sigma, std::size_t d,
                              const OracleConfig& cfg);
CommandResult usp_command(const Permutation& sigma, std::size_t d,
                          const OracleConfig& cfg, bool consult_oracle);
CommandResult oracle_rank_command(const Permutation& sigma, std::size_t d,
                                  const OracleConfig& cfg);
CommandResult symdet_command(const Permutation& sigma, std::size_t d, bool with_terms);
CommandResult conjecture_command(const HarnessConfig& cfg, bool include_timing);
CommandResult demo_command(const Permutation& sigma, std::size_t d, std::uint64_t seed,
                           const PrimeField& field, CoefficientMode mode,
                           bool list_candidates);
// `which` is a fixture name or "all".
CommandResult fixtures_command(const std::string& which, const OracleConfig& cfg);

}  // namespace toepsense

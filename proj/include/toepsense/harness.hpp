#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toepsense/oracle.hpp"
#include "toepsense/permutation.hpp"
#include "toepsense/shift_analysis.hpp"

namespace toepsense {

// Trials used before a rank below 2d is reported.
inline constexpr std::size_t kEscalatedTrials = 5;

struct ClassificationRecord {
  std::uint64_t index = 0;  // lexicographic rank of sigma
  Permutation sigma;
  std::size_t r0 = 0;
  std::vector<ShiftWitness> eligible;
  std::optional<std::size_t> predicted_rank;
  std::size_t oracle_rank = 0;
  std::size_t trials_used = 0;
  bool covered = false;
  // predicted == oracle whenever a prediction exists
  bool consistent = true;
  // 2 when sigma stands in for itself and its reversal-conjugate
  std::uint64_t orbit_size = 1;
};

/// Full record for sigma on S_{2d} with the oracle seeded from cfg.seed.
/// The oracle is re-run with kEscalatedTrials (extending the same sample
/// stream) before any rank below 2d is recorded.
ClassificationRecord classify(const Permutation& sigma, std::size_t d,
                              const OracleConfig& cfg);

struct HarnessConfig {
  std::size_t d = 3;
  // 0 means 2d. Anything else needs `exploratory`.
  std::size_t n = 0;
  bool exploratory = false;
  OracleConfig oracle{};
  std::size_t workers = 1;
  // Classify only one of sigma and w sigma w (w: i -> n+1-i), weighting it
  // by the orbit size.
  bool symmetry_reduction = false;
  std::size_t block_size = 10000;
  std::uint64_t checkpoint_every = 100000;
  // Read on start when present; rewritten as blocks complete.
  std::optional<std::string> checkpoint_path;
  std::function<void(std::uint64_t done, std::uint64_t total)> progress;
};

struct HarnessReport {
  std::size_t n = 0;
  std::size_t d = 0;
  std::uint64_t total = 0;
  std::map<std::size_t, std::uint64_t> rank_histogram;
  std::uint64_t covered = 0;
  std::uint64_t not_covered = 0;
  std::uint64_t classified = 0;  // records actually evaluated
  std::uint64_t resumed = 0;     // permutations restored from a checkpoint
  std::vector<ClassificationRecord> counterexamples;
  std::vector<ClassificationRecord> inconsistencies;
  bool in_conjecture_scope = true;
  bool symmetry_reduction = false;
  double per_permutation_error_bound = 0;
  double wall_seconds = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t prime = 0;
  std::size_t workers = 0;

  bool verified() const noexcept {
    return counterexamples.empty() && inconsistencies.empty();
  }
};

/// Classifies all n! permutations (n = 2d) and collects the ones with
/// oracle rank below 2d that no eligible shift covers. Deterministic for a
/// given seed regardless of worker count.
HarnessReport verify_conjecture(const HarnessConfig& cfg);

/// w sigma w with w the order reversal.
Permutation reversal_conjugate(const Permutation& sigma);

}  // namespace toepsense

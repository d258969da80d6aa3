#pragma once

#include <cstddef>
#include <cstdint>

#include "toepsense/field.hpp"
#include "toepsense/matrix.hpp"
#include "toepsense/permutation.hpp"

namespace toepsense {

/// splitmix64 finalizer over (base, index); gives each task its own
/// reproducible stream independent of scheduling.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept;

inline constexpr std::size_t kDefaultTrials = 3;
inline constexpr std::uint64_t kDefaultSeed = 20250101;

// Probabilistic stand-in for "V generic Toeplitz". A sampled rank can only
// fall short of the generic rank, so ranks are maxima over trials and the
// derived intersection dimensions are minima.
struct OracleConfig {
  std::size_t trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;
  PrimeField field{};

  void validate() const;
};

/// max over trials of rank [V, P V] with V a sampled n x d Toeplitz matrix.
std::size_t oracle_rank_vpv(const Permutation& sigma, std::size_t n,
                            std::size_t d, const OracleConfig& cfg);

/// Same as above on an explicit V; a single sample.
std::size_t sampled_rank_vpv(const Permutation& sigma, const ExactMatrix& v);

struct IntersectionDims {
  // dim(C(V) meet pi(C(V))) = 2d - rank [V, PV]
  std::size_t dim_meet = 0;
  // dim(N(I - P) meet C(V)) = dim N + d - rank [K, V]
  std::size_t dim_fixed_meet = 0;

  friend bool operator==(const IntersectionDims&, const IntersectionDims&) = default;
};

IntersectionDims oracle_intersection_dims(const Permutation& sigma,
                                          std::size_t n, std::size_t d,
                                          const OracleConfig& cfg);

/// rank [V, PV] == 2d - max(d - r0, 0) on the oracle rank.
bool oracle_usp(const Permutation& sigma, std::size_t n, std::size_t d,
                const OracleConfig& cfg);

/// For W of full column rank d0: every trial gives
/// rank [W, V] = min(d0 + d, n). Throws kRankDeficient otherwise.
bool check_augmented_rank(const ExactMatrix& w, std::size_t d,
                          const OracleConfig& cfg);

/// For Q of rank r <= d: some trial's Q V has an r x d row-submatrix whose
/// C(d, r) r-minors are all nonzero. A nonzero evaluation certifies the
/// corresponding minor polynomials are nonzero. Throws kInvalidArgument
/// when r > d.
bool check_all_minors_nonzero(const ExactMatrix& q, std::size_t d,
                              const OracleConfig& cfg);

}  // namespace toepsense

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "toepsense/permutation.hpp"

namespace toepsense {

// Residual ranks are ranks of integer matrices with entries in {-1, 0, 1}
// and at most two nonzeros per row, so every nonzero minor is bounded by
// 2^{n/2}. Computing them over F_{2^61-1} is therefore exact for n below
// this limit.
inline constexpr std::size_t kMaxAnalysisSize = 64;

struct ShiftWitness {
  int t = 0;
  std::size_t r_t = 0;

  friend bool operator==(const ShiftWitness&, const ShiftWitness&) = default;
};

enum class UspVerdict { kHolds, kFails, kUnknown };

std::string_view to_string(UspVerdict v);

/// Deterministic per-permutation table behind the rank prediction and the
/// USP verdict. Residuals cover every |t| <= floor(d/2), ordered by t.
struct ShiftAnalysis {
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t r0 = 0;
  std::vector<ShiftWitness> residuals;
  std::vector<ShiftWitness> eligible;
  std::optional<std::size_t> predicted_rank;
  UspVerdict usp = UspVerdict::kUnknown;
  std::string certificate;
};

struct RankPrediction {
  std::size_t rank = 0;
  std::vector<ShiftWitness> witnesses;
};

/// rank(I - P) = n - #cycles.
std::size_t r_zero(const Permutation& sigma);

/// Rank of rows t+1..n of P - J^t (t >= 0), or rows 1..n+t of
/// P - (J^T)^{-t} (t < 0). One-based row ranges; requires |t| < n.
std::size_t residual_rank(const Permutation& sigma, int t);

/// Every t with |t| <= floor(d/2) and r_t <= d - 2|t|, ordered by |t| and
/// then negative before positive. Requires n >= 2d.
std::vector<ShiftWitness> eligible_shifts(const Permutation& sigma, std::size_t d);

/// d + r_t + 2|t| for the eligible shifts, or nullopt when none exist.
/// Throws kInvariantViolation naming both witnesses if two eligible shifts
/// disagree.
std::optional<RankPrediction> predict_rank(const Permutation& sigma, std::size_t d);

/// Three-valued USP verdict from the shift-rank criterion alone; never
/// consults the randomized oracle.
ShiftAnalysis decide_usp(const Permutation& sigma, std::size_t d);

/// max(d - r0, 0): generic dimension of N(I - P) intersected with C(V).
std::size_t expected_fixed_intersection_dim(const Permutation& sigma, std::size_t d);

/// Circular distance min(t mod n, n - t mod n).
std::size_t circular_distance(std::int64_t t, std::size_t n);

/// Generic rank of [V, P^t V] for the n-cycle i -> i+1:
/// min(2d, d + 2 * circular_distance(t, n)).
std::size_t cyclic_rank_formula(std::int64_t t, std::size_t n, std::size_t d);

}  // namespace toepsense

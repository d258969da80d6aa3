#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "toepsense/matrix.hpp"
#include "toepsense/permutation.hpp"
#include "toepsense/toeplitz.hpp"

namespace toepsense {

inline constexpr std::size_t kMaxDemoSize = 8;

// kGeneric draws the coefficients uniformly. kWitness draws them from
// {c : P V c in C(V)}, i.e. the signals whose shuffled image stays in the
// subspace; a second explanation exists there exactly when USP fails.
enum class CoefficientMode { kGeneric, kWitness };

/// Noiseless shuffled observation of a Toeplitz-subspace signal.
struct SensingInstance {
  ToeplitzSpec spec;
  std::vector<FieldScalar> coeffs;
  Permutation sigma;
  std::vector<FieldScalar> observation;  // P V c

  std::vector<FieldScalar> signal() const;  // V c
};

SensingInstance make_instance(ToeplitzSpec spec, std::vector<FieldScalar> coeffs,
                              Permutation sigma);

SensingInstance generate_instance(PrimeField field, std::size_t n, std::size_t d,
                                  const Permutation& sigma, std::uint64_t seed,
                                  CoefficientMode mode = CoefficientMode::kGeneric);

struct Explanation {
  Permutation sigma;
  std::vector<FieldScalar> signal;
};

struct ConsistentSet {
  std::vector<Explanation> candidates;  // lexicographic order of sigma
  std::size_t distinct_signals = 0;
};

/// Every sigma' in S_n whose inverse applied to the observation lands in
/// C(V), tested by rank [V, w] = rank V. Requires n <= 8.
ConsistentSet enumerate_consistent(const SensingInstance& inst);

/// Whether C(V) meet pi(C(V)) equals N(I - P) meet C(V) for the instance's
/// sampled V and the permutation sigma_alt, both sides by rank.
bool check_pairwise_usp(const SensingInstance& inst, const Permutation& sigma_alt);

}  // namespace toepsense

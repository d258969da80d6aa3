#include "toepsense/oracle.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "toepsense/combinations.hpp"
#include "toepsense/error.hpp"
#include "toepsense/shift_analysis.hpp"
#include "toepsense/toeplitz.hpp"

namespace toepsense {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept {
  std::uint64_t z = base ^ (index + 0x9e3779b97f4a7c15ULL + (base << 6) + (base >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void OracleConfig::validate() const {
  if (trials < 1) {
    throw Error(ErrorCode::kInvalidArgument, "oracle trials must be >= 1");
  }
}

namespace {

void check_shape(const Permutation& sigma, std::size_t n, std::size_t d) {
  if (sigma.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "permutation has " + std::to_string(sigma.size()) +
                    " entries but n=" + std::to_string(n));
  }
  if (d < 1 || n < d) {
    throw Error(ErrorCode::kInvalidArgument, "oracle requires n >= d >= 1");
  }
}

ExactMatrix sample_v(const OracleConfig& cfg, std::size_t n, std::size_t d,
                     std::mt19937_64& rng) {
  return build_toeplitz(sample_toeplitz(cfg.field, n, d, rng));
}

}  // namespace

std::size_t sampled_rank_vpv(const Permutation& sigma, const ExactMatrix& v) {
  return rank(hconcat(v, permute_rows(sigma, v)));
}

std::size_t oracle_rank_vpv(const Permutation& sigma, std::size_t n,
                            std::size_t d, const OracleConfig& cfg) {
  check_shape(sigma, n, d);
  cfg.validate();
  std::mt19937_64 rng(cfg.seed);
  const std::size_t cap = std::min(n, 2 * d);
  std::size_t best = 0;
  for (std::size_t trial = 0; trial < cfg.trials && best < cap; ++trial) {
    best = std::max(best, sampled_rank_vpv(sigma, sample_v(cfg, n, d, rng)));
  }
  return best;
}

IntersectionDims oracle_intersection_dims(const Permutation& sigma,
                                          std::size_t n, std::size_t d,
                                          const OracleConfig& cfg) {
  check_shape(sigma, n, d);
  cfg.validate();
  const PrimeField& f = cfg.field;
  const ExactMatrix fixed_space =
      nullspace_basis(ExactMatrix::identity(f, n) - perm_matrix(f, sigma));
  const std::size_t fixed_dim = fixed_space.cols();

  std::mt19937_64 rng(cfg.seed);
  std::size_t best_vpv = 0;
  std::size_t best_kv = 0;
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    const ExactMatrix v = sample_v(cfg, n, d, rng);
    best_vpv = std::max(best_vpv, sampled_rank_vpv(sigma, v));
    best_kv = std::max(best_kv, rank(hconcat(fixed_space, v)));
  }
  return {2 * d - best_vpv, fixed_dim + d - best_kv};
}

bool oracle_usp(const Permutation& sigma, std::size_t n, std::size_t d,
                const OracleConfig& cfg) {
  if (n < 2 * d) {
    throw Error(ErrorCode::kInvalidArgument, "oracle_usp requires n >= 2d");
  }
  const std::size_t fixed = expected_fixed_intersection_dim(sigma, d);
  return oracle_rank_vpv(sigma, n, d, cfg) == 2 * d - fixed;
}

bool check_augmented_rank(const ExactMatrix& w, std::size_t d,
                          const OracleConfig& cfg) {
  cfg.validate();
  const std::size_t n = w.rows();
  const std::size_t d0 = w.cols();
  if (rank(w) != d0) {
    throw Error(ErrorCode::kRankDeficient,
                "W must have full column rank " + std::to_string(d0) +
                    ", has rank " + std::to_string(rank(w)));
  }
  if (d < 1 || n < d) {
    throw Error(ErrorCode::kInvalidArgument, "augmented rank requires n >= d >= 1");
  }
  const std::size_t target = std::min(d0 + d, n);
  std::mt19937_64 rng(cfg.seed);
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    if (rank(hconcat(w, sample_v(cfg, n, d, rng))) != target) return false;
  }
  return true;
}

bool check_all_minors_nonzero(const ExactMatrix& q, std::size_t d,
                              const OracleConfig& cfg) {
  cfg.validate();
  const std::size_t r = rank(q);
  if (r > d) {
    throw Error(ErrorCode::kInvalidArgument,
                "rank(Q) = " + std::to_string(r) + " exceeds d = " + std::to_string(d));
  }
  if (r == 0) return true;
  const std::size_t n = q.cols();
  if (n < d) {
    throw Error(ErrorCode::kInvalidArgument, "Q must have at least d columns");
  }

  std::mt19937_64 rng(cfg.seed);
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    const ExactMatrix qv = q * sample_v(cfg, n, d, rng);
    const bool found = !for_each_combination(
        qv.rows(), r, [&](const std::vector<std::size_t>& rows) {
          const ExactMatrix sub = qv.select_rows(rows);
          const bool all_nonzero = for_each_combination(
              d, r, [&](const std::vector<std::size_t>& cols) {
                return determinant(sub.select_cols(cols)).value != 0;
              });
          return !all_nonzero;  // stop once a good row set turns up
        });
    if (found) return true;
  }
  return false;
}

}  // namespace toepsense

#include <numeric>
#include <random>

#include "doctest.h"
#include "toepsense/error.hpp"
#include "toepsense/oracle.hpp"
#include "toepsense/permutation.hpp"
#include "toepsense/shift_analysis.hpp"
#include "toepsense/toeplitz.hpp"

using namespace toepsense;

TEST_CASE("seed derivation is stable and spreads indices") {
  CHECK(derive_seed(1, 2) == derive_seed(1, 2));
  CHECK(derive_seed(1, 2) != derive_seed(1, 3));
  CHECK(derive_seed(1, 2) != derive_seed(2, 2));
}

TEST_CASE("config validation") {
  OracleConfig cfg;
  cfg.trials = 0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg.trials = 1;
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("oracle rank on the worked examples") {
  const OracleConfig cfg;
  CHECK(oracle_rank_vpv(Permutation::from_one_based({1, 3, 4, 5, 6, 2}), 6, 3, cfg) == 6);
  CHECK(oracle_rank_vpv(Permutation::from_one_based({3, 1, 2, 5, 6, 4}), 6, 3, cfg) == 6);
  CHECK(oracle_rank_vpv(Permutation::from_one_based({3, 4, 5, 6, 1, 2}), 6, 3, cfg) == 6);
  CHECK(oracle_rank_vpv(Permutation::identity(6), 6, 3, cfg) == 3);
  // same answer in a 31-bit field
  OracleConfig small;
  small.field = PrimeField(kMersenne31);
  CHECK(oracle_rank_vpv(Permutation::from_one_based({1, 3, 4, 5, 6, 2}), 6, 3, small) == 6);
}

TEST_CASE("sampled rank on an explicit V") {
  const PrimeField f;
  const ExactMatrix v = build_toeplitz(sample_toeplitz(f, 6, 3, 42));
  CHECK(sampled_rank_vpv(Permutation::identity(6), v) == 3);
  CHECK(sampled_rank_vpv(Permutation::cyclic_shift(6, 1), v) == 5);
  CHECK_THROWS_AS(sampled_rank_vpv(Permutation::identity(5), v), Error);
}

TEST_CASE("fixed intersection has dimension max(d - r0, 0) over S_6") {
  const OracleConfig cfg;
  for (const Permutation& sigma : enumerate_permutations(6)) {
    const IntersectionDims dims = oracle_intersection_dims(sigma, 6, 3, cfg);
    CHECK(dims.dim_fixed_meet == expected_fixed_intersection_dim(sigma, 3));
    CHECK(dims.dim_fixed_meet <= dims.dim_meet);
    CHECK(dims.dim_meet == 6 - oracle_rank_vpv(sigma, 6, 3, cfg));
  }
}

TEST_CASE("augmented rank reaches min(d0 + d, n)") {
  const PrimeField f;
  std::mt19937_64 rng(5);
  OracleConfig cfg;
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = 4 + rng() % 5, d = 1 + rng() % (n / 2), d0 = 1 + rng() % n;
    cfg.seed = rng();
    const ExactMatrix w = random_matrix(f, n, d0, rng);
    CHECK(check_augmented_rank(w, d, cfg));
  }
  // W = V itself is not generic with respect to V
  const ExactMatrix v = build_toeplitz(sample_toeplitz(f, 6, 2, cfg.seed));
  CHECK_THROWS_AS(check_augmented_rank(hconcat(v, v), 2, cfg), Error);
}

TEST_CASE("minors of QV for low-rank Q") {
  const PrimeField f;
  std::mt19937_64 rng(9);
  OracleConfig cfg;
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = 4 + rng() % 4, d = 2 + rng() % 2, r = 1 + rng() % d;
    cfg.seed = rng();
    const ExactMatrix q = random_matrix(f, n, r, rng) * random_matrix(f, r, n, rng);
    CHECK(check_all_minors_nonzero(q, d, cfg));
  }
  CHECK(check_all_minors_nonzero(ExactMatrix(f, 4, 6), 3, cfg));
  CHECK_THROWS_AS(check_all_minors_nonzero(ExactMatrix::identity(f, 6), 3, cfg), Error);
}

TEST_CASE("documented oracle cases") {
  const PrimeField f;
  const OracleConfig cfg;
  const Permutation ex1 = Permutation::from_one_based({1, 3, 4, 5, 6, 2});
  const Permutation swap = Permutation::from_one_based({2, 1, 3, 4, 5, 6});
  CHECK(r_zero(Permutation::cyclic_shift(7, 1)) == 6);
  CHECK(oracle_intersection_dims(Permutation::identity(6), 6, 3, cfg) == IntersectionDims{3, 3});
  CHECK(oracle_intersection_dims(ex1, 6, 3, cfg) == IntersectionDims{0, 0});
  CHECK(oracle_intersection_dims(swap, 6, 3, cfg) == IntersectionDims{2, 2});
  CHECK(oracle_usp(ex1, 6, 3, cfg));
  CHECK(oracle_usp(Permutation::identity(6), 6, 3, cfg));
  CHECK_FALSE(oracle_usp(Permutation::cyclic_shift(6, 1), 6, 3, cfg));

  // coordinate subspaces and the fixed space of Example 1
  for (std::size_t d0 = 1; d0 <= 6; ++d0) {
    std::vector<std::size_t> cols(d0);
    std::iota(cols.begin(), cols.end(), std::size_t{0});
    CHECK(check_augmented_rank(ExactMatrix::identity(f, 6).select_cols(cols), 3, cfg));
  }
  const ExactMatrix k = nullspace_basis(ExactMatrix::identity(f, 6) - perm_matrix(f, ex1));
  CHECK(k.cols() == 2);
  CHECK(check_augmented_rank(k, 3, cfg));
  CHECK(rank(hconcat(k, build_toeplitz(sample_toeplitz(f, 6, 3, 1)))) == 5);

  // a single nonzero row, and the kept rows of P - J for Example 1
  ExactMatrix row(f, 1, 6);
  row.at(0, 2) = f.one();
  CHECK(check_all_minors_nonzero(row, 3, cfg));
  const ExactMatrix pj = (perm_matrix(f, ex1) - shift_matrix(f, 6, 1)).row_block(1, 5);
  CHECK(rank(pj) == 1);
  CHECK(check_all_minors_nonzero(pj, 3, cfg));
}

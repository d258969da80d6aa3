#include <random>

#include "doctest.h"
#include "toepsense/error.hpp"
#include "toepsense/field.hpp"
#include "toepsense/matrix.hpp"
#include "toepsense/toeplitz.hpp"

using namespace toepsense;

TEST_CASE("field arithmetic in F_{2^61-1} and a small prime") {
  for (std::uint64_t p : {kMersenne61, kMersenne31, std::uint64_t{101}}) {
    const PrimeField f(p);
    std::mt19937_64 rng(7);
    for (int k = 0; k < 200; ++k) {
      const FieldScalar a = f.uniform(rng);
      const FieldScalar b = f.uniform(rng);
      CHECK(a.value < p);
      CHECK(f.sub(f.add(a, b), b) == a);
      CHECK(f.add(a, f.neg(a)) == f.zero());
      if (a != f.zero()) CHECK(f.mul(a, f.inv(a)) == f.one());
      // Fermat
      if (a != f.zero()) CHECK(f.pow(a, p - 1) == f.one());
    }
  }
  const PrimeField f;
  CHECK(f.to_signed(f.from_int(-5)) == -5);
  CHECK(f.from_int(-1).value == kMersenne61 - 1);
  CHECK_THROWS_AS(f.inv(f.zero()), Error);
  CHECK_THROWS_AS(PrimeField(100), Error);
  CHECK(is_prime(kMersenne61));
  CHECK_FALSE(is_prime(kMersenne61 + 2));
}

TEST_CASE("rank, determinant and nullspace on hand cases") {
  const PrimeField f;
  const auto m = ExactMatrix::from_rows(f, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(m) == 2);
  CHECK(determinant(m) == f.zero());
  const ExactMatrix k = nullspace_basis(m);
  CHECK(k.cols() == 1);
  CHECK((m * k).is_zero());

  const auto a = ExactMatrix::from_rows(f, {{2, 1}, {7, 4}});
  CHECK(determinant(a) == f.one());
  CHECK(rank(ExactMatrix(f, 3, 4)) == 0);
  CHECK(rank(ExactMatrix::identity(f, 5)) == 5);

  // zero pivot in the leading position
  const auto b = ExactMatrix::from_rows(f, {{0, 1}, {1, 0}});
  CHECK(determinant(b) == f.from_int(-1));
  CHECK_THROWS_AS(determinant(ExactMatrix(f, 2, 3)), Error);
  CHECK_THROWS_AS(m * ExactMatrix(f, 2, 2), Error);
}

TEST_CASE("rank properties on random low-rank products") {
  const PrimeField f(101);  // small field so rank drops actually happen
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5, k = 1 + rng() % 4;
    const ExactMatrix a = random_matrix(f, r, k, rng) * random_matrix(f, k, c, rng);
    const ExactMatrix b = random_matrix(f, r, c, rng);
    const std::size_t ra = rank(a);
    CHECK(ra == rank(a.transpose()));
    CHECK(ra <= std::min({r, c, k}));
    CHECK(rank(a + b) <= ra + rank(b));
    CHECK(rank(hconcat(a, b)) <= ra + rank(b));
    CHECK(rank(hconcat(a, b)) >= std::max(ra, rank(b)));
    // block triangular [A B; 0 C] has rank >= rank A + rank C
    const ExactMatrix cm = random_matrix(f, r, c, rng);
    const ExactMatrix block = vconcat(hconcat(a, b), hconcat(ExactMatrix(f, r, c), cm));
    CHECK(rank(block) >= ra + rank(cm));
    const ExactMatrix n = nullspace_basis(a);
    CHECK(n.cols() == c - ra);
    CHECK((a * n).is_zero());
    CHECK(rank(n) == n.cols());
  }
}

TEST_CASE("random square matrices over F_{2^61-1} are almost always invertible") {
  const PrimeField f;
  std::mt19937_64 rng(3);
  int full = 0;
  for (int k = 0; k < 200; ++k) full += rank(random_matrix(f, 6, 6, rng)) == 6;
  CHECK(full == 200);
  CHECK(random_matrix(f, 3, 3, 99) == random_matrix(f, 3, 3, 99));
}

TEST_CASE("toeplitz construction and diagonal indexing") {
  const PrimeField f;
  // x_{1-d} .. x_{n-1} = -1, 0, 1, 2, 3 for n = 4, d = 2
  std::vector<FieldScalar> diag;
  for (int v = -1; v <= 3; ++v) diag.push_back(f.from_int(v));
  const ToeplitzSpec spec(f, 4, 2, diag);
  const ExactMatrix u = build_toeplitz(spec);
  CHECK(u == ExactMatrix::from_rows(f, {{0, -1}, {1, 0}, {2, 1}, {3, 2}}));
  CHECK(spec.diagonal(-1) == f.from_int(-1));
  CHECK(spec.diagonal(3) == f.from_int(3));
  CHECK_THROWS_AS(spec.diagonal(4), Error);
  CHECK_THROWS_AS(ToeplitzSpec(f, 4, 2, std::vector<FieldScalar>(4)), Error);
  CHECK_THROWS_AS(ToeplitzSpec(f, 2, 3, std::vector<FieldScalar>(4)), Error);
  CHECK(sample_toeplitz(f, 6, 3, 5) == sample_toeplitz(f, 6, 3, 5));
}

TEST_CASE("shift matrices compose and move toeplitz rows down") {
  const PrimeField f;
  const std::size_t n = 7, d = 3;
  for (int s = -3; s <= 3; ++s) {
    for (int t = -3; t <= 3; ++t) {
      if ((s >= 0) == (t >= 0)) {
        CHECK(shift_matrix(f, n, s) * shift_matrix(f, n, t) == shift_matrix(f, n, s + t));
      }
    }
  }
  CHECK(shift_matrix(f, n, 0) == ExactMatrix::identity(f, n));
  CHECK(shift_matrix(f, n, -2) == shift_matrix(f, n, 2).transpose());
  CHECK_THROWS_AS(shift_matrix(f, n, static_cast<int>(n)), Error);

  const ExactMatrix u = build_toeplitz(sample_toeplitz(f, n, d, 1));
  for (int t = 0; t <= 3; ++t) {
    const ExactMatrix ju = shift_matrix(f, n, t) * u;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const FieldScalar want = i >= static_cast<std::size_t>(t) ? u(i - t, j) : f.zero();
        CHECK(ju(i, j) == want);
      }
    }
  }
}

#include "toepsense/toeplitz.hpp"

#include <cstdlib>
#include <string>
#include <utility>

#include "toepsense/error.hpp"

namespace toepsense {

ToeplitzSpec::ToeplitzSpec(PrimeField field, std::size_t n, std::size_t d,
                           std::vector<FieldScalar> diagonals)
    : field_(field), n_(n), d_(d), diagonals_(std::move(diagonals)) {
  if (d_ < 1 || n_ < d_) {
    throw Error(ErrorCode::kInvalidArgument,
                "Toeplitz shape requires n >= d >= 1, got n=" +
                    std::to_string(n_) + " d=" + std::to_string(d_));
  }
  if (diagonals_.size() != n_ + d_ - 1) {
    throw Error(ErrorCode::kDimensionMismatch,
                "n=" + std::to_string(n_) + ", d=" + std::to_string(d_) +
                    " needs " + std::to_string(n_ + d_ - 1) +
                    " diagonal values, got " +
                    std::to_string(diagonals_.size()));
  }
  for (FieldScalar v : diagonals_) {
    if (v.value >= field_.modulus()) {
      throw Error(ErrorCode::kInvalidArgument, "diagonal value not reduced");
    }
  }
}

FieldScalar ToeplitzSpec::diagonal(int k) const {
  if (k < min_diagonal() || k > max_diagonal()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "diagonal index " + std::to_string(k) + " out of range");
  }
  return diagonals_[static_cast<std::size_t>(k - min_diagonal())];
}

ExactMatrix build_toeplitz(const ToeplitzSpec& spec) {
  ExactMatrix m(spec.field(), spec.n(), spec.d());
  for (std::size_t i = 0; i < spec.n(); ++i)
    for (std::size_t j = 0; j < spec.d(); ++j) m.at(i, j) = spec.entry(i, j);
  return m;
}

ToeplitzSpec sample_toeplitz(PrimeField field, std::size_t n, std::size_t d,
                             std::mt19937_64& rng) {
  if (d < 1 || n < d) {
    throw Error(ErrorCode::kInvalidArgument, "sample_toeplitz requires n >= d >= 1");
  }
  std::vector<FieldScalar> diag(n + d - 1);
  for (auto& v : diag) v = field.uniform(rng);
  return ToeplitzSpec(field, n, d, std::move(diag));
}

ToeplitzSpec sample_toeplitz(PrimeField field, std::size_t n, std::size_t d,
                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_toeplitz(field, n, d, rng);
}

ExactMatrix shift_matrix(PrimeField field, std::size_t n, int t) {
  const std::size_t s = static_cast<std::size_t>(std::abs(t));
  if (s >= n && !(n == 0 && t == 0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "shift " + std::to_string(t) + " out of range for n=" +
                    std::to_string(n));
  }
  ExactMatrix m(field, n, n);
  for (std::size_t i = 0; i + s < n; ++i) {
    if (t >= 0) {
      m.at(i + s, i) = field.one();
    } else {
      m.at(i, i + s) = field.one();
    }
  }
  return m;
}

}  // namespace toepsense

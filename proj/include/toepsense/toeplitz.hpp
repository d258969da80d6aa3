#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "toepsense/field.hpp"
#include "toepsense/matrix.hpp"

namespace toepsense {

/// An n x d Toeplitz matrix U = (x_{i-j}) given by its n + d - 1 diagonal
/// values. Diagonal k = i - j ranges over 1-d .. n-1 and is the variable
/// index shared with the symbolic layer.
class ToeplitzSpec {
 public:
  ToeplitzSpec(PrimeField field, std::size_t n, std::size_t d,
               std::vector<FieldScalar> diagonals);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t d() const noexcept { return d_; }
  int min_diagonal() const noexcept { return 1 - static_cast<int>(d_); }
  int max_diagonal() const noexcept { return static_cast<int>(n_) - 1; }

  // Listed from k = 1-d up to k = n-1.
  const std::vector<FieldScalar>& diagonals() const noexcept {
    return diagonals_;
  }
  FieldScalar diagonal(int k) const;
  // Zero-based (i, j).
  FieldScalar entry(std::size_t i, std::size_t j) const {
    return diagonals_[i + d_ - 1 - j];
  }

  friend bool operator==(const ToeplitzSpec&, const ToeplitzSpec&) = default;

 private:
  PrimeField field_;
  std::size_t n_;
  std::size_t d_;
  std::vector<FieldScalar> diagonals_;
};

ExactMatrix build_toeplitz(const ToeplitzSpec& spec);

ToeplitzSpec sample_toeplitz(PrimeField field, std::size_t n, std::size_t d,
                             std::mt19937_64& rng);
ToeplitzSpec sample_toeplitz(PrimeField field, std::size_t n, std::size_t d,
                             std::uint64_t seed);

/// J^t for t >= 0 (ones at (i + t, i)), (J^T)^{-t} for t < 0 (ones at
/// (i, i - t)). Requires |t| < n; t = 0 gives the identity.
ExactMatrix shift_matrix(PrimeField field, std::size_t n, int t);

}  // namespace toepsense

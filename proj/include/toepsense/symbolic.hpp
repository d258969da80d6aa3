#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toepsense/permutation.hpp"
#include "toepsense/polynomial.hpp"

namespace toepsense {

inline constexpr std::size_t kMaxLeibnizDimension = 10;

class SymbolicMatrix {
 public:
  SymbolicMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const SparsePolynomial& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  SparsePolynomial& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<SparsePolynomial> entries_;
};

/// Finite window of the infinite Toeplitz array (y_{i-j}); entry (a, b) is
/// the variable y_{rows[a] - cols[b]}. Index sets must be strictly
/// increasing.
SymbolicMatrix symbolic_toeplitz(const std::vector<int>& row_set,
                                 const std::vector<int>& col_set);

// [A, B]
SymbolicMatrix hconcat(const SymbolicMatrix& a, const SymbolicMatrix& b);
SymbolicMatrix permute_rows(const Permutation& sigma, const SymbolicMatrix& m);

/// Exact signed sum over permutations. Dimension at most 10.
SparsePolynomial leibniz_det(const SymbolicMatrix& m);

/// prod_{a=1..d} y_{i_a - j_{d+1-a}}.
Monomial antidiagonal_monomial(const std::vector<int>& row_set,
                               const std::vector<int>& col_set);

/// For every d-subset I of `row_set` (d = |col_set|): the initial monomial
/// of det(T_{I x J}) is the anti-diagonal product, and these are pairwise
/// distinct across subsets. Total Leibniz work is guarded.
bool certify_minors_li(const std::vector<int>& row_set,
                       const std::vector<int>& col_set);

struct SymbolicDeterminant {
  SparsePolynomial det;
  std::optional<Term> initial;  // absent when det is zero
};

/// det [U, P U] for the n x d symbolic Toeplitz U on rows 1..n, cols 1..d.
/// Requires n = 2d and n <= 10.
SymbolicDeterminant symbolic_det_vpv(const Permutation& sigma, std::size_t n,
                                     std::size_t d);

}  // namespace toepsense

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "toepsense/field.hpp"

namespace toepsense {

/// Dense row-major matrix over F_p. Values are immutable once built; the
/// elimination routines work on private copies.
class ExactMatrix {
 public:
  ExactMatrix(PrimeField field, std::size_t rows, std::size_t cols);
  ExactMatrix(PrimeField field, std::size_t rows, std::size_t cols,
              std::vector<FieldScalar> entries);

  static ExactMatrix identity(PrimeField field, std::size_t n);
  // Rows given as signed integers, reduced into the field.
  static ExactMatrix from_rows(
      PrimeField field,
      std::initializer_list<std::initializer_list<std::int64_t>> rows);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::span<const FieldScalar> entries() const noexcept { return entries_; }

  FieldScalar operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  FieldScalar& at(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  std::span<const FieldScalar> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }

  ExactMatrix transpose() const;
  // Rows [first, first + count), all columns.
  ExactMatrix row_block(std::size_t first, std::size_t count) const;
  ExactMatrix select_rows(std::span<const std::size_t> indices) const;
  ExactMatrix select_cols(std::span<const std::size_t> indices) const;

  bool is_zero() const noexcept;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldScalar> entries_;
};

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

// [A, B]
ExactMatrix hconcat(const ExactMatrix& a, const ExactMatrix& b);
// [A; B]
ExactMatrix vconcat(const ExactMatrix& a, const ExactMatrix& b);

std::size_t rank(const ExactMatrix& m);

/// Columns form a basis of {x : M x = 0}; cols() - rank(M) of them.
ExactMatrix nullspace_basis(const ExactMatrix& m);

// Square matrices only.
FieldScalar determinant(const ExactMatrix& m);

ExactMatrix random_matrix(PrimeField field, std::size_t rows, std::size_t cols,
                          std::mt19937_64& rng);
ExactMatrix random_matrix(PrimeField field, std::size_t rows, std::size_t cols,
                          std::uint64_t seed);

std::string to_string(const ExactMatrix& m);

}  // namespace toepsense

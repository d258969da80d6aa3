#include "toepsense/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "toepsense/error.hpp"

namespace toepsense {

namespace {

void require_same_field(const ExactMatrix& a, const ExactMatrix& b) {
  if (!(a.field() == b.field())) {
    throw Error(ErrorCode::kInvalidArgument,
                "matrices live over different prime fields");
  }
}

void require_same_shape(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "shape mismatch: " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " vs " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

// In-place row echelon form with first-nonzero pivoting. Returns the pivot
// column of each pivot row, in order.
std::vector<std::size_t> echelonize(const PrimeField& f, std::size_t rows,
                                    std::size_t cols,
                                    std::vector<FieldScalar>& a,
                                    bool reduced) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p * cols + c].value == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap_ranges(a.begin() + p * cols, a.begin() + (p + 1) * cols,
                       a.begin() + r * cols);
    }
    const FieldScalar inv = f.inv(a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) {
      a[r * cols + j] = f.mul(a[r * cols + j], inv);
    }
    const std::size_t first = reduced ? 0 : r + 1;
    for (std::size_t i = first; i < rows; ++i) {
      if (i == r) continue;
      const FieldScalar factor = a[i * cols + c];
      if (factor.value == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        a[i * cols + j] =
            f.sub(a[i * cols + j], f.mul(factor, a[r * cols + j]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

ExactMatrix::ExactMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols) {}

ExactMatrix::ExactMatrix(PrimeField field, std::size_t rows, std::size_t cols,
                         std::vector<FieldScalar> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(rows * cols) + " entries, got " +
                    std::to_string(entries_.size()));
  }
  for (FieldScalar v : entries_) {
    if (v.value >= field_.modulus()) {
      throw Error(ErrorCode::kInvalidArgument, "entry not reduced mod p");
    }
  }
}

ExactMatrix ExactMatrix::identity(PrimeField field, std::size_t n) {
  ExactMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

ExactMatrix ExactMatrix::from_rows(
    PrimeField field,
    std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<FieldScalar> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged row list");
    }
    for (std::int64_t v : row) entries.push_back(field.from_int(v));
  }
  return ExactMatrix(field, r, c, std::move(entries));
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = (*this)(i, j);
  return t;
}

ExactMatrix ExactMatrix::row_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_) {
    throw Error(ErrorCode::kDimensionMismatch, "row block out of range");
  }
  std::vector<FieldScalar> e(entries_.begin() + first * cols_,
                             entries_.begin() + (first + count) * cols_);
  return ExactMatrix(field_, count, cols_, std::move(e));
}

ExactMatrix ExactMatrix::select_rows(
    std::span<const std::size_t> indices) const {
  ExactMatrix out(field_, indices.size(), cols_);
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] >= rows_) {
      throw Error(ErrorCode::kDimensionMismatch, "row index out of range");
    }
    for (std::size_t j = 0; j < cols_; ++j) out.at(k, j) = (*this)(indices[k], j);
  }
  return out;
}

ExactMatrix ExactMatrix::select_cols(
    std::span<const std::size_t> indices) const {
  ExactMatrix out(field_, rows_, indices.size());
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] >= cols_) {
      throw Error(ErrorCode::kDimensionMismatch, "column index out of range");
    }
    for (std::size_t i = 0; i < rows_; ++i) out.at(i, k) = (*this)(i, indices[k]);
  }
  return out;
}

bool ExactMatrix::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](FieldScalar v) { return v.value == 0; });
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.entries_ == b.entries_;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_shape(a, b);
  ExactMatrix out(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out.at(i, j) = a.field().add(a(i, j), b(i, j));
  return out;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_shape(a, b);
  ExactMatrix out(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out.at(i, j) = a.field().sub(a(i, j), b(i, j));
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "inner dimensions differ");
  }
  const PrimeField& f = a.field();
  ExactMatrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const FieldScalar aik = a(i, k);
      if (aik.value == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.at(i, j) = f.add(out(i, j), f.mul(aik, b(k, j)));
      }
    }
  }
  return out;
}

ExactMatrix hconcat(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "hconcat: row counts differ");
  }
  ExactMatrix out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b(i, j);
  }
  return out;
}

ExactMatrix vconcat(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "vconcat: column counts differ");
  }
  std::vector<FieldScalar> e(a.entries().begin(), a.entries().end());
  e.insert(e.end(), b.entries().begin(), b.entries().end());
  return ExactMatrix(a.field(), a.rows() + b.rows(), a.cols(), std::move(e));
}

std::size_t rank(const ExactMatrix& m) {
  std::vector<FieldScalar> a(m.entries().begin(), m.entries().end());
  return echelonize(m.field(), m.rows(), m.cols(), a, false).size();
}

ExactMatrix nullspace_basis(const ExactMatrix& m) {
  const PrimeField& f = m.field();
  const std::size_t cols = m.cols();
  std::vector<FieldScalar> a(m.entries().begin(), m.entries().end());
  const auto pivots = echelonize(f, m.rows(), cols, a, true);

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  ExactMatrix basis(f, cols, cols - pivots.size());
  std::size_t k = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    basis.at(free, k) = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      basis.at(pivots[r], k) = f.neg(a[r * cols + free]);
    }
    ++k;
  }
  return basis;
}

FieldScalar determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "determinant of non-square");
  }
  const PrimeField& f = m.field();
  const std::size_t n = m.rows();
  std::vector<FieldScalar> a(m.entries().begin(), m.entries().end());
  FieldScalar det = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p * n + c].value == 0) ++p;
    if (p == n) return f.zero();
    if (p != c) {
      std::swap_ranges(a.begin() + p * n, a.begin() + (p + 1) * n,
                       a.begin() + c * n);
      det = f.neg(det);
    }
    det = f.mul(det, a[c * n + c]);
    const FieldScalar inv = f.inv(a[c * n + c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      const FieldScalar factor = f.mul(a[i * n + c], inv);
      if (factor.value == 0) continue;
      for (std::size_t j = c; j < n; ++j) {
        a[i * n + j] = f.sub(a[i * n + j], f.mul(factor, a[c * n + j]));
      }
    }
  }
  return det;
}

ExactMatrix random_matrix(PrimeField field, std::size_t rows, std::size_t cols,
                          std::mt19937_64& rng) {
  std::vector<FieldScalar> e(rows * cols);
  for (auto& v : e) v = field.uniform(rng);
  return ExactMatrix(field, rows, cols, std::move(e));
}

ExactMatrix random_matrix(PrimeField field, std::size_t rows, std::size_t cols,
                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_matrix(field, rows, cols, rng);
}

std::string to_string(const ExactMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m.field().to_signed(m(i, j));
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace toepsense

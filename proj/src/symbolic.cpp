#include "toepsense/symbolic.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "toepsense/combinations.hpp"
#include "toepsense/error.hpp"

namespace toepsense {

namespace {

void require_increasing(const std::vector<int>& s, const char* what) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] <= s[i - 1]) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(what) + " index set must be strictly increasing");
    }
  }
}

// Entries that are zero or a single term with a small coefficient; the
// determinant then reduces to counting signed monomial products.
bool all_small_terms(const SymbolicMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& e = m(i, j);
      if (e.size() > 1) return false;
      if (e.size() == 1) {
        const Integer& c = e.terms().begin()->second;
        if (c > 63 || c < -63) return false;
      }
    }
  }
  return true;
}

class TermLeibniz {
 public:
  explicit TermLeibniz(const SymbolicMatrix& m) : n_(m.rows()) {
    int lo = 0;
    int hi = -1;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        const auto& e = m(i, j);
        if (e.is_zero()) continue;
        for (const auto& [k, _] : e.terms().begin()->first.powers()) {
          if (hi < lo) {
            lo = hi = k;
          } else {
            lo = std::min(lo, k);
            hi = std::max(hi, k);
          }
        }
      }
    }
    base_ = lo;
    exps_.assign(hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0, 0);
    cells_.resize(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        const auto& e = m(i, j);
        Cell& c = cells_[i * n_ + j];
        if (e.is_zero()) continue;
        c.nonzero = true;
        const auto& [mono, coef] = *e.terms().begin();
        c.coefficient = static_cast<std::int64_t>(coef);
        c.powers = mono.powers();
      }
    }
  }

  SparsePolynomial run() {
    used_.assign(n_, false);
    descend(0, 1, false);
    SparsePolynomial out;
    for (const auto& [key, c] : sums_) {
      if (c == 0) continue;
      std::vector<std::pair<int, unsigned>> powers;
      for (std::size_t v = 0; v < key.size(); ++v)
        if (key[v]) powers.emplace_back(base_ + static_cast<int>(v), key[v]);
      out.add_term(Monomial(std::move(powers)), to_integer(c));
    }
    return out;
  }

 private:
  struct Cell {
    bool nonzero = false;
    std::int64_t coefficient = 0;
    std::vector<std::pair<int, unsigned>> powers;
  };

  static Integer to_integer(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-v)
                                : static_cast<unsigned __int128>(v);
    Integer r = static_cast<std::uint64_t>(mag >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(mag);
    return neg ? Integer(-r) : r;
  }

  void descend(std::size_t row, std::int64_t coef, bool odd) {
    if (row == n_) {
      __int128 signed_coef = odd ? -static_cast<__int128>(coef) : coef;
      sums_[exps_] += signed_coef;
      return;
    }
    std::size_t larger_used = 0;
    for (std::size_t c = n_; c-- > 0;) {
      if (used_[c]) {
        ++larger_used;
        continue;
      }
      const Cell& cell = cells_[row * n_ + c];
      if (!cell.nonzero) continue;
      used_[c] = true;
      for (const auto& [k, e] : cell.powers) exps_[static_cast<std::size_t>(k - base_)] += static_cast<unsigned char>(e);
      descend(row + 1, coef * cell.coefficient, odd ^ (larger_used % 2 == 1));
      for (const auto& [k, e] : cell.powers) exps_[static_cast<std::size_t>(k - base_)] -= static_cast<unsigned char>(e);
      used_[c] = false;
    }
  }

  std::size_t n_;
  int base_ = 0;
  std::vector<unsigned char> exps_;
  std::vector<Cell> cells_;
  std::vector<bool> used_;
  std::map<std::vector<unsigned char>, __int128> sums_;
};

void general_leibniz(const SymbolicMatrix& m, std::size_t row,
                     std::vector<bool>& used, const SparsePolynomial& partial,
                     bool odd, SparsePolynomial& out) {
  const std::size_t n = m.rows();
  if (row == n) {
    if (odd) {
      out -= partial;
    } else {
      out += partial;
    }
    return;
  }
  std::size_t larger_used = 0;
  for (std::size_t c = n; c-- > 0;) {
    if (used[c]) {
      ++larger_used;
      continue;
    }
    if (m(row, c).is_zero()) continue;
    used[c] = true;
    general_leibniz(m, row + 1, used, partial * m(row, c),
                    odd ^ (larger_used % 2 == 1), out);
    used[c] = false;
  }
}

}  // namespace

SymbolicMatrix::SymbolicMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

SymbolicMatrix symbolic_toeplitz(const std::vector<int>& row_set,
                                 const std::vector<int>& col_set) {
  require_increasing(row_set, "row");
  require_increasing(col_set, "column");
  SymbolicMatrix m(row_set.size(), col_set.size());
  for (std::size_t a = 0; a < row_set.size(); ++a)
    for (std::size_t b = 0; b < col_set.size(); ++b)
      m.at(a, b) = SparsePolynomial::variable(row_set[a] - col_set[b]);
  return m;
}

SymbolicMatrix hconcat(const SymbolicMatrix& a, const SymbolicMatrix& b) {
  if (a.rows() != b.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "hconcat: row counts differ");
  }
  SymbolicMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b(i, j);
  }
  return out;
}

SymbolicMatrix permute_rows(const Permutation& sigma, const SymbolicMatrix& m) {
  if (sigma.size() != m.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "permutation size differs from row count");
  }
  SymbolicMatrix out(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.rows(); ++j)
    for (std::size_t c = 0; c < m.cols(); ++c) out.at(sigma(j), c) = m(j, c);
  return out;
}

SparsePolynomial leibniz_det(const SymbolicMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "determinant of a non-square matrix");
  }
  if (m.rows() > kMaxLeibnizDimension) {
    throw Error(ErrorCode::kGuardExceeded,
                "Leibniz expansion limited to dimension " +
                    std::to_string(kMaxLeibnizDimension) + ", got " +
                    std::to_string(m.rows()));
  }
  if (m.rows() == 0) return SparsePolynomial::constant(1);
  if (all_small_terms(m)) return TermLeibniz(m).run();
  SparsePolynomial out;
  std::vector<bool> used(m.rows(), false);
  general_leibniz(m, 0, used, SparsePolynomial::constant(1), false, out);
  return out;
}

Monomial antidiagonal_monomial(const std::vector<int>& row_set,
                               const std::vector<int>& col_set) {
  if (row_set.size() != col_set.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "anti-diagonal needs |I| = |J|, got " +
                    std::to_string(row_set.size()) + " and " +
                    std::to_string(col_set.size()));
  }
  const std::size_t d = row_set.size();
  std::vector<std::pair<int, unsigned>> powers;
  for (std::size_t a = 0; a < d; ++a) powers.emplace_back(row_set[a] - col_set[d - 1 - a], 1u);
  return Monomial(std::move(powers));
}

bool certify_minors_li(const std::vector<int>& row_set,
                       const std::vector<int>& col_set) {
  require_increasing(row_set, "row");
  require_increasing(col_set, "column");
  const std::size_t d = col_set.size();
  if (d == 0 || row_set.size() < d) {
    throw Error(ErrorCode::kInvalidArgument, "need |K| >= |J| >= 1");
  }
  if (d > kMaxLeibnizDimension) {
    throw Error(ErrorCode::kGuardExceeded, "minor size exceeds Leibniz guard");
  }
  // Guard on total Leibniz leaves: C(|K|, d) * d!.
  constexpr double kMaxWork = 5e7;
  double work = 1;
  for (std::size_t i = 0; i < d; ++i) work *= static_cast<double>(row_set.size() - i);
  if (work > kMaxWork) {
    throw Error(ErrorCode::kGuardExceeded, "certification work exceeds guard");
  }

  std::set<Monomial, LexGreater> seen;
  return for_each_combination(
      row_set.size(), d, [&](const std::vector<std::size_t>& pick) {
        std::vector<int> rows;
        for (std::size_t i : pick) rows.push_back(row_set[i]);
        const SparsePolynomial det = leibniz_det(symbolic_toeplitz(rows, col_set));
        if (det.is_zero()) return false;
        const Term init = initial_monomial(det);
        const Monomial expected = antidiagonal_monomial(rows, col_set);
        if (!(init.monomial == expected)) return false;
        return seen.insert(expected).second;
      });
}

SymbolicDeterminant symbolic_det_vpv(const Permutation& sigma, std::size_t n,
                                     std::size_t d) {
  if (n != 2 * d || sigma.size() != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "symbolic det [U, PU] needs a square matrix: n = 2d = |sigma|");
  }
  if (n > kMaxLeibnizDimension) {
    throw Error(ErrorCode::kGuardExceeded, "symbolic det limited to n <= 10");
  }
  std::vector<int> rows(n);
  std::vector<int> cols(d);
  for (std::size_t i = 0; i < n; ++i) rows[i] = static_cast<int>(i) + 1;
  for (std::size_t j = 0; j < d; ++j) cols[j] = static_cast<int>(j) + 1;
  const SymbolicMatrix u = symbolic_toeplitz(rows, cols);
  SymbolicDeterminant out;
  out.det = leibniz_det(hconcat(u, permute_rows(sigma, u)));
  if (!out.det.is_zero()) out.initial = initial_monomial(out.det);
  return out;
}

}  // namespace toepsense

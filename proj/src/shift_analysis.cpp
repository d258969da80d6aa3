#include "toepsense/shift_analysis.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "toepsense/error.hpp"
#include "toepsense/toeplitz.hpp"

namespace toepsense {

namespace {

const PrimeField& exact_field() {
  static const PrimeField field(kMersenne61);
  return field;
}

void check_size(const Permutation& sigma) {
  if (sigma.size() == 0 || sigma.size() > kMaxAnalysisSize) {
    throw Error(ErrorCode::kGuardExceeded,
                "shift analysis supports 1 <= n <= " +
                    std::to_string(kMaxAnalysisSize));
  }
}

void check_theory_shape(const Permutation& sigma, std::size_t d) {
  check_size(sigma);
  if (d < 1 || sigma.size() < 2 * d) {
    throw Error(ErrorCode::kInvalidArgument,
                "shift-rank criterion requires n >= 2d and d >= 1, got n=" +
                    std::to_string(sigma.size()) + " d=" + std::to_string(d));
  }
}

std::size_t magnitude(int t) { return static_cast<std::size_t>(std::abs(t)); }

}  // namespace

std::string_view to_string(UspVerdict v) {
  switch (v) {
    case UspVerdict::kHolds: return "holds";
    case UspVerdict::kFails: return "fails";
    case UspVerdict::kUnknown: return "unknown";
  }
  return "unknown";
}

std::size_t r_zero(const Permutation& sigma) {
  check_size(sigma);
  const auto& f = exact_field();
  const std::size_t n = sigma.size();
  return rank(ExactMatrix::identity(f, n) - perm_matrix(f, sigma));
}

std::size_t residual_rank(const Permutation& sigma, int t) {
  check_size(sigma);
  const auto& f = exact_field();
  const std::size_t n = sigma.size();
  const std::size_t s = magnitude(t);
  if (s >= n) {
    throw Error(ErrorCode::kInvalidArgument,
                "shift " + std::to_string(t) + " out of range for n=" +
                    std::to_string(n));
  }
  const ExactMatrix diff = perm_matrix(f, sigma) - shift_matrix(f, n, t);
  // t >= 0 keeps the last n - t rows, t < 0 the first n - |t|.
  const std::size_t first = t >= 0 ? s : 0;
  return rank(diff.row_block(first, n - s));
}

namespace {

// Eligible subset of a residual table, ordered by |t| then sign.
std::vector<ShiftWitness> select_eligible(std::vector<ShiftWitness> residuals,
                                          std::size_t d) {
  std::vector<ShiftWitness> out;
  for (const auto& w : residuals) {
    if (2 * magnitude(w.t) <= d && w.r_t <= d - 2 * magnitude(w.t)) out.push_back(w);
  }
  std::stable_sort(out.begin(), out.end(), [](const ShiftWitness& a, const ShiftWitness& b) {
    if (magnitude(a.t) != magnitude(b.t)) return magnitude(a.t) < magnitude(b.t);
    return a.t < b.t;
  });
  return out;
}

std::vector<ShiftWitness> residual_table(const Permutation& sigma, std::size_t d) {
  std::vector<ShiftWitness> table;
  const int half = static_cast<int>(d / 2);
  for (int t = -half; t <= half; ++t) table.push_back({t, residual_rank(sigma, t)});
  return table;
}

std::optional<RankPrediction> prediction_from(const Permutation& sigma, std::size_t d,
                                              std::vector<ShiftWitness> witnesses) {
  if (witnesses.empty()) return std::nullopt;
  const auto value = [d](const ShiftWitness& w) {
    return d + w.r_t + 2 * magnitude(w.t);
  };
  const std::size_t predicted = value(witnesses.front());
  for (const auto& w : witnesses) {
    if (value(w) != predicted) {
      const auto& a = witnesses.front();
      std::ostringstream os;
      os << "eligible shifts disagree for sigma = [" << format_permutation(sigma)
         << "], d = " << d << ": t=" << a.t << " (r_t=" << a.r_t << ") predicts "
         << predicted << ", t=" << w.t << " (r_t=" << w.r_t << ") predicts "
         << value(w);
      throw Error(ErrorCode::kInvariantViolation, os.str());
    }
  }
  return RankPrediction{predicted, std::move(witnesses)};
}

}  // namespace

std::vector<ShiftWitness> eligible_shifts(const Permutation& sigma, std::size_t d) {
  check_theory_shape(sigma, d);
  return select_eligible(residual_table(sigma, d), d);
}

std::optional<RankPrediction> predict_rank(const Permutation& sigma, std::size_t d) {
  return prediction_from(sigma, d, eligible_shifts(sigma, d));
}

ShiftAnalysis decide_usp(const Permutation& sigma, std::size_t d) {
  check_theory_shape(sigma, d);
  ShiftAnalysis a;
  a.n = sigma.size();
  a.d = d;
  a.r0 = r_zero(sigma);
  const int half = static_cast<int>(d / 2);
  a.residuals = residual_table(sigma, d);

  if (auto prediction = prediction_from(sigma, d, select_eligible(a.residuals, d))) {
    a.eligible = prediction->witnesses;
    a.predicted_rank = prediction->rank;
  }

  std::ostringstream cert;
  if (a.r0 <= d) {
    // t = 0 is eligible here, so the prediction is d + r0.
    a.usp = UspVerdict::kHolds;
    cert << "r0 = " << a.r0 << " <= d = " << d
         << ": shift t = 0 is eligible, generic rank[V, PV] = d + r0 = "
         << *a.predicted_rank
         << "; V meets its image only in the fixed space, USP holds";
  } else if (!a.eligible.empty()) {
    const ShiftWitness& w = a.eligible.front();
    const std::size_t bound = d - 2 * magnitude(w.t);
    a.usp = w.r_t == bound ? UspVerdict::kHolds : UspVerdict::kFails;
    cert << "r0 = " << a.r0 << " > d = " << d << "; shift t = " << w.t
         << " has r_t = " << w.r_t << " <= d - 2|t| = " << bound
         << ", generic rank[V, PV] = d + r_t + 2|t| = " << *a.predicted_rank
         << "; USP " << (a.usp == UspVerdict::kHolds ? "holds" : "fails")
         << " since r_t " << (w.r_t == bound ? "=" : "<") << " d - 2|t|";
  } else {
    a.usp = UspVerdict::kUnknown;
    cert << "r0 = " << a.r0 << " > d = " << d
         << " and no shift |t| <= " << half
         << " satisfies r_t <= d - 2|t|; not covered by the shift-rank "
            "criterion (conjecture-conditional: generic rank 2d, USP holds)";
  }
  a.certificate = cert.str();
  return a;
}

std::size_t expected_fixed_intersection_dim(const Permutation& sigma, std::size_t d) {
  check_theory_shape(sigma, d);
  const std::size_t r0 = r_zero(sigma);
  return r0 >= d ? 0 : d - r0;
}

std::size_t circular_distance(std::int64_t t, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "n must be positive");
  const auto m = static_cast<std::int64_t>(n);
  const auto r = static_cast<std::size_t>(((t % m) + m) % m);
  return std::min(r, n - r);
}

std::size_t cyclic_rank_formula(std::int64_t t, std::size_t n, std::size_t d) {
  if (d < 1 || n < 2 * d) {
    throw Error(ErrorCode::kInvalidArgument, "cyclic rank formula requires n >= 2d >= 2");
  }
  return std::min(2 * d, d + 2 * circular_distance(t, n));
}

}  // namespace toepsense

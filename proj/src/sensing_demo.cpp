#include "toepsense/sensing_demo.hpp"

#include <random>
#include <set>

#include "toepsense/error.hpp"

namespace toepsense {

namespace {

ExactMatrix column(const PrimeField& f, const std::vector<FieldScalar>& v) {
  return ExactMatrix(f, v.size(), 1, v);
}

std::vector<FieldScalar> as_vector(const ExactMatrix& col) {
  return {col.entries().begin(), col.entries().end()};
}

}  // namespace

std::vector<FieldScalar> SensingInstance::signal() const {
  const PrimeField& f = spec.field();
  return as_vector(build_toeplitz(spec) * column(f, coeffs));
}

SensingInstance make_instance(ToeplitzSpec spec, std::vector<FieldScalar> coeffs,
                              Permutation sigma) {
  if (coeffs.size() != spec.d() || sigma.size() != spec.n()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "instance needs d coefficients and a permutation of size n");
  }
  SensingInstance inst{std::move(spec), std::move(coeffs), std::move(sigma), {}};
  inst.observation =
      as_vector(permute_rows(inst.sigma, column(inst.spec.field(), inst.signal())));
  return inst;
}

SensingInstance generate_instance(PrimeField field, std::size_t n, std::size_t d,
                                  const Permutation& sigma, std::uint64_t seed,
                                  CoefficientMode mode) {
  if (d < 1 || n < 2 * d || sigma.size() != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "instance requires n >= 2d >= 2 and a permutation of size n");
  }
  std::mt19937_64 rng(seed);
  ToeplitzSpec spec = sample_toeplitz(field, n, d, rng);
  std::vector<FieldScalar> coeffs(d);
  if (mode == CoefficientMode::kGeneric) {
    for (auto& c : coeffs) c = field.uniform(rng);
  } else {
    // [PV, -V] (c; c') = 0  <=>  P V c = V c'
    const ExactMatrix v = build_toeplitz(spec);
    const ExactMatrix zero(field, n, d);
    const ExactMatrix kernel = nullspace_basis(hconcat(permute_rows(sigma, v), zero - v));
    for (std::size_t k = 0; k < kernel.cols(); ++k) {
      const FieldScalar weight = field.uniform(rng);
      for (std::size_t i = 0; i < d; ++i) {
        coeffs[i] = field.add(coeffs[i], field.mul(weight, kernel(i, k)));
      }
    }
  }
  return make_instance(std::move(spec), std::move(coeffs), sigma);
}

ConsistentSet enumerate_consistent(const SensingInstance& inst) {
  const std::size_t n = inst.spec.n();
  if (n > kMaxDemoSize) {
    throw Error(ErrorCode::kGuardExceeded,
                "brute-force enumeration limited to n <= " + std::to_string(kMaxDemoSize));
  }
  const PrimeField& f = inst.spec.field();
  const ExactMatrix v = build_toeplitz(inst.spec);
  const std::size_t base_rank = rank(v);
  const ExactMatrix y = column(f, inst.observation);

  ConsistentSet out;
  std::set<std::vector<std::uint64_t>> distinct;
  for_each_permutation(n, 0, factorial(n), [&](std::uint64_t, const Permutation& alt) {
    const ExactMatrix w = permute_rows(alt.inverse(), y);
    if (rank(hconcat(v, w)) != base_rank) return;
    std::vector<FieldScalar> signal = as_vector(w);
    std::vector<std::uint64_t> key;
    for (FieldScalar s : signal) key.push_back(s.value);
    distinct.insert(std::move(key));
    out.candidates.push_back({alt, std::move(signal)});
  });
  out.distinct_signals = distinct.size();
  return out;
}

bool check_pairwise_usp(const SensingInstance& inst, const Permutation& sigma_alt) {
  const std::size_t n = inst.spec.n();
  if (sigma_alt.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "permutation size differs from n");
  }
  const PrimeField& f = inst.spec.field();
  const ExactMatrix v = build_toeplitz(inst.spec);
  const std::size_t dim_v = rank(v);
  const std::size_t dim_meet = 2 * dim_v - rank(hconcat(v, permute_rows(sigma_alt, v)));
  const ExactMatrix fixed =
      nullspace_basis(ExactMatrix::identity(f, n) - perm_matrix(f, sigma_alt));
  const std::size_t dim_fixed_meet = fixed.cols() + dim_v - rank(hconcat(fixed, v));
  // The fixed-space intersection is always contained in the other one, so
  // equal dimensions mean equal subspaces.
  return dim_meet == dim_fixed_meet;
}

}  // namespace toepsense

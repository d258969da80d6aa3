#include "toepsense/field.hpp"

#include <bit>
#include <string>

#include "toepsense/error.hpp"

namespace toepsense {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "dimension-mismatch";
    case ErrorCode::kInvalidPermutation: return "invalid-permutation";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kGuardExceeded: return "guard-exceeded";
    case ErrorCode::kZeroPolynomial: return "zero-polynomial";
    case ErrorCode::kRankDeficient: return "rank-deficient";
    case ErrorCode::kInvariantViolation: return "invariant-violation";
    case ErrorCode::kUnknownFixture: return "unknown-fixture";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

// Deterministic Miller-Rabin; these bases are exact for all 64-bit inputs.
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p)
    : p_(p), mask_(0), mersenne_(p == kMersenne61) {
  if (p >= (std::uint64_t{1} << 62) || !is_prime(p)) {
    throw Error(ErrorCode::kInvalidArgument,
                "field modulus must be a prime below 2^62, got " +
                    std::to_string(p));
  }
  mask_ = std::bit_ceil(p) - 1;
}

FieldScalar PrimeField::from_int(std::int64_t v) const noexcept {
  const auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return {static_cast<std::uint64_t>(r)};
}

std::int64_t PrimeField::to_signed(FieldScalar a) const noexcept {
  if (a.value > p_ / 2) return -static_cast<std::int64_t>(p_ - a.value);
  return static_cast<std::int64_t>(a.value);
}

FieldScalar PrimeField::pow(FieldScalar a, std::uint64_t e) const noexcept {
  FieldScalar r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FieldScalar PrimeField::inv(FieldScalar a) const {
  if (a.value == 0) {
    throw Error(ErrorCode::kInvalidArgument, "inverse of zero in F_p");
  }
  return pow(a, p_ - 2);
}

}  // namespace toepsense

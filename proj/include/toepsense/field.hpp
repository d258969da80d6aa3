#pragma once

#include <compare>
#include <cstdint>
#include <random>

namespace toepsense {

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;
inline constexpr std::uint64_t kMersenne31 = (std::uint64_t{1} << 31) - 1;

bool is_prime(std::uint64_t n);

// Residue class modulo the field's prime. Carries no modulus of its own;
// arithmetic goes through the PrimeField that produced it.
struct FieldScalar {
  std::uint64_t value = 0;

  friend constexpr bool operator==(FieldScalar, FieldScalar) = default;
  friend constexpr auto operator<=>(FieldScalar, FieldScalar) = default;
};

/// Arithmetic in F_p for a prime p < 2^62. The Mersenne prime 2^61 - 1 takes
/// a shift-and-add reduction path; any other prime uses 128-bit division.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p = kMersenne61);

  std::uint64_t modulus() const noexcept { return p_; }

  FieldScalar zero() const noexcept { return {0}; }
  FieldScalar one() const noexcept { return {1}; }

  FieldScalar from_int(std::int64_t v) const noexcept;
  // Symmetric representative in (-p/2, p/2]; used for reporting small values.
  std::int64_t to_signed(FieldScalar a) const noexcept;

  FieldScalar add(FieldScalar a, FieldScalar b) const noexcept {
    std::uint64_t s = a.value + b.value;
    return {s >= p_ ? s - p_ : s};
  }
  FieldScalar sub(FieldScalar a, FieldScalar b) const noexcept {
    return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
  }
  FieldScalar neg(FieldScalar a) const noexcept {
    return {a.value == 0 ? 0 : p_ - a.value};
  }
  FieldScalar mul(FieldScalar a, FieldScalar b) const noexcept {
    const unsigned __int128 prod =
        static_cast<unsigned __int128>(a.value) * b.value;
    if (mersenne_) {
      std::uint64_t lo = static_cast<std::uint64_t>(prod) & kMersenne61;
      std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
      std::uint64_t s = lo + hi;
      return {s >= p_ ? s - p_ : s};
    }
    return {static_cast<std::uint64_t>(prod % p_)};
  }
  FieldScalar pow(FieldScalar a, std::uint64_t e) const noexcept;
  // Requires a != 0.
  FieldScalar inv(FieldScalar a) const;

  // Uniform draw by rejection on the masked output of a 64-bit engine, so
  // the stream is identical on every standard library implementation.
  FieldScalar uniform(std::mt19937_64& rng) const noexcept {
    for (;;) {
      std::uint64_t x = rng() & mask_;
      if (x < p_) return {x};
    }
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.p_ == b.p_;
  }

 private:
  std::uint64_t p_;
  std::uint64_t mask_;
  bool mersenne_;
};

}  // namespace toepsense

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "toepsense/field.hpp"
#include "toepsense/matrix.hpp"

namespace toepsense {

/// A bijection sigma of {1..n}, stored zero-based. The matrix convention is
/// P[sigma(j)][j] = 1, so (P v)_{sigma(j)} = v_j.
class Permutation {
 public:
  Permutation() = default;
  // Zero-based images; throws kInvalidPermutation if not a bijection.
  explicit Permutation(std::vector<std::size_t> image);
  // One-based images as written in one-line notation.
  static Permutation from_one_based(const std::vector<std::size_t>& image);

  static Permutation identity(std::size_t n);
  // i -> i + shift (mod n), one-based: sigma(i) = ((i - 1 + shift) mod n) + 1.
  static Permutation cyclic_shift(std::size_t n, std::int64_t shift);

  std::size_t size() const noexcept { return image_.size(); }
  // Zero-based image of zero-based j.
  std::size_t operator()(std::size_t j) const { return image_[j]; }
  const std::vector<std::size_t>& image() const noexcept { return image_; }
  std::vector<std::size_t> one_based() const;

  Permutation inverse() const;
  // (this * other)(j) = this(other(j)); matrices multiply the same way.
  Permutation compose(const Permutation& other) const;
  Permutation pow(std::int64_t e) const;

  // Fixed points count as cycles.
  std::size_t cycle_count() const;
  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

/// Whitespace-separated one-line image notation, 1-based, e.g. "1 3 4 5 6 2".
/// When `expected_n` is non-zero the length must match.
Permutation parse_permutation(std::string_view text, std::size_t expected_n = 0);
std::string format_permutation(const Permutation& sigma);

ExactMatrix perm_matrix(PrimeField field, const Permutation& sigma);
// P * M without forming P: row sigma(j) of the result is row j of M.
ExactMatrix permute_rows(const Permutation& sigma, const ExactMatrix& m);

inline constexpr std::size_t kMaxEnumerationSize = 12;

std::uint64_t factorial(std::size_t n);

/// Factorial-number-system unranking in lexicographic order: index 0 is the
/// identity, index n! - 1 the order-reversing permutation.
Permutation unrank_permutation(std::uint64_t index, std::size_t n);
std::uint64_t rank_permutation(const Permutation& sigma);

/// Visits permutations with lexicographic index in [first, last), in order.
/// The callback receives the index and the permutation.
void for_each_permutation(
    std::size_t n, std::uint64_t first, std::uint64_t last,
    const std::function<void(std::uint64_t, const Permutation&)>& visit);

/// All n! permutations in lexicographic order.
std::vector<Permutation> enumerate_permutations(std::size_t n);

}  // namespace toepsense

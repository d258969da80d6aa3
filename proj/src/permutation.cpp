#include "toepsense/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "toepsense/error.hpp"

namespace toepsense {

Permutation::Permutation(std::vector<std::size_t> image)
    : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t j = 0; j < image_.size(); ++j) {
    const std::size_t v = image_[j];
    if (v >= image_.size()) {
      throw Error(ErrorCode::kInvalidPermutation,
                  "entry " + std::to_string(j + 1) + " (value " +
                      std::to_string(v + 1) + ") is out of range 1.." +
                      std::to_string(image_.size()));
    }
    if (seen[v]) {
      throw Error(ErrorCode::kInvalidPermutation,
                  "entry " + std::to_string(j + 1) + " repeats value " +
                      std::to_string(v + 1) + "; not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::from_one_based(const std::vector<std::size_t>& image) {
  std::vector<std::size_t> zero(image.size());
  for (std::size_t j = 0; j < image.size(); ++j) {
    if (image[j] == 0) {
      throw Error(ErrorCode::kInvalidPermutation,
                  "entry " + std::to_string(j + 1) +
                      " is 0; images are 1-based");
    }
    zero[j] = image[j] - 1;
  }
  return Permutation(std::move(zero));
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), std::size_t{0});
  return Permutation(std::move(image));
}

Permutation Permutation::cyclic_shift(std::size_t n, std::int64_t shift) {
  const auto m = static_cast<std::int64_t>(n);
  std::vector<std::size_t> image(n);
  for (std::int64_t i = 0; i < m; ++i) {
    image[static_cast<std::size_t>(i)] =
        static_cast<std::size_t>((((i + shift) % m) + m) % m);
  }
  return Permutation(std::move(image));
}

std::vector<std::size_t> Permutation::one_based() const {
  std::vector<std::size_t> out(image_);
  for (auto& v : out) ++v;
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(image_.size());
  for (std::size_t j = 0; j < image_.size(); ++j) inv[image_[j]] = j;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) {
    throw Error(ErrorCode::kDimensionMismatch, "composing permutations of different size");
  }
  std::vector<std::size_t> out(size());
  for (std::size_t j = 0; j < size(); ++j) out[j] = image_[other.image_[j]];
  return Permutation(std::move(out));
}

Permutation Permutation::pow(std::int64_t e) const {
  Permutation base = e < 0 ? inverse() : *this;
  std::uint64_t k = static_cast<std::uint64_t>(e < 0 ? -e : e);
  Permutation result = identity(size());
  while (k > 0) {
    if (k & 1) result = result.compose(base);
    base = base.compose(base);
    k >>= 1;
  }
  return result;
}

std::size_t Permutation::cycle_count() const {
  std::vector<bool> seen(size(), false);
  std::size_t cycles = 0;
  for (std::size_t s = 0; s < size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t j = s; !seen[j]; j = image_[j]) seen[j] = true;
  }
  return cycles;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t j = 0; j < size(); ++j)
    if (image_[j] != j) return false;
  return true;
}

Permutation parse_permutation(std::string_view text, std::size_t expected_n) {
  if (text.find_first_of("(),") != std::string_view::npos) {
    throw Error(ErrorCode::kInvalidPermutation,
                "cycle notation is not accepted; give the one-line image "
                "sigma(1) ... sigma(n), e.g. \"1 3 4 5 6 2\"");
  }
  std::vector<std::size_t> image;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[end])))
      ++end;
    const std::string_view token = text.substr(pos, end - pos);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::kInvalidPermutation,
                  "entry " + std::to_string(image.size() + 1) + " ('" +
                      std::string(token) + "') is not a positive integer");
    }
    image.push_back(value);
    pos = end;
  }
  if (image.empty()) {
    throw Error(ErrorCode::kInvalidPermutation, "empty permutation");
  }
  if (expected_n != 0 && image.size() != expected_n) {
    throw Error(ErrorCode::kInvalidPermutation,
                "expected " + std::to_string(expected_n) + " entries, got " +
                    std::to_string(image.size()));
  }
  return Permutation::from_one_based(image);
}

std::string format_permutation(const Permutation& sigma) {
  std::ostringstream os;
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    if (j) os << ' ';
    os << sigma(j) + 1;
  }
  return os.str();
}

ExactMatrix perm_matrix(PrimeField field, const Permutation& sigma) {
  ExactMatrix p(field, sigma.size(), sigma.size());
  for (std::size_t j = 0; j < sigma.size(); ++j) p.at(sigma(j), j) = field.one();
  return p;
}

ExactMatrix permute_rows(const Permutation& sigma, const ExactMatrix& m) {
  if (sigma.size() != m.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "permutation size differs from row count");
  }
  ExactMatrix out(m.field(), m.rows(), m.cols());
  for (std::size_t j = 0; j < m.rows(); ++j)
    for (std::size_t c = 0; c < m.cols(); ++c) out.at(sigma(j), c) = m(j, c);
  return out;
}

std::uint64_t factorial(std::size_t n) {
  if (n > 20) {
    throw Error(ErrorCode::kGuardExceeded, "factorial overflows 64 bits for n > 20");
  }
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

namespace {

void check_enumeration_guard(std::size_t n) {
  if (n > kMaxEnumerationSize) {
    throw Error(ErrorCode::kGuardExceeded,
                "enumeration limited to n <= " +
                    std::to_string(kMaxEnumerationSize) + ", got " +
                    std::to_string(n));
  }
}

}  // namespace

Permutation unrank_permutation(std::uint64_t index, std::size_t n) {
  check_enumeration_guard(n);
  if (index >= factorial(n)) {
    throw Error(ErrorCode::kInvalidArgument,
                "index " + std::to_string(index) + " >= " + std::to_string(n) + "!");
  }
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  std::vector<std::size_t> image;
  image.reserve(n);
  for (std::size_t k = n; k > 0; --k) {
    const std::uint64_t block = factorial(k - 1);
    const auto digit = static_cast<std::size_t>(index / block);
    index %= block;
    image.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return Permutation(std::move(image));
}

std::uint64_t rank_permutation(const Permutation& sigma) {
  const std::size_t n = sigma.size();
  check_enumeration_guard(n);
  std::uint64_t index = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t smaller_later = 0;
    for (std::size_t k = j + 1; k < n; ++k)
      if (sigma(k) < sigma(j)) ++smaller_later;
    index += smaller_later * factorial(n - 1 - j);
  }
  return index;
}

void for_each_permutation(
    std::size_t n, std::uint64_t first, std::uint64_t last,
    const std::function<void(std::uint64_t, const Permutation&)>& visit) {
  check_enumeration_guard(n);
  last = std::min(last, factorial(n));
  if (first >= last) return;
  std::vector<std::size_t> image = unrank_permutation(first, n).image();
  for (std::uint64_t index = first; index < last; ++index) {
    visit(index, Permutation(image));
    std::next_permutation(image.begin(), image.end());
  }
}

std::vector<Permutation> enumerate_permutations(std::size_t n) {
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  for_each_permutation(n, 0, factorial(n),
                       [&](std::uint64_t, const Permutation& p) { out.push_back(p); });
  return out;
}

}  // namespace toepsense

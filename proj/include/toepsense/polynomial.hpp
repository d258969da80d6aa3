#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "toepsense/field.hpp"

namespace toepsense {

using Integer = boost::multiprecision::cpp_int;

/// Power product of the variables y_k, k in Z. Stored as (k, exponent)
/// pairs sorted by descending k with no zero exponents, which is the order
/// the lex comparison walks.
class Monomial {
 public:
  Monomial() = default;
  // Pairs may arrive in any order; repeated variables are merged and zero
  // exponents dropped.
  explicit Monomial(std::vector<std::pair<int, unsigned>> powers);
  static Monomial variable(int k, unsigned exponent = 1);

  const std::vector<std::pair<int, unsigned>>& powers() const noexcept {
    return powers_;
  }
  unsigned exponent(int k) const noexcept;
  unsigned total_degree() const noexcept;
  bool is_one() const noexcept { return powers_.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<int, unsigned>> powers_;
};

/// Lex order with y_g > y_h whenever g > h: the monomial with the larger
/// exponent on the largest variable where they differ is larger.
/// Returns <0, 0, >0.
int lex_compare(const Monomial& a, const Monomial& b) noexcept;

struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    return lex_compare(a, b) > 0;
  }
};

/// "x_5^2*x_3*x_1*x_0*x_-1", descending index; "1" for the empty monomial.
std::string to_string(const Monomial& m);
Monomial parse_monomial(const std::string& text);

struct Term {
  Monomial monomial;
  Integer coefficient;
};

/// Sparse polynomial over Z, terms kept in descending lex order so the
/// first term is the initial term.
class SparsePolynomial {
 public:
  using TermMap = std::map<Monomial, Integer, LexGreater>;

  SparsePolynomial() = default;
  static SparsePolynomial constant(const Integer& c);
  static SparsePolynomial variable(int k);
  static SparsePolynomial term(const Monomial& m, const Integer& c);

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(const Monomial& m) const;

  // Adds c * m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Integer& c);

  SparsePolynomial& operator+=(const SparsePolynomial& o);
  SparsePolynomial& operator-=(const SparsePolynomial& o);
  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) {
    return a += b;
  }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) {
    return a -= b;
  }
  friend SparsePolynomial operator*(const SparsePolynomial& a,
                                    const SparsePolynomial& b);
  SparsePolynomial operator-() const;

  friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

  FieldScalar evaluate(const PrimeField& field,
                       const std::function<FieldScalar(int)>& value_of) const;

 private:
  TermMap terms_;
};

/// Lex-largest term; throws kZeroPolynomial for the zero polynomial.
Term initial_monomial(const SparsePolynomial& p);

std::string to_string(const SparsePolynomial& p);

}  // namespace toepsense

#include <algorithm>
#include <random>

#include "doctest.h"
#include "toepsense/error.hpp"
#include "toepsense/oracle.hpp"
#include "toepsense/polynomial.hpp"
#include "toepsense/symbolic.hpp"
#include "toepsense/toeplitz.hpp"

using namespace toepsense;

namespace {

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int k = lo; k <= hi; ++k) v.push_back(k);
  return v;
}

std::vector<int> random_subset(std::mt19937_64& rng, int lo, int hi, std::size_t k) {
  std::vector<int> all = range(lo, hi);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

TEST_CASE("monomial text and lex order") {
  const Monomial m = parse_monomial("x_5^2*x_3*x_1*x_0*x_-1");
  CHECK(m.exponent(5) == 2);
  CHECK(m.exponent(-1) == 1);
  CHECK(m.exponent(4) == 0);
  CHECK(m.total_degree() == 6);
  CHECK(to_string(m) == "x_5^2*x_3*x_1*x_0*x_-1");
  CHECK(to_string(Monomial()) == "1");
  CHECK(parse_monomial("1").is_one());
  CHECK(to_string(Monomial::variable(2) * Monomial::variable(-3) * Monomial::variable(2)) ==
        "x_2^2*x_-3");
  CHECK_THROWS_AS(parse_monomial("y_2"), Error);

  // y_gamma > y_delta for gamma > delta; compare the largest variable first
  const auto gt = [](const char* a, const char* b) {
    return lex_compare(parse_monomial(a), parse_monomial(b)) > 0;
  };
  CHECK(gt("x_1", "x_0^5"));
  CHECK(gt("x_2*x_-3", "x_1^4"));
  CHECK(gt("x_2^2", "x_2*x_1"));
  CHECK(gt("x_2*x_1", "x_2"));
  CHECK(gt("x_0", "1"));
  CHECK(lex_compare(parse_monomial("x_3*x_1"), parse_monomial("x_3*x_1")) == 0);
}

TEST_CASE("polynomial arithmetic") {
  const SparsePolynomial a = SparsePolynomial::variable(1) + SparsePolynomial::constant(2);
  const SparsePolynomial b = SparsePolynomial::variable(1) - SparsePolynomial::constant(2);
  const SparsePolynomial prod = a * b;
  CHECK(prod.size() == 2);
  CHECK(prod.coefficient(parse_monomial("x_1^2")) == 1);
  CHECK(prod.coefficient(Monomial()) == -4);
  CHECK((prod - prod).is_zero());
  CHECK((-prod).coefficient(Monomial()) == 4);
  CHECK(to_string(initial_monomial(prod).monomial) == "x_1^2");
  CHECK_THROWS_AS(initial_monomial(SparsePolynomial()), Error);

  const PrimeField f;
  const FieldScalar at3 = prod.evaluate(f, [&](int) { return f.from_int(3); });
  CHECK(at3 == f.from_int(5));
}

TEST_CASE("toeplitz windows and anti-diagonals") {
  const SymbolicMatrix col = symbolic_toeplitz({1, 2}, {1});
  CHECK(col(0, 0) == SparsePolynomial::variable(0));
  CHECK(col(1, 0) == SparsePolynomial::variable(1));
  const SymbolicMatrix w = symbolic_toeplitz({3, 7}, {1, 4});
  CHECK(w(0, 0) == SparsePolynomial::variable(2));
  CHECK(w(0, 1) == SparsePolynomial::variable(-1));
  CHECK(w(1, 0) == SparsePolynomial::variable(6));
  CHECK(w(1, 1) == SparsePolynomial::variable(3));
  CHECK(to_string(antidiagonal_monomial({1, 2, 3}, {1, 2, 3})) == "x_2*x_0*x_-2");
  CHECK(to_string(antidiagonal_monomial({2, 5}, {1, 3})) == "x_4*x_-1");
  CHECK(to_string(antidiagonal_monomial({4}, {9})) == "x_-5");
  CHECK(leibniz_det(symbolic_toeplitz({1}, {1})) == SparsePolynomial::variable(0));
}

TEST_CASE("small toeplitz determinants") {
  const SparsePolynomial d2 = leibniz_det(symbolic_toeplitz({1, 2}, {1, 2}));
  CHECK(d2.size() == 2);
  CHECK(d2.coefficient(parse_monomial("x_0^2")) == 1);
  CHECK(d2.coefficient(parse_monomial("x_1*x_-1")) == -1);
  // x_1 outranks x_0, so the mixed term leads
  CHECK(to_string(initial_monomial(d2).monomial) == "x_1*x_-1");
  CHECK(initial_monomial(d2).coefficient == -1);

  // x0^3 - 2 x0 x1 x-1 - x0 x2 x-2 + x1^2 x-2 + x2 x-1^2
  const SparsePolynomial d3 = leibniz_det(symbolic_toeplitz({1, 2, 3}, {1, 2, 3}));
  CHECK(d3.size() == 5);
  CHECK(d3.coefficient(parse_monomial("x_0^3")) == 1);
  CHECK(d3.coefficient(parse_monomial("x_1*x_0*x_-1")) == -2);
  CHECK(d3.coefficient(parse_monomial("x_2*x_0*x_-2")) == -1);
  CHECK(d3.coefficient(parse_monomial("x_1^2*x_-2")) == 1);
  CHECK(d3.coefficient(parse_monomial("x_2*x_-1^2")) == 1);
  CHECK(initial_monomial(d3).monomial == antidiagonal_monomial({1, 2, 3}, {1, 2, 3}));

  CHECK_THROWS_AS(symbolic_toeplitz({2, 1}, {1}), Error);
  CHECK_THROWS_AS(leibniz_det(symbolic_toeplitz({1, 2}, {1})), Error);
  CHECK_THROWS_AS(leibniz_det(symbolic_toeplitz(range(1, 11), range(1, 11))), Error);
}

TEST_CASE("initial monomial of a toeplitz minor is the anti-diagonal product") {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 200; ++k) {
    const std::size_t d = 1 + rng() % 4;
    const auto rows = random_subset(rng, -6, 6, d);
    const auto cols = random_subset(rng, -6, 6, d);
    CAPTURE(k);
    const SparsePolynomial det = leibniz_det(symbolic_toeplitz(rows, cols));
    const Term init = initial_monomial(det);
    CHECK(init.monomial == antidiagonal_monomial(rows, cols));
    CHECK(abs(init.coefficient) == 1);
  }
}

TEST_CASE("maximal minors of the 6 x 3 window have distinct initial terms") {
  CHECK(certify_minors_li(range(1, 6), {1, 2, 3}));
  CHECK(certify_minors_li(range(1, 4), {1, 2}));
  CHECK(certify_minors_li({3}, {3}));
  CHECK(certify_minors_li(range(0, 7), {2, 4, 5}));
}

TEST_CASE("evaluation commutes with the determinant") {
  const PrimeField f;
  std::mt19937_64 rng(77);
  for (int k = 0; k < 20; ++k) {
    const std::size_t d = 2 + rng() % 3;
    const auto rows = random_subset(rng, 0, 7, d);
    const auto cols = random_subset(rng, 0, 4, d);
    std::map<int, FieldScalar> values;
    for (int v = -10; v <= 10; ++v) values[v] = f.uniform(rng);
    ExactMatrix numeric(f, d, d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) numeric.at(a, b) = values[rows[a] - cols[b]];
    const SparsePolynomial det = leibniz_det(symbolic_toeplitz(rows, cols));
    CHECK(det.evaluate(f, [&](int v) { return values.at(v); }) == determinant(numeric));
  }
}

TEST_CASE("evaluating det [U, PU] matches the numeric determinant") {
  const PrimeField f;
  std::mt19937_64 rng(5);
  for (const auto& image : {std::vector<std::size_t>{3, 1, 2, 5, 6, 4},
                            std::vector<std::size_t>{3, 4, 5, 6, 1, 2},
                            std::vector<std::size_t>{4, 3, 5, 1, 6, 2},
                            std::vector<std::size_t>{1, 3, 4, 5, 6, 2}}) {
    const Permutation sigma = Permutation::from_one_based(image);
    const SparsePolynomial det = symbolic_det_vpv(sigma, 6, 3).det;
    for (int k = 0; k < 10; ++k) {
      const ToeplitzSpec spec = sample_toeplitz(f, 6, 3, rng);
      const ExactMatrix v = build_toeplitz(spec);
      CHECK(det.evaluate(f, [&](int x) { return spec.diagonal(x); }) ==
            determinant(hconcat(v, permute_rows(sigma, v))));
    }
  }
}

TEST_CASE("frozen determinants of [U, PU] for the worked examples") {
  struct Case {
    std::vector<std::size_t> image;
    const char* monomial;
    int coefficient;
    std::size_t terms;
  };
  const Case cases[] = {
      {{3, 1, 2, 5, 6, 4}, "x_5^2*x_3*x_1*x_0*x_-1", 1, 276},
      {{3, 4, 5, 6, 1, 2}, "x_5^2*x_3^2*x_1*x_-2", -1, 155},
      {{4, 3, 5, 1, 6, 2}, "x_5^2*x_3*x_2*x_1*x_-1", -1, 367},
  };
  for (const auto& c : cases) {
    const auto sym = symbolic_det_vpv(Permutation::from_one_based(c.image), 6, 3);
    REQUIRE(sym.initial);
    CHECK(to_string(sym.initial->monomial) == c.monomial);
    CHECK(sym.initial->coefficient == c.coefficient);
    CHECK(sym.det.size() == c.terms);
  }
  const auto id = symbolic_det_vpv(Permutation::identity(6), 6, 3);
  CHECK_FALSE(id.initial);
  CHECK(id.det.is_zero());
  CHECK_THROWS_AS(symbolic_det_vpv(Permutation::identity(7), 7, 3), Error);
}

TEST_CASE("symbolic determinant vanishes exactly when the oracle rank drops, over S_6") {
  const OracleConfig cfg;
  for (const Permutation& sigma : enumerate_permutations(6)) {
    const auto sym = symbolic_det_vpv(sigma, 6, 3);
    CHECK(sym.initial.has_value() == (oracle_rank_vpv(sigma, 6, 3, cfg) == 6));
  }
}

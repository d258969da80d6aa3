#include "toepsense/polynomial.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "toepsense/error.hpp"

namespace toepsense {

namespace {

void normalize(std::vector<std::pair<int, unsigned>>& powers) {
  std::sort(powers.begin(), powers.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<std::pair<int, unsigned>> merged;
  for (const auto& [k, e] : powers) {
    if (!merged.empty() && merged.back().first == k) {
      merged.back().second += e;
    } else {
      merged.emplace_back(k, e);
    }
  }
  std::erase_if(merged, [](const auto& p) { return p.second == 0; });
  powers = std::move(merged);
}

}  // namespace

Monomial::Monomial(std::vector<std::pair<int, unsigned>> powers)
    : powers_(std::move(powers)) {
  normalize(powers_);
}

Monomial Monomial::variable(int k, unsigned exponent) {
  return Monomial({{k, exponent}});
}

unsigned Monomial::exponent(int k) const noexcept {
  for (const auto& [var, e] : powers_)
    if (var == k) return e;
  return 0;
}

unsigned Monomial::total_degree() const noexcept {
  unsigned deg = 0;
  for (const auto& p : powers_) deg += p.second;
  return deg;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto& r = out.powers_;
  r.reserve(a.powers_.size() + b.powers_.size());
  auto i = a.powers_.begin();
  auto j = b.powers_.begin();
  while (i != a.powers_.end() || j != b.powers_.end()) {
    if (j == b.powers_.end() || (i != a.powers_.end() && i->first > j->first)) {
      r.push_back(*i++);
    } else if (i == a.powers_.end() || j->first > i->first) {
      r.push_back(*j++);
    } else {
      r.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

int lex_compare(const Monomial& a, const Monomial& b) noexcept {
  const auto& pa = a.powers();
  const auto& pb = b.powers();
  std::size_t i = 0;
  for (; i < pa.size() && i < pb.size(); ++i) {
    if (pa[i].first != pb[i].first) return pa[i].first > pb[i].first ? 1 : -1;
    if (pa[i].second != pb[i].second) return pa[i].second > pb[i].second ? 1 : -1;
  }
  if (pa.size() == pb.size()) return 0;
  return i < pa.size() ? 1 : -1;
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, e] : m.powers()) {
    if (!first) os << '*';
    first = false;
    os << "x_" << k;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

Monomial parse_monomial(const std::string& text) {
  if (text == "1") return {};
  std::vector<std::pair<int, unsigned>> powers;
  std::size_t pos = 0;
  const auto fail = [&text](const std::string& why) {
    return Error(ErrorCode::kInvalidArgument,
                 "bad monomial '" + text + "': " + why);
  };
  while (pos < text.size()) {
    if (text.compare(pos, 2, "x_") != 0) throw fail("expected x_<k>");
    pos += 2;
    int k = 0;
    auto [p1, ec1] = std::from_chars(text.data() + pos, text.data() + text.size(), k);
    if (ec1 != std::errc{}) throw fail("bad variable index");
    pos = static_cast<std::size_t>(p1 - text.data());
    unsigned e = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      auto [p2, ec2] = std::from_chars(text.data() + pos, text.data() + text.size(), e);
      if (ec2 != std::errc{}) throw fail("bad exponent");
      pos = static_cast<std::size_t>(p2 - text.data());
    }
    powers.emplace_back(k, e);
    if (pos < text.size()) {
      if (text[pos] != '*') throw fail("expected '*'");
      ++pos;
    }
  }
  return Monomial(std::move(powers));
}

SparsePolynomial SparsePolynomial::constant(const Integer& c) {
  return term(Monomial{}, c);
}

SparsePolynomial SparsePolynomial::variable(int k) {
  return term(Monomial::variable(k), 1);
}

SparsePolynomial SparsePolynomial::term(const Monomial& m, const Integer& c) {
  SparsePolynomial p;
  p.add_term(m, c);
  return p;
}

Integer SparsePolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void SparsePolynomial::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
  SparsePolynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

SparsePolynomial SparsePolynomial::operator-() const {
  SparsePolynomial out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

FieldScalar SparsePolynomial::evaluate(
    const PrimeField& field, const std::function<FieldScalar(int)>& value_of) const {
  const Integer p = field.modulus();
  FieldScalar sum = field.zero();
  for (const auto& [m, c] : terms_) {
    Integer r = c % p;
    if (r < 0) r += p;
    FieldScalar t{static_cast<std::uint64_t>(r)};
    for (const auto& [k, e] : m.powers()) t = field.mul(t, field.pow(value_of(k), e));
    sum = field.add(sum, t);
  }
  return sum;
}

Term initial_monomial(const SparsePolynomial& p) {
  if (p.is_zero()) {
    throw Error(ErrorCode::kZeroPolynomial, "zero polynomial has no initial monomial");
  }
  const auto& [m, c] = *p.terms().begin();
  return {m, c};
}

std::string to_string(const SparsePolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << to_string(m);
    }
  }
  return os.str();
}

}  // namespace toepsense

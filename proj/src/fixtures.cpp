#include "toepsense/fixtures.hpp"

#include <algorithm>
#include <optional>

#include "toepsense/error.hpp"
#include "toepsense/shift_analysis.hpp"
#include "toepsense/symbolic.hpp"

namespace toepsense {

namespace detail {
// Generated at build time from fixtures/*.json.
extern const std::vector<std::pair<std::string_view, std::string_view>> kEmbeddedFixtures;
}  // namespace detail

namespace {

json matrix_rows(const Permutation& sigma) {
  const PrimeField f;
  const ExactMatrix p = perm_matrix(f, sigma);
  json rows = json::array();
  for (std::size_t i = 0; i < p.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < p.cols(); ++j) row.push_back(f.to_signed(p(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::optional<std::int64_t> cyclic_exponent(const Permutation& sigma) {
  const std::size_t n = sigma.size();
  for (std::size_t t = 0; t < n; ++t) {
    if (sigma == Permutation::cyclic_shift(n, static_cast<std::int64_t>(t))) {
      return static_cast<std::int64_t>(t);
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& [name, _] : detail::kEmbeddedFixtures) names.emplace_back(name);
  std::sort(names.begin(), names.end());
  return names;
}

Fixture fixture_from_json(const json& doc) {
  try {
    Fixture f;
    f.name = doc.at("name").get<std::string>();
    f.description = doc.value("description", "");
    f.n = doc.at("n").get<std::size_t>();
    f.d = doc.at("d").get<std::size_t>();
    f.sigma = Permutation::from_one_based(doc.at("permutation").get<std::vector<std::size_t>>());
    if (f.sigma.size() != f.n) {
      throw Error(ErrorCode::kDimensionMismatch, "fixture permutation length differs from n");
    }
    f.expect = doc.at("expect");
    for (const auto& [field, entry] : f.expect.items()) {
      if (!entry.contains("value") || !entry.contains("origin")) {
        throw Error(ErrorCode::kInvalidArgument,
                    "fixture field '" + field + "' lacks value or origin");
      }
      const auto origin = entry.at("origin").get<std::string>();
      if (origin != "published" && origin != "trivial" && origin != "derived") {
        throw Error(ErrorCode::kInvalidArgument,
                    "fixture field '" + field + "' has unknown origin '" + origin + "'");
      }
    }
    return f;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("malformed fixture: ") + e.what());
  }
}

Fixture load_fixture(std::string_view name) {
  for (const auto& [key, text] : detail::kEmbeddedFixtures) {
    if (key == name) return fixture_from_json(json::parse(text));
  }
  std::string known;
  for (const auto& n : fixture_names()) known += (known.empty() ? "" : ", ") + n;
  throw Error(ErrorCode::kUnknownFixture,
              "unknown fixture '" + std::string(name) + "' (known: " + known + ")");
}

bool FixtureResult::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const FixtureCheck& c) { return c.pass || !c.enforced; });
}

FixtureResult run_fixture(const Fixture& fx, const OracleConfig& cfg) {
  FixtureResult result;
  result.name = fx.name;
  std::optional<ShiftAnalysis> analysis;
  const auto get_analysis = [&]() -> const ShiftAnalysis& {
    if (!analysis) analysis = decide_usp(fx.sigma, fx.d);
    return *analysis;
  };

  for (const auto& [field, entry] : fx.expect.items()) {
    FixtureCheck check;
    check.field = field;
    check.origin = entry.at("origin").get<std::string>();
    check.enforced = entry.value("enforce", true);
    check.expected = entry.at("value");

    if (field == "matrix") {
      check.actual = matrix_rows(fx.sigma);
    } else if (field == "power_of" || field == "generator_matrix") {
      const auto& spec = fx.expect.at("power_of").at("value");
      const Permutation gen = Permutation::from_one_based(
          spec.at("generator").get<std::vector<std::size_t>>());
      const auto e = spec.at("exponent").get<std::int64_t>();
      if (field == "generator_matrix") {
        check.actual = matrix_rows(gen);
      } else {
        check.actual = {{"generator", gen.one_based()}, {"exponent", e}};
        if (!(gen.pow(e) == fx.sigma)) check.actual["power_image"] = gen.pow(e).one_based();
      }
    } else if (field == "r0") {
      check.actual = get_analysis().r0;
    } else if (field == "residuals") {
      json actual = json::object();
      for (const auto& [t, _] : check.expected.items()) {
        actual[t] = residual_rank(fx.sigma, std::stoi(t));
      }
      check.actual = std::move(actual);
    } else if (field == "eligible") {
      json el = json::array();
      for (const auto& w : get_analysis().eligible) el.push_back(to_json(w));
      check.actual = std::move(el);
    } else if (field == "predicted_rank") {
      const auto& a = get_analysis();
      check.actual = a.predicted_rank ? json(*a.predicted_rank) : json(nullptr);
    } else if (field == "usp") {
      check.actual = std::string(to_string(get_analysis().usp));
    } else if (field == "oracle_rank") {
      check.actual = oracle_rank_vpv(fx.sigma, fx.n, fx.d, cfg);
    } else if (field == "cyclic_formula_rank") {
      const auto t = cyclic_exponent(fx.sigma);
      check.actual = t ? json(cyclic_rank_formula(*t, fx.n, fx.d)) : json(nullptr);
    } else if (field == "initial_monomial" || field == "published_initial_monomial") {
      const auto sym = symbolic_det_vpv(fx.sigma, fx.n, fx.d);
      check.actual = sym.initial ? json(to_string(sym.initial->monomial)) : json(nullptr);
    } else if (field == "initial_coefficient") {
      const auto sym = symbolic_det_vpv(fx.sigma, fx.n, fx.d);
      check.actual = sym.initial ? coefficient_json(sym.initial->coefficient) : json(nullptr);
    } else {
      throw Error(ErrorCode::kInvalidArgument,
                  "fixture " + fx.name + " has unsupported field '" + field + "'");
    }
    check.pass = check.actual == check.expected;
    result.checks.push_back(std::move(check));
  }
  return result;
}

json to_json(const FixtureResult& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"field", c.field},
                      {"origin", c.origin},
                      {"enforced", c.enforced},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"pass", c.pass}});
  }
  return {{"name", r.name}, {"passed", r.passed()}, {"checks", std::move(checks)}};
}

}  // namespace toepsense

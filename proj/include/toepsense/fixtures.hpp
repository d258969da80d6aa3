#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "toepsense/oracle.hpp"
#include "toepsense/permutation.hpp"
#include "toepsense/report.hpp"

namespace toepsense {

/// A worked example with expected values. Each entry of `expect` is
/// {"value": ..., "origin": "published" | "trivial" | "derived"} and may
/// carry "enforce": false to be reported without gating.
struct Fixture {
  std::string name;
  std::string description;
  std::size_t n = 0;
  std::size_t d = 0;
  Permutation sigma;
  json expect;
};

std::vector<std::string> fixture_names();
Fixture load_fixture(std::string_view name);
Fixture fixture_from_json(const json& doc);

struct FixtureCheck {
  std::string field;
  std::string origin;
  bool enforced = true;
  json expected;
  json actual;
  bool pass = false;
};

struct FixtureResult {
  std::string name;
  std::vector<FixtureCheck> checks;

  bool passed() const;
};

FixtureResult run_fixture(const Fixture& fixture, const OracleConfig& cfg);

json to_json(const FixtureResult& r);

}  // namespace toepsense

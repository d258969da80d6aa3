#include "toepsense/report.hpp"

#include <limits>

#include "toepsense/error.hpp"

namespace toepsense {

json to_json(const ToeplitzSpec& spec) {
  json diag = json::array();
  for (FieldScalar v : spec.diagonals()) diag.push_back(v.value);
  return {{"n", spec.n()}, {"d", spec.d()}, {"diagonals", std::move(diag)}};
}

ToeplitzSpec toeplitz_from_json(const json& j, const PrimeField& field) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    const auto d = j.at("d").get<std::size_t>();
    std::vector<FieldScalar> diag;
    for (const auto& v : j.at("diagonals")) diag.push_back(field.from_int(v.get<std::int64_t>()));
    return ToeplitzSpec(field, n, d, std::move(diag));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("bad ToeplitzSpec JSON: ") + e.what());
  }
}

json to_json(const ShiftWitness& w) { return json::array({w.t, w.r_t}); }

json to_json(const Permutation& sigma) { return sigma.one_based(); }

json to_json(const ShiftAnalysis& a) {
  json residuals = json::object();
  for (const auto& w : a.residuals) residuals[std::to_string(w.t)] = w.r_t;
  json eligible = json::array();
  for (const auto& w : a.eligible) eligible.push_back(to_json(w));
  return {
      {"n", a.n},
      {"d", a.d},
      {"r0", a.r0},
      {"residuals", std::move(residuals)},
      {"eligible", std::move(eligible)},
      {"predicted_rank", a.predicted_rank ? json(*a.predicted_rank) : json(nullptr)},
      {"usp", std::string(to_string(a.usp))},
      {"certificate", a.certificate},
  };
}

json coefficient_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() &&
      c <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(c);
  }
  return c.str();
}

json to_json(const SparsePolynomial& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json exps = json::object();
    for (const auto& [k, e] : m.powers()) exps[std::to_string(k)] = e;
    terms.push_back({{"coeff", coefficient_json(c)}, {"exponents", std::move(exps)}});
  }
  return terms;
}

json to_json(const ClassificationRecord& r) {
  json eligible = json::array();
  for (const auto& w : r.eligible) eligible.push_back(to_json(w));
  return {
      {"index", r.index},
      {"permutation", to_json(r.sigma)},
      {"r0", r.r0},
      {"eligible", std::move(eligible)},
      {"predicted_rank", r.predicted_rank ? json(*r.predicted_rank) : json(nullptr)},
      {"oracle_rank", r.oracle_rank},
      {"trials_used", r.trials_used},
      {"covered", r.covered},
      {"consistent", r.consistent},
      {"orbit_size", r.orbit_size},
  };
}

ClassificationRecord record_from_json(const json& j) {
  ClassificationRecord r;
  r.index = j.at("index").get<std::uint64_t>();
  r.sigma = Permutation::from_one_based(j.at("permutation").get<std::vector<std::size_t>>());
  r.r0 = j.at("r0").get<std::size_t>();
  for (const auto& w : j.at("eligible")) {
    r.eligible.push_back({w.at(0).get<int>(), w.at(1).get<std::size_t>()});
  }
  if (!j.at("predicted_rank").is_null()) r.predicted_rank = j.at("predicted_rank").get<std::size_t>();
  r.oracle_rank = j.at("oracle_rank").get<std::size_t>();
  r.trials_used = j.at("trials_used").get<std::size_t>();
  r.covered = j.at("covered").get<bool>();
  r.consistent = j.at("consistent").get<bool>();
  r.orbit_size = j.at("orbit_size").get<std::uint64_t>();
  return r;
}

json to_json(const OracleConfig& cfg) {
  return {{"trials", cfg.trials}, {"seed", cfg.seed}, {"prime", cfg.field.modulus()}};
}

json to_json(const HarnessReport& r, bool include_timing) {
  json hist = json::object();
  for (const auto& [rank, count] : r.rank_histogram) hist[std::to_string(rank)] = count;
  json cex = json::array();
  for (const auto& rec : r.counterexamples) cex.push_back(to_json(rec));
  json bad = json::array();
  for (const auto& rec : r.inconsistencies) bad.push_back(to_json(rec));
  json out = {
      {"n", r.n},
      {"d", r.d},
      {"total", r.total},
      {"rank_histogram", std::move(hist)},
      {"covered", r.covered},
      {"not_covered", r.not_covered},
      {"classified", r.classified},
      {"counterexamples", std::move(cex)},
      {"inconsistencies", std::move(bad)},
      {"verified", r.verified()},
      {"scope", r.in_conjecture_scope ? "conjecture (n = 2d)"
                                      : "exploratory (n != 2d, outside conjecture scope)"},
      {"evidence", "probabilistic"},
      {"per_permutation_error_bound", r.per_permutation_error_bound},
      {"config", {{"trials", r.trials},
                  {"escalated_trials", kEscalatedTrials},
                  {"seed", r.seed},
                  {"prime", r.prime},
                  {"symmetry_reduction", r.symmetry_reduction}}},
  };
  if (r.symmetry_reduction) {
    out["symmetry_convention"] =
        "each orbit {sigma, w sigma w} (w: i -> n+1-i) is represented by its "
        "lexicographically smaller member and weighted by the orbit size";
  }
  if (include_timing) {
    out["wall_seconds"] = r.wall_seconds;
    out["workers"] = r.workers;
    out["resumed"] = r.resumed;
  }
  return out;
}

json envelope(std::string_view command, json payload) {
  payload["schema"] = std::string(kSchemaTag);
  payload["command"] = std::string(command);
  return payload;
}

}  // namespace toepsense

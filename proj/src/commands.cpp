#include "toepsense/commands.hpp"

#include <iomanip>
#include <sstream>

#include "toepsense/error.hpp"
#include "toepsense/fixtures.hpp"
#include "toepsense/shift_analysis.hpp"
#include "toepsense/symbolic.hpp"

namespace toepsense {

namespace {

std::optional<std::int64_t> cyclic_exponent(const Permutation& sigma) {
  const std::size_t n = sigma.size();
  if (n == 0) return std::nullopt;
  const auto t = static_cast<std::int64_t>(sigma(0));
  if (sigma == Permutation::cyclic_shift(n, t)) return t;
  return std::nullopt;
}

void require_size(const Permutation& sigma, std::size_t d) {
  if (d < 1 || sigma.size() < 2 * d) {
    throw Error(ErrorCode::kInvalidArgument,
                "need n >= 2d >= 2, got n = " + std::to_string(sigma.size()) +
                    ", d = " + std::to_string(d));
  }
}

json oracle_block(const Permutation& sigma, std::size_t d, const OracleConfig& cfg) {
  const std::size_t n = sigma.size();
  const std::size_t rank = oracle_rank_vpv(sigma, n, d, cfg);
  const IntersectionDims dims = oracle_intersection_dims(sigma, n, d, cfg);
  return {{"rank", rank},
          {"dim_meet", dims.dim_meet},
          {"dim_fixed_meet", dims.dim_fixed_meet},
          {"usp", dims.dim_meet == dims.dim_fixed_meet ? "holds" : "fails"},
          {"evidence", "probabilistic"},
          {"config", to_json(cfg)}};
}

}  // namespace

CommandResult analyze_command(const Permutation& sigma, std::size_t d,
                              const OracleConfig& cfg) {
  require_size(sigma, d);
  const ShiftAnalysis a = decide_usp(sigma, d);
  json oracle = oracle_block(sigma, d, cfg);
  const std::size_t orank = oracle["rank"];

  CommandResult out;
  out.payload = {{"permutation", to_json(sigma)},
                 {"analysis", to_json(a)},
                 {"prediction", a.predicted_rank ? "predicted" : "not-covered"},
                 {"expected_fixed_intersection_dim",
                  expected_fixed_intersection_dim(sigma, d)},
                 {"oracle", std::move(oracle)}};
  bool consistent = !a.predicted_rank || *a.predicted_rank == orank;
  if (a.usp != UspVerdict::kUnknown) {
    consistent = consistent &&
                 (a.usp == UspVerdict::kHolds) == (out.payload["oracle"]["usp"] == "holds");
  }
  out.payload["consistent"] = consistent;
  out.verified = consistent;

  std::ostringstream s;
  s << "sigma = " << format_permutation(sigma) << "  (n=" << sigma.size() << ", d=" << d
    << ")\n  r0 = " << a.r0 << ", eligible shifts: " << a.eligible.size();
  if (a.predicted_rank) {
    s << ", predicted rank " << *a.predicted_rank;
  } else {
    s << ", not covered";
  }
  s << "\n  oracle rank " << orank << ", usp " << to_string(a.usp)
    << (consistent ? "" : "  ** INCONSISTENT **") << '\n';
  out.summary = s.str();
  return out;
}

CommandResult usp_command(const Permutation& sigma, std::size_t d,
                          const OracleConfig& cfg, bool consult_oracle) {
  require_size(sigma, d);
  const ShiftAnalysis a = decide_usp(sigma, d);
  CommandResult out;
  out.payload = {{"permutation", to_json(sigma)},
                 {"n", sigma.size()},
                 {"d", d},
                 {"usp", std::string(to_string(a.usp))},
                 {"certificate", a.certificate},
                 {"analysis", to_json(a)}};
  std::string line = "usp: " + std::string(to_string(a.usp)) + " (" + a.certificate + ")";
  if (consult_oracle) {
    const bool holds = oracle_usp(sigma, sigma.size(), d, cfg);
    out.payload["oracle_usp"] = holds ? "holds" : "fails";
    out.payload["oracle_config"] = to_json(cfg);
    if (a.usp != UspVerdict::kUnknown) {
      out.verified = holds == (a.usp == UspVerdict::kHolds);
    }
    line += "; oracle (probabilistic): " + std::string(holds ? "holds" : "fails");
  }
  out.summary = line + '\n';
  return out;
}

CommandResult oracle_rank_command(const Permutation& sigma, std::size_t d,
                                  const OracleConfig& cfg) {
  require_size(sigma, d);
  CommandResult out;
  out.payload = oracle_block(sigma, d, cfg);
  out.payload["permutation"] = to_json(sigma);
  out.payload["n"] = sigma.size();
  out.payload["d"] = d;
  const std::size_t rank = out.payload["rank"];
  std::string line = "oracle rank [V, PV] = " + std::to_string(rank);
  if (const auto t = cyclic_exponent(sigma)) {
    const std::size_t formula = cyclic_rank_formula(*t, sigma.size(), d);
    out.payload["cyclic_shift"] = *t;
    out.payload["cyclic_formula_rank"] = formula;
    out.verified = formula == rank;
    line += "; cyclic shift by " + std::to_string(*t) + ", formula gives " +
            std::to_string(formula);
  }
  out.summary = line + '\n';
  return out;
}

CommandResult symdet_command(const Permutation& sigma, std::size_t d, bool with_terms) {
  const std::size_t n = sigma.size();
  const SymbolicDeterminant sym = symbolic_det_vpv(sigma, n, d);
  CommandResult out;
  out.payload = {{"permutation", to_json(sigma)},
                 {"n", n},
                 {"d", d},
                 {"zero", !sym.initial.has_value()},
                 {"term_count", sym.det.terms().size()},
                 {"initial_monomial", sym.initial ? json(to_string(sym.initial->monomial))
                                                  : json(nullptr)},
                 {"initial_coefficient", sym.initial ? coefficient_json(sym.initial->coefficient)
                                                     : json(nullptr)}};
  if (with_terms) out.payload["terms"] = to_json(sym.det);
  if (sym.initial) {
    out.summary = "det [U, PU]: " + std::to_string(sym.det.terms().size()) +
                  " terms, initial term " + sym.initial->coefficient.str() + " * " +
                  to_string(sym.initial->monomial) + '\n';
  } else {
    out.summary = "det [U, PU] is identically zero\n";
  }
  return out;
}

CommandResult conjecture_command(const HarnessConfig& cfg, bool include_timing) {
  const HarnessReport r = verify_conjecture(cfg);
  CommandResult out;
  out.payload = to_json(r, include_timing);
  out.verified = r.verified();

  std::ostringstream s;
  s << "conjecture check, n = " << r.n << ", d = " << r.d
    << (r.in_conjecture_scope ? "" : "  (exploratory, outside n = 2d)") << '\n';
  s << "  rank   count\n";
  for (const auto& [rank, count] : r.rank_histogram) {
    s << "  " << std::setw(4) << rank << "   " << count << '\n';
  }
  s << "  covered " << r.covered << ", not covered " << r.not_covered << " of " << r.total
    << '\n';
  s << "  counterexamples " << r.counterexamples.size() << ", inconsistencies "
    << r.inconsistencies.size() << '\n';
  s << "  per-permutation false-low-rank bound " << r.per_permutation_error_bound << '\n';
  s << "  " << std::fixed << std::setprecision(2) << r.wall_seconds << " s on " << r.workers
    << " worker(s)\n";
  out.summary = s.str();
  return out;
}

CommandResult demo_command(const Permutation& sigma, std::size_t d, std::uint64_t seed,
                           const PrimeField& field, CoefficientMode mode,
                           bool list_candidates) {
  require_size(sigma, d);
  const std::size_t n = sigma.size();
  const SensingInstance inst = generate_instance(field, n, d, sigma, seed, mode);
  const ConsistentSet set = enumerate_consistent(inst);
  const ShiftAnalysis a = decide_usp(sigma, d);
  const bool pairwise = check_pairwise_usp(inst, sigma);

  const auto scalars = [&](const std::vector<FieldScalar>& v) {
    json arr = json::array();
    for (FieldScalar s : v) arr.push_back(s.value);
    return arr;
  };

  CommandResult out;
  out.payload = {{"permutation", to_json(sigma)},
                 {"n", n},
                 {"d", d},
                 {"seed", seed},
                 {"prime", field.modulus()},
                 {"mode", mode == CoefficientMode::kGeneric ? "generic" : "witness"},
                 {"instance",
                  {{"toeplitz", to_json(inst.spec)},
                   {"coefficients", scalars(inst.coeffs)},
                   {"observation", scalars(inst.observation)}}},
                 {"candidate_count", set.candidates.size()},
                 {"distinct_signals", set.distinct_signals},
                 {"pairwise_usp", pairwise},
                 {"decide_usp", std::string(to_string(a.usp))}};
  if (list_candidates) {
    json cands = json::array();
    for (const auto& c : set.candidates) {
      cands.push_back({{"permutation", to_json(c.sigma)}, {"signal", scalars(c.signal)}});
    }
    out.payload["candidates"] = std::move(cands);
  }
  // The sampled instance must agree with the deterministic verdict when there is one.
  bool agrees = true;
  if (a.usp != UspVerdict::kUnknown) agrees = pairwise == (a.usp == UspVerdict::kHolds);
  if (mode == CoefficientMode::kWitness) {
    agrees = agrees && (set.distinct_signals > 1) == !pairwise;
  }
  out.payload["consistent"] = agrees;
  out.verified = agrees;

  std::ostringstream s;
  s << "demo: " << set.candidates.size() << " consistent permutation(s), "
    << set.distinct_signals << " distinct signal(s); pairwise usp "
    << (pairwise ? "holds" : "fails") << ", decide_usp " << to_string(a.usp) << '\n';
  out.summary = s.str();
  return out;
}

CommandResult fixtures_command(const std::string& which, const OracleConfig& cfg) {
  std::vector<std::string> names;
  if (which == "all") {
    names = fixture_names();
  } else {
    names.push_back(which);
  }
  CommandResult out;
  json results = json::array();
  std::ostringstream s;
  for (const auto& name : names) {
    const FixtureResult r = run_fixture(load_fixture(name), cfg);
    out.verified = out.verified && r.passed();
    s << (r.passed() ? "PASS " : "FAIL ") << name << '\n';
    for (const auto& c : r.checks) {
      if (c.pass) continue;
      s << "  " << (c.enforced ? "mismatch" : "note") << " " << c.field << " (" << c.origin
        << "): expected " << c.expected.dump() << ", got " << c.actual.dump() << '\n';
    }
    results.push_back(to_json(r));
  }
  out.payload = {{"fixtures", std::move(results)},
                 {"passed", out.verified},
                 {"oracle_config", to_json(cfg)}};
  out.summary = s.str();
  return out;
}

}  // namespace toepsense

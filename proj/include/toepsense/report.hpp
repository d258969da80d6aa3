#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "toepsense/harness.hpp"
#include "toepsense/oracle.hpp"
#include "toepsense/polynomial.hpp"
#include "toepsense/shift_analysis.hpp"
#include "toepsense/toeplitz.hpp"

namespace toepsense {

using json = nlohmann::json;

inline constexpr std::string_view kSchemaTag = "toepsense/1";

// {"n": int, "d": int, "diagonals": [...]} with diagonals from k = 1-d to
// k = n-1 as residues.
json to_json(const ToeplitzSpec& spec);
ToeplitzSpec toeplitz_from_json(const json& j, const PrimeField& field);

json to_json(const ShiftAnalysis& a);
json to_json(const ShiftWitness& w);
json to_json(const Permutation& sigma);  // one-based image list

// List of {"coeff": int, "exponents": {"k": e}} in descending lex order.
json to_json(const SparsePolynomial& p);
json coefficient_json(const Integer& c);

json to_json(const ClassificationRecord& r);
ClassificationRecord record_from_json(const json& j);

json to_json(const OracleConfig& cfg);

// Timing fields are omitted unless requested so that repeated runs with the
// same seed serialize identically.
json to_json(const HarnessReport& r, bool include_timing);

/// {"schema": "toepsense/1", "command": command, ...payload}
json envelope(std::string_view command, json payload);

}  // namespace toepsense

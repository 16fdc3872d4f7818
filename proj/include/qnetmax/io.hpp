#pragma once

#include "qnetmax/correlations.hpp"
#include "qnetmax/qstate.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace qnetmax::io {

using json = nlohmann::json;

/// Parses either an explicit matrix
///   {"label": str?, "re": [[4x4]], "im": [[4x4]]?}
/// or a named family
///   {"family": "werner"|"colored"|"bell", "v": x, "lambda": x, "which": "phi+"|"phi-"|"psi+"|"psi-", "label": str?}.
/// Unknown fields are rejected with ParseError; invalid matrices raise the
/// corresponding state validation error.
TwoQubitState parse_state(const json& j);

/// Reads and parses a state file; ParseError names the file on failure.
TwoQubitState load_state_file(const std::filesystem::path& path);

/// Parses {"a0": [x,y,z], ..., "c1": [x,y,z]}. Missing keys take the
/// Branciard defaults. Vectors are normalized; a norm off by more than 1e-6
/// appends a message to `warnings`.
BilocalSettings parse_bilocal_settings(const json& j, std::vector<std::string>* warnings = nullptr);

/// Parses {"branches": [{"a0":..., "a1":..., "b0":..., "b1":...}, ...]}.
StarSettings parse_star_settings(const json& j, std::vector<std::string>* warnings = nullptr);

json read_json_file(const std::filesystem::path& path);

/// Rounds to `digits` significant decimal digits, so the JSON writer emits
/// at most that many.
double round_significant(double x, int digits = 15);

json to_json(const Vector3& v);
json to_json(const BilocalSettings& s);
json to_json(const StarSettings& s);

}  // namespace qnetmax::io

// Copyright 2026 The qedr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON encodings for matrices, states, models and reports.
//
//   matrix : {"rows": n, "cols": m, "entries": [[re, im], ...]}   row-major
//   state  : {"dims": [...], "amplitudes": [[re, im], ...]}
//   model  : {"system_dims": [...], "probe_dim": n, "probe_state": <state>,
//             "unitary": <matrix>, "meter": <matrix>}
//   joint distribution : {"kind": "JPD"|"WJD", "u": [...], "v": [...],
//                         "weights": [[[re, im], ...], ...]}
//
// Report numbers are rounded to 12 significant digits (see round_report).

#pragma once

#include <string>

#include <json.hpp>

#include "qedr/edr.hpp"
#include "qedr/measures.hpp"
#include "qedr/model.hpp"
#include "qedr/scenarios.hpp"

namespace qedr {

using Json = nlohmann::json;

/// Report formatting: 12 significant digits, magnitudes below 1e-12 print as 0.
std::string format_number(double x);
/// The double that format_number(x) denotes.
double round_report(double x);

Json matrix_to_json(const ComplexMatrix& m);
/// Throws InputError describing the first structural problem.
ComplexMatrix matrix_from_json(const Json& j);

Json state_to_json(const QState& s);
/// Accepts the state object or a bare amplitude array (single factor).
/// Unnormalized amplitudes raise InvariantError.
QState state_from_json(const Json& j);

Json model_to_json(const MeasurementModel& m);
/// Parses and validates a model; InputError on malformed JSON structure,
/// InvariantError/DimensionError when the parsed model violates an invariant.
MeasurementModel model_from_json(const Json& j);
MeasurementModel load_model_file(const std::string& path);

Json distribution_to_json(const JointDistribution& d);
Json multi_distribution_to_json(const MultiDistribution& d);
Json inequality_to_json(const InequalityRecord& r);
Json edr_report_to_json(const EDRReport& r);
Json e91_report_to_json(const E91Report& r);
Json scenario_to_json(const ScenarioResult& r);

/// Parses a JSON document, converting parse failures into InputError.
Json parse_json(const std::string& text, const std::string& origin);

}  // namespace qedr

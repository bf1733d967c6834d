// Copyright 2026 The shallowcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON file formats.
//
//   circuit:     {"n_qubits": n, "layers": [[{"qubits": [...], "name": "H"} |
//                                            {"qubits": [...], "matrix": M}, ...], ...]}
//   description: {"n_qubits": n, "projections": [{"support": [...], "matrix": M}, ...]}
//   assertions:  same schema as a description
//
// A matrix M is row-major [[[re, im], ...], ...]; the first listed qubit is the
// most significant bit. Unknown fields are rejected.

#pragma once

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

#include "shallowcheck/assertion.hpp"
#include "shallowcheck/circuit.hpp"
#include "shallowcheck/description.hpp"
#include "shallowcheck/equivalence.hpp"

namespace shallowcheck::io {

using nlohmann::json;

/// Parses JSON text; syntax errors become SchemaError with line and column.
json parse_json(std::string_view text, std::string_view origin = "<input>");

json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j, Eigen::Index dim, std::string_view where);

json to_json(const Circuit& c);
Circuit circuit_from_json(const json& j);

json to_json(const Description& d);
Description description_from_json(const json& j);
AssertionTuple assertions_from_json(const json& j);

json to_json(const EquivalenceReport& r);
json to_json(const std::vector<AssertionVerdict>& verdicts);
json to_json(const RuntimeResult& r);
json state_to_json(const StateVector& v, int n_qubits);

std::string read_file(const std::filesystem::path& path);
/// Writes to a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

Circuit load_circuit(const std::filesystem::path& path);
AssertionTuple load_assertions(const std::filesystem::path& path);

}  // namespace shallowcheck::io

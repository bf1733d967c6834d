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

#include "shallowcheck/io.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <system_error>

#include "shallowcheck/errors.hpp"

namespace shallowcheck::io {
namespace {

std::string location_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  std::size_t line = 1;
  std::size_t line_start = 0;
  for (std::size_t i = 0; i < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      line_start = i + 1;
    }
  }
  std::size_t line_end = text.find('\n', line_start);
  if (line_end == std::string_view::npos) line_end = text.size();
  std::string snippet(text.substr(line_start, std::min<std::size_t>(line_end - line_start, 80)));
  return "line " + std::to_string(line) + ", column " + std::to_string(byte - line_start + 1) + ": " + snippet;
}

void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed, std::string_view where) {
  if (!obj.is_object()) throw SchemaError(std::string(where) + ": expected an object");
  for (const auto& item : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      throw SchemaError(std::string(where) + ": unknown field \"" + item.key() + "\"");
    }
  }
}

const json& require(const json& obj, const char* key, std::string_view where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(std::string(where) + ": missing field \"" + key + "\"");
  return *it;
}

int as_int(const json& j, std::string_view where) {
  if (!j.is_number_integer()) throw SchemaError(std::string(where) + ": expected an integer");
  return j.get<int>();
}

QubitList qubit_list(const json& j, std::string_view where) {
  if (!j.is_array() || j.empty()) throw SchemaError(std::string(where) + ": expected a non-empty integer array");
  QubitList out;
  out.reserve(j.size());
  for (const json& q : j) out.push_back(as_int(q, where));
  return out;
}

int parse_qubit_count(const json& obj, std::string_view where) {
  const int n = as_int(require(obj, "n_qubits", where), std::string(where) + ".n_qubits");
  if (n < 0) throw SchemaError(std::string(where) + ": n_qubits must be non-negative");
  return n;
}

LocalProjection projection_from_json(const json& j, int n_qubits, std::string_view where) {
  reject_unknown(j, {"support", "matrix"}, where);
  QubitList support = qubit_list(require(j, "support", where), std::string(where) + ".support");
  for (int q : support) {
    if (q < 0 || q >= n_qubits) throw SchemaError(std::string(where) + ": support qubit " + std::to_string(q) + " out of range");
  }
  if (!std::is_sorted(support.begin(), support.end()) ||
      std::adjacent_find(support.begin(), support.end()) != support.end()) {
    throw SchemaError(std::string(where) + ": support must be sorted and duplicate-free");
  }
  if (support.size() > 30) throw CapacityError(std::string(where) + ": support too large to materialise");
  const Eigen::Index dim = Eigen::Index{1} << support.size();
  ComplexMatrix m = matrix_from_json(require(j, "matrix", where), dim, std::string(where) + ".matrix");
  return LocalProjection(std::move(support), std::move(m));
}

Description projections_from_json(const json& j, std::string_view what) {
  reject_unknown(j, {"n_qubits", "projections"}, what);
  Description d;
  d.n_qubits = parse_qubit_count(j, what);
  const json& list = require(j, "projections", what);
  if (!list.is_array()) throw SchemaError(std::string(what) + ".projections: expected an array");
  for (std::size_t i = 0; i < list.size(); ++i) {
    d.projections.push_back(
        projection_from_json(list[i], d.n_qubits, std::string(what) + ".projections[" + std::to_string(i) + "]"));
  }
  return d;
}

json residual_json(const QubitList& support, const ResidualTriple& r) {
  return json{{"support", support}, {"l1", r.l1}, {"l2", r.l2}, {"linf", r.linf}};
}

}  // namespace

json parse_json(std::string_view text, std::string_view origin) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw SchemaError(std::string(origin) + ": malformed JSON at " + location_of(text, byte));
  }
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j, Eigen::Index dim, std::string_view where) {
  const std::string w(where);
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != dim) {
    throw SchemaError(w + ": expected " + std::to_string(dim) + " rows");
  }
  ComplexMatrix m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
      throw SchemaError(w + ": row " + std::to_string(r) + " must have " + std::to_string(dim) + " entries");
    }
    for (Eigen::Index c = 0; c < dim; ++c) {
      const json& e = row[static_cast<std::size_t>(c)];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw SchemaError(w + ": entry (" + std::to_string(r) + ", " + std::to_string(c) + ") must be [re, im]");
      }
      m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

json to_json(const Circuit& c) {
  json layers = json::array();
  for (const Layer& layer : c.layers) {
    json gates = json::array();
    for (const Gate& g : layer.gates) {
      json gate{{"qubits", g.qubits}};
      if (g.name && is_named_gate(*g.name)) {
        gate["name"] = *g.name;
      } else {
        if (g.name) gate["name"] = *g.name;
        gate["matrix"] = matrix_to_json(g.matrix);
      }
      gates.push_back(std::move(gate));
    }
    layers.push_back(std::move(gates));
  }
  return json{{"n_qubits", c.n_qubits}, {"layers", std::move(layers)}};
}

Circuit circuit_from_json(const json& j) {
  reject_unknown(j, {"n_qubits", "layers"}, "circuit");
  Circuit c;
  c.n_qubits = parse_qubit_count(j, "circuit");
  const json& layers = require(j, "layers", "circuit");
  if (!layers.is_array()) throw SchemaError("circuit.layers: expected an array");
  for (std::size_t l = 0; l < layers.size(); ++l) {
    const std::string lw = "layers[" + std::to_string(l) + "]";
    if (!layers[l].is_array()) throw SchemaError(lw + ": expected an array of gates");
    Layer layer;
    for (std::size_t g = 0; g < layers[l].size(); ++g) {
      const std::string w = lw + "[" + std::to_string(g) + "]";
      const json& gj = layers[l][g];
      reject_unknown(gj, {"qubits", "name", "matrix"}, w);
      Gate gate;
      gate.qubits = qubit_list(require(gj, "qubits", w), w + ".qubits");
      if (gate.qubits.size() > 16) throw SchemaError(w + ": gate arity too large");
      if (auto it = gj.find("name"); it != gj.end()) {
        if (!it->is_string()) throw SchemaError(w + ".name: expected a string");
        gate.name = it->get<std::string>();
      }
      if (auto it = gj.find("matrix"); it != gj.end()) {
        gate.matrix = matrix_from_json(*it, Eigen::Index{1} << gate.qubits.size(), w + ".matrix");
      } else if (gate.name && is_named_gate(*gate.name)) {
        try {
          gate.matrix = named_gate(*gate.name, gate.arity());
        } catch (const DomainError& e) {
          throw SchemaError(w + ": " + e.what());
        }
      } else if (gate.name) {
        throw SchemaError(w + ": unknown gate name \"" + *gate.name + "\"");
      } else {
        throw SchemaError(w + ": gate needs a name or a matrix");
      }
      layer.gates.push_back(std::move(gate));
    }
    c.layers.push_back(std::move(layer));
  }
  return c;
}

json to_json(const Description& d) {
  json list = json::array();
  for (const LocalProjection& p : d.projections) {
    list.push_back(json{{"support", p.support()}, {"matrix", matrix_to_json(p.matrix())}});
  }
  return json{{"n_qubits", d.n_qubits}, {"projections", std::move(list)}};
}

Description description_from_json(const json& j) { return projections_from_json(j, "description"); }

AssertionTuple assertions_from_json(const json& j) {
  Description d = projections_from_json(j, "assertions");
  return AssertionTuple{std::move(d.projections)};
}

json to_json(const EquivalenceReport& r) {
  json residuals = json::array();
  for (const ProjectionResidual& pr : r.residuals) residuals.push_back(residual_json(pr.support, pr.residual));
  return json{{"mode", to_string(r.mode)},
              {"verdict", to_string(r.verdict)},
              {"threshold", r.threshold},
              {"max_linf", r.max_linf},
              {"residuals", std::move(residuals)},
              {"max_support", r.max_support},
              {"seconds", r.seconds},
              {"near_threshold", r.near_threshold}};
}

json to_json(const std::vector<AssertionVerdict>& verdicts) {
  json list = json::array();
  bool all = true;
  for (const AssertionVerdict& v : verdicts) {
    json entry = residual_json(v.pulled_back_support, v.residual);
    entry["index"] = v.index;
    entry["holds"] = v.holds;
    list.push_back(std::move(entry));
    all = all && v.holds;
  }
  return json{{"result", all ? "pass" : "fail"}, {"verdicts", std::move(list)}};
}

json to_json(const RuntimeResult& r) {
  return json{{"result", r.passed ? "pass" : "abort"},
              {"abort_index", r.abort_index ? json(*r.abort_index) : json(nullptr)},
              {"outcome_log", r.outcome_log},
              {"seed", r.seed}};
}

json state_to_json(const StateVector& v, int n_qubits) {
  json amps = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) amps.push_back(json::array({v(i).real(), v(i).imag()}));
  return json{{"n_qubits", n_qubits}, {"amplitudes", std::move(amps)}};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw SchemaError("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw SchemaError("failed writing " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

Circuit load_circuit(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  return circuit_from_json(parse_json(text, path.string()));
}

AssertionTuple load_assertions(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  return assertions_from_json(parse_json(text, path.string()));
}

}  // namespace shallowcheck::io

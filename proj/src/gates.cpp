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

#include <array>
#include <numbers>

#include "shallowcheck/circuit.hpp"

namespace shallowcheck {
namespace {

constexpr std::array<std::string_view, 11> kNames = {"I", "X", "Y", "Z", "H", "S", "T", "CNOT", "CZ", "SWAP", "CS"};

ComplexMatrix single(std::string_view name) {
  const Complex i(0.0, 1.0);
  ComplexMatrix m(2, 2);
  if (name == "X") {
    m << 0, 1, 1, 0;
  } else if (name == "Y") {
    m << 0, -i, i, 0;
  } else if (name == "Z") {
    m << 1, 0, 0, -1;
  } else if (name == "H") {
    const double s = 1.0 / std::numbers::sqrt2;
    m << s, s, s, -s;
  } else if (name == "S") {
    m << 1, 0, 0, i;
  } else if (name == "T") {
    m << 1, 0, 0, std::polar(1.0, std::numbers::pi / 4);
  } else {
    return {};
  }
  return m;
}

}  // namespace

bool is_named_gate(std::string_view name) {
  for (auto n : kNames) {
    if (n == name) return true;
  }
  return false;
}

ComplexMatrix named_gate(std::string_view name, int arity) {
  if (name == "I") {
    if (arity < 1 || arity > kDefaultQubitCap) throw DomainError("gate I: invalid arity");
    return ComplexMatrix::Identity(Eigen::Index{1} << arity, Eigen::Index{1} << arity);
  }
  const bool two = name == "CNOT" || name == "CZ" || name == "SWAP" || name == "CS";
  if (!is_named_gate(name)) throw DomainError("unknown gate name '" + std::string(name) + "'");
  const int expected = two ? 2 : 1;
  if (arity != expected) {
    throw DomainError("gate " + std::string(name) + " acts on " + std::to_string(expected) + " qubit(s), got " +
                      std::to_string(arity));
  }
  if (!two) return single(name);
  ComplexMatrix m = ComplexMatrix::Identity(4, 4);
  if (name == "CNOT") {
    m.bottomRightCorner(2, 2) = single("X");
  } else if (name == "CZ") {
    m(3, 3) = -1.0;
  } else if (name == "CS") {
    m(3, 3) = Complex(0.0, 1.0);
  } else {
    m.setZero();
    m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
  }
  return m;
}

Gate make_gate(std::string_view name, QubitList qubits) {
  const int arity = static_cast<int>(qubits.size());
  return Gate{std::move(qubits), named_gate(name, arity), std::string(name)};
}

Gate make_gate(QubitList qubits, ComplexMatrix matrix, std::optional<std::string> name) {
  return Gate{std::move(qubits), std::move(matrix), std::move(name)};
}

ComplexMatrix controlled(const ComplexMatrix& u) {
  const Eigen::Index d = u.rows();
  ComplexMatrix m = ComplexMatrix::Identity(2 * d, 2 * d);
  m.bottomRightCorner(d, d) = u;
  return m;
}

ComplexMatrix doubly_controlled(const ComplexMatrix& u) { return controlled(controlled(u)); }

}  // namespace shallowcheck

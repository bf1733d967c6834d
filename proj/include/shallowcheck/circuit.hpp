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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shallowcheck/linalg.hpp"
#include "shallowcheck/rng.hpp"

namespace shallowcheck {

/// Largest gate arity accepted by validation.
inline constexpr int kDefaultMaxArity = 3;

/// A k-qubit unitary bound to an ordered qubit list. qubits[0] is the most
/// significant bit of the matrix index.
struct Gate {
  QubitList qubits;
  ComplexMatrix matrix;
  std::optional<std::string> name;

  int arity() const { return static_cast<int>(qubits.size()); }
  int min_qubit() const;
  bool touches(int qubit) const;
};

/// Gates applied simultaneously; supports must be pairwise disjoint.
struct Layer {
  std::vector<Gate> gates;
};

struct Circuit {
  int n_qubits = 0;
  std::vector<Layer> layers;

  int depth() const { return static_cast<int>(layers.size()); }
};

struct Violation {
  int layer = -1;
  int gate = -1;
  std::string rule;
  std::string message;
};

struct ValidationOptions {
  int max_arity = kDefaultMaxArity;
  double unitarity_tol = kDefaultTolerance;
};

/// Every broken structural invariant; empty iff the circuit is well formed.
std::vector<Violation> validate(const Circuit& c, const ValidationOptions& opts = {});

/// Layers reversed and every gate conjugate-transposed.
Circuit adjoint(const Circuit& c);

/// `first` followed by `second`; throws DomainError on differing qubit counts.
Circuit concat(const Circuit& first, const Circuit& second);

/// 2n-qubit circuit preparing the Choi state of `c`: a layer of W = CNOT (H x I)
/// on every pair (p, n+p), followed by the layers of `c` shifted onto qubits n..2n-1.
Circuit choi_extend(const Circuit& c);

/// Haar-distributed unitary on k qubits (Ginibre matrix + QR with the phases of
/// R's diagonal divided out).
ComplexMatrix haar_unitary(int k_qubits, Rng& rng);

enum class Geometry { Brickwork1D };

/// 1D brickwork circuit of Haar-random two-qubit gates. Layer 1, 3, ... pair
/// (0,1),(2,3),...; layer 2, 4, ... pair (1,2),(3,4),...
Circuit random_circuit(int n, int depth, std::uint64_t seed, Geometry geometry = Geometry::Brickwork1D);

/// Gate pairs of one brickwork layer; `parity` 0 starts at qubit 0, 1 at qubit 1.
std::vector<std::pair<int, int>> brickwork_pairs(int n, int parity);

// Built-in gates. Names: I, X, Y, Z, H, S, T, CNOT, CZ, SWAP, CS.

/// Matrix of a named gate; "I" adapts to `arity`. Throws DomainError for
/// unknown names or an arity the gate does not have.
ComplexMatrix named_gate(std::string_view name, int arity);
bool is_named_gate(std::string_view name);
Gate make_gate(std::string_view name, QubitList qubits);
Gate make_gate(QubitList qubits, ComplexMatrix matrix, std::optional<std::string> name = std::nullopt);

/// Two-qubit controlled-u with the control as the first (most significant) qubit.
ComplexMatrix controlled(const ComplexMatrix& u);
/// Three-qubit doubly controlled-u, controls first.
ComplexMatrix doubly_controlled(const ComplexMatrix& u);

}  // namespace shallowcheck

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

// Brute-force state-vector reference for small qubit counts.
//
// Everything here works on the full 2^n space and is deliberately written
// without the light-cone machinery, so it can serve as ground truth for the
// description, equivalence and assertion engines.

#pragma once

#include <span>
#include <vector>

#include "shallowcheck/circuit.hpp"
#include "shallowcheck/description.hpp"
#include "shallowcheck/linalg.hpp"

namespace shallowcheck::oracle {

/// Hermitian, PSD, unit-trace matrix; see is_density_matrix.
using DensityMatrix = ComplexMatrix;

/// In place: applies one gate of an n-qubit circuit to `state`.
void apply_gate(StateVector& state, const Gate& gate, int n_qubits);

/// Exact layer-by-layer evolution of `input`.
StateVector simulate(const Circuit& c, const StateVector& input, int oracle_cap = kDefaultOracleCap);
/// simulate(c, |0...0>).
StateVector simulate(const Circuit& c, int oracle_cap = kDefaultOracleCap);

/// Full 2^n x 2^n unitary of the circuit, column by column.
ComplexMatrix circuit_unitary(const Circuit& c, int oracle_cap = kDefaultOracleCap);

/// |<u|v>| >= 1 - tol.
bool equal_up_to_phase(const StateVector& u, const StateVector& v, double tol = 1e-9);

/// Unitaries equal up to a global phase, compared entrywise after aligning the
/// phase on the largest entry.
bool unitaries_equal_up_to_phase(const ComplexMatrix& u, const ComplexMatrix& v, double tol = 1e-9);

DensityMatrix density_matrix(const StateVector& psi);
bool is_density_matrix(const DensityMatrix& rho, double tol = 1e-10);

/// Reduced density matrix on `keep` (any order; result ordered by ascending
/// qubit index) of an n-qubit density matrix.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep, int total_qubits);

/// Dimension of the intersection of pairwise commuting projectors, as the
/// rounded trace of their product. Throws DomainError for non-commuting input.
int subspace_dim(std::span<const ComplexMatrix> projections, double commute_tol = 1e-8);

/// A local projection embedded into the full n-qubit space.
ComplexMatrix embed_full(const LocalProjection& p, int n_qubits);

}  // namespace shallowcheck::oracle

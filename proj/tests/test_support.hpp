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

#include <cmath>
#include <vector>

#include "shallowcheck/circuit.hpp"
#include "shallowcheck/description.hpp"
#include "shallowcheck/oracle.hpp"

namespace shallowcheck::testing {

inline StateVector random_state(int n, Rng& rng) {
  StateVector v(Eigen::Index{1} << n);
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(rng.normal(), rng.normal());
  return v / v.norm();
}

inline Circuit single_layer(int n, std::vector<Gate> gates) {
  Circuit c;
  c.n_qubits = n;
  c.layers.push_back(Layer{std::move(gates)});
  return c;
}

inline Circuit identity_circuit(int n) {
  Circuit c;
  c.n_qubits = n;
  return c;
}

/// Random rank-r projector on k qubits.
inline ComplexMatrix random_projector(int k, int rank, Rng& rng) {
  const ComplexMatrix u = haar_unitary(k, rng);
  const auto cols = u.leftCols(rank);
  return cols * cols.adjoint();
}

/// Product of all embedded description entries applied to `v`, normalized.
inline StateVector project_onto_description(const Description& d, StateVector v) {
  for (const LocalProjection& p : d.projections) apply_projection(v, p, d.n_qubits);
  return v / v.norm();
}

inline double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace shallowcheck::testing

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

#include "shallowcheck/oracle.hpp"

#include <algorithm>

namespace shallowcheck::oracle {
namespace {

void check_cap(int n, int cap, const char* what) {
  if (n > cap) {
    throw CapacityError(std::string(what) + ": " + std::to_string(n) + " qubits exceeds the oracle cap of " +
                        std::to_string(cap));
  }
}

// Index of the full state given the gate-local index `local` and a base index
// whose gate bits are zero.
std::size_t compose_index(std::size_t base, std::size_t local, const QubitList& qubits, int n) {
  const int k = static_cast<int>(qubits.size());
  for (int j = 0; j < k; ++j) {
    if ((local >> (k - 1 - j)) & 1U) base |= std::size_t{1} << (n - 1 - qubits[j]);
  }
  return base;
}

}  // namespace

void apply_gate(StateVector& state, const Gate& gate, int n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (static_cast<std::size_t>(state.size()) != dim) throw DomainError("apply_gate: state dimension mismatch");
  std::size_t gate_mask = 0;
  for (int q : gate.qubits) {
    if (q < 0 || q >= n_qubits) throw DomainError("apply_gate: qubit out of range");
    gate_mask |= std::size_t{1} << (n_qubits - 1 - q);
  }
  const std::size_t k = std::size_t{1} << gate.qubits.size();
  std::vector<std::size_t> idx(k);
  std::vector<Complex> in(k);
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & gate_mask) continue;
    for (std::size_t l = 0; l < k; ++l) {
      idx[l] = compose_index(base, l, gate.qubits, n_qubits);
      in[l] = state(static_cast<Eigen::Index>(idx[l]));
    }
    for (std::size_t r = 0; r < k; ++r) {
      Complex acc = 0.0;
      for (std::size_t l = 0; l < k; ++l) acc += gate.matrix(r, l) * in[l];
      state(static_cast<Eigen::Index>(idx[r])) = acc;
    }
  }
}

StateVector simulate(const Circuit& c, const StateVector& input, int oracle_cap) {
  check_cap(c.n_qubits, oracle_cap, "simulate");
  if (input.size() != (Eigen::Index{1} << c.n_qubits)) throw DomainError("simulate: input dimension mismatch");
  StateVector state = input;
  for (const Layer& layer : c.layers) {
    for (const Gate& g : layer.gates) apply_gate(state, g, c.n_qubits);
  }
  return state;
}

StateVector simulate(const Circuit& c, int oracle_cap) {
  check_cap(c.n_qubits, oracle_cap, "simulate");
  return simulate(c, basis_state(c.n_qubits), oracle_cap);
}

ComplexMatrix circuit_unitary(const Circuit& c, int oracle_cap) {
  check_cap(c.n_qubits, oracle_cap, "circuit_unitary");
  const Eigen::Index dim = Eigen::Index{1} << c.n_qubits;
  ComplexMatrix u(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) u.col(j) = simulate(c, basis_state(c.n_qubits, j), oracle_cap);
  return u;
}

bool equal_up_to_phase(const StateVector& u, const StateVector& v, double tol) {
  if (u.size() != v.size()) throw DomainError("equal_up_to_phase: dimension mismatch");
  return std::abs(u.dot(v)) >= 1.0 - tol;
}

bool unitaries_equal_up_to_phase(const ComplexMatrix& u, const ComplexMatrix& v, double tol) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) return false;
  Eigen::Index r = 0;
  Eigen::Index c = 0;
  u.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(v(r, c)) == 0.0) return false;
  const Complex phase = u(r, c) / v(r, c);
  if (std::abs(std::abs(phase) - 1.0) > tol) return false;
  return (u - phase * v).cwiseAbs().maxCoeff() <= tol;
}

DensityMatrix density_matrix(const StateVector& psi) { return psi * psi.adjoint(); }

bool is_density_matrix(const DensityMatrix& rho, double tol) {
  if (rho.rows() != rho.cols()) return false;
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  if (std::abs(rho.trace() - Complex(1.0)) > tol) return false;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep, int total_qubits) {
  check_cap(total_qubits, kDefaultOracleCap, "partial_trace");
  if (rho.rows() != (Eigen::Index{1} << total_qubits) || rho.cols() != rho.rows()) {
    throw DomainError("partial_trace: matrix dimension does not match qubit count");
  }
  QubitList kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  QubitList traced;
  for (int q = 0; q < total_qubits; ++q) {
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);
  }
  if (kept.size() + traced.size() != static_cast<std::size_t>(total_qubits)) {
    throw DomainError("partial_trace: kept qubits out of range or repeated");
  }
  const std::size_t kd = std::size_t{1} << kept.size();
  const std::size_t td = std::size_t{1} << traced.size();
  DensityMatrix out = DensityMatrix::Zero(static_cast<Eigen::Index>(kd), static_cast<Eigen::Index>(kd));
  for (std::size_t a = 0; a < kd; ++a) {
    for (std::size_t b = 0; b < kd; ++b) {
      Complex acc = 0.0;
      for (std::size_t x = 0; x < td; ++x) {
        const std::size_t ia = compose_index(compose_index(0, a, kept, total_qubits), x, traced, total_qubits);
        const std::size_t ib = compose_index(compose_index(0, b, kept, total_qubits), x, traced, total_qubits);
        acc += rho(static_cast<Eigen::Index>(ia), static_cast<Eigen::Index>(ib));
      }
      out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = acc;
    }
  }
  return out;
}

int subspace_dim(std::span<const ComplexMatrix> projections, double commute_tol) {
  if (projections.empty()) throw DomainError("subspace_dim: empty projector list");
  const Eigen::Index dim = projections.front().rows();
  for (const auto& p : projections) {
    if (p.rows() != dim || p.cols() != dim) throw DomainError("subspace_dim: projector dimensions differ");
  }
  check_cap(qubit_count(dim), kDefaultOracleCap, "subspace_dim");
  for (std::size_t i = 0; i < projections.size(); ++i) {
    for (std::size_t j = i + 1; j < projections.size(); ++j) {
      if (commutator_norm(projections[i], projections[j]) > commute_tol) {
        throw DomainError("subspace_dim: projectors " + std::to_string(i) + " and " + std::to_string(j) +
                          " do not commute");
      }
    }
  }
  ComplexMatrix prod = projections.front();
  for (std::size_t i = 1; i < projections.size(); ++i) prod = (prod * projections[i]).eval();
  return static_cast<int>(std::llround(prod.trace().real()));
}

ComplexMatrix embed_full(const LocalProjection& p, int n_qubits) {
  check_cap(n_qubits, kDefaultOracleCap, "embed_full");
  QubitList all(static_cast<std::size_t>(n_qubits));
  for (int q = 0; q < n_qubits; ++q) all[static_cast<std::size_t>(q)] = q;
  return embed(p.matrix(), p.support(), all);
}

}  // namespace shallowcheck::oracle

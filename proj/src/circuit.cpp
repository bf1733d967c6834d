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

#include "shallowcheck/circuit.hpp"

#include <algorithm>
#include <set>

namespace shallowcheck {

int Gate::min_qubit() const { return *std::min_element(qubits.begin(), qubits.end()); }

bool Gate::touches(int qubit) const { return std::find(qubits.begin(), qubits.end(), qubit) != qubits.end(); }

std::vector<Violation> validate(const Circuit& c, const ValidationOptions& opts) {
  std::vector<Violation> out;
  if (c.n_qubits < 0) out.push_back({-1, -1, "qubit-count", "n_qubits is negative"});
  for (int l = 0; l < c.depth(); ++l) {
    std::set<int> used;
    const auto& gates = c.layers[l].gates;
    for (int g = 0; g < static_cast<int>(gates.size()); ++g) {
      const Gate& gate = gates[g];
      auto report = [&](std::string rule, std::string msg) {
        out.push_back({l, g, std::move(rule), "layer " + std::to_string(l) + ", gate " + std::to_string(g) + ": " +
                                                  std::move(msg)});
      };
      if (gate.qubits.empty()) {
        report("arity", "gate acts on no qubits");
        continue;
      }
      if (gate.arity() > opts.max_arity) {
        report("arity", "gate arity " + std::to_string(gate.arity()) + " exceeds " + std::to_string(opts.max_arity));
      }
      std::set<int> own;
      for (int q : gate.qubits) {
        if (q < 0 || q >= c.n_qubits) {
          report("qubit-range", "qubit " + std::to_string(q) + " outside [0, " + std::to_string(c.n_qubits) + ")");
        }
        if (!own.insert(q).second) report("distinct-qubits", "qubit " + std::to_string(q) + " listed twice");
      }
      for (int q : own) {
        if (!used.insert(q).second) {
          report("disjoint-supports", "qubit " + std::to_string(q) + " already used in this layer");
        }
      }
      const Eigen::Index dim = gate.arity() < 31 ? (Eigen::Index{1} << gate.arity()) : -1;
      if (gate.matrix.rows() != dim || gate.matrix.cols() != dim) {
        report("matrix-shape", "matrix is " + std::to_string(gate.matrix.rows()) + "x" +
                                   std::to_string(gate.matrix.cols()) + ", expected " + std::to_string(dim) +
                                   "x" + std::to_string(dim));
      } else if (!gate.matrix.allFinite()) {
        report("finite", "matrix has non-finite entries");
      } else if (!is_unitary(gate.matrix, opts.unitarity_tol)) {
        report("unitary", "matrix is not unitary");
      }
    }
  }
  return out;
}

Circuit adjoint(const Circuit& c) {
  Circuit out;
  out.n_qubits = c.n_qubits;
  out.layers.reserve(c.layers.size());
  for (auto it = c.layers.rbegin(); it != c.layers.rend(); ++it) {
    Layer layer;
    layer.gates.reserve(it->gates.size());
    for (const Gate& g : it->gates) layer.gates.push_back(Gate{g.qubits, dagger(g.matrix), g.name});
    out.layers.push_back(std::move(layer));
  }
  return out;
}

Circuit concat(const Circuit& first, const Circuit& second) {
  if (first.n_qubits != second.n_qubits) {
    throw DomainError("concat: qubit counts differ (" + std::to_string(first.n_qubits) + " vs " +
                      std::to_string(second.n_qubits) + ")");
  }
  Circuit out = first;
  out.layers.insert(out.layers.end(), second.layers.begin(), second.layers.end());
  return out;
}

Circuit choi_extend(const Circuit& c) {
  const int n = c.n_qubits;
  Circuit out;
  out.n_qubits = 2 * n;
  ComplexMatrix w = named_gate("CNOT", 2) * kron(named_gate("H", 1), named_gate("I", 1));
  Layer bell;
  for (int p = 0; p < n; ++p) bell.gates.push_back(Gate{{p, n + p}, w, std::string("W")});
  out.layers.push_back(std::move(bell));
  for (const Layer& layer : c.layers) {
    Layer shifted;
    for (const Gate& g : layer.gates) {
      Gate s = g;
      for (int& q : s.qubits) q += n;
      shifted.gates.push_back(std::move(s));
    }
    out.layers.push_back(std::move(shifted));
  }
  return out;
}

ComplexMatrix haar_unitary(int k_qubits, Rng& rng) {
  if (k_qubits < 1) throw DomainError("haar_unitary: need at least one qubit");
  if (k_qubits > kDefaultQubitCap) throw CapacityError("haar_unitary: qubit count exceeds cap");
  const Eigen::Index dim = Eigen::Index{1} << k_qubits;
  ComplexMatrix z(dim, dim);
  const double scale = 1.0 / std::sqrt(2.0);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      const double re = rng.normal();
      const double im = rng.normal();
      z(i, j) = Complex(re * scale, im * scale);
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    const Complex phase = mag > 0.0 ? d / mag : Complex(1.0);
    q.col(j) *= phase;
  }
  return q;
}

std::vector<std::pair<int, int>> brickwork_pairs(int n, int parity) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = parity; a + 1 < n; a += 2) pairs.emplace_back(a, a + 1);
  return pairs;
}

Circuit random_circuit(int n, int depth, std::uint64_t seed, Geometry geometry) {
  if (n < 2) throw DomainError("random_circuit: need at least two qubits");
  if (depth < 0) throw DomainError("random_circuit: negative depth");
  (void)geometry;
  Rng rng(seed);
  Circuit c;
  c.n_qubits = n;
  for (int k = 0; k < depth; ++k) {
    Layer layer;
    for (auto [a, b] : brickwork_pairs(n, k % 2)) layer.gates.push_back(Gate{{a, b}, haar_unitary(2, rng), std::nullopt});
    c.layers.push_back(std::move(layer));
  }
  return c;
}

}  // namespace shallowcheck

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
#include <string>
#include <vector>

#include "shallowcheck/circuit.hpp"
#include "shallowcheck/description.hpp"

namespace shallowcheck {

inline constexpr double kDefaultEquivalenceThreshold = 1e-7;

enum class EquivalenceMode { Weak, Strong };
enum class Verdict { Equivalent, Inequivalent };

std::string to_string(EquivalenceMode mode);
std::string to_string(Verdict verdict);

struct ProjectionResidual {
  QubitList support;
  ResidualTriple residual;
};

struct EquivalenceReport {
  EquivalenceMode mode = EquivalenceMode::Weak;
  Verdict verdict = Verdict::Inequivalent;
  std::vector<ProjectionResidual> residuals;
  double max_linf = 0.0;
  double threshold = kDefaultEquivalenceThreshold;
  /// Largest |s_t| in the composite circuit's description.
  int max_support = 0;
  double seconds = 0.0;
  /// max_linf lies within a factor of ten of the threshold.
  bool near_threshold = false;

  bool equivalent() const { return verdict == Verdict::Equivalent; }
};

/// Equal outputs on |0...0> up to a global phase: describes c1^dagger c0 and
/// tests |0...0> against every projection.
EquivalenceReport check_weak(const Circuit& c0, const Circuit& c1, double threshold = kDefaultEquivalenceThreshold,
                             const DescriptionOptions& opts = {});

/// Equal unitaries up to a global phase: check_weak on the Choi extensions.
EquivalenceReport check_strong(const Circuit& c0, const Circuit& c1,
                               double threshold = kDefaultEquivalenceThreshold, const DescriptionOptions& opts = {});

// Micro-benchmark circuits built from doubly controlled gates.

/// Deutsch CC-U as one 3-qubit gate on (c1, c2, target).
Circuit deutsch_direct(const ComplexMatrix& w);
/// Two-qubit decomposition with W^2 = U; its last gate pairs qubits 0 and 2.
Circuit deutsch_decomposed(const ComplexMatrix& w);
/// Nearest-neighbour variant: the long-range gate is routed through swaps, the
/// second CNOT merged with the first swap (depth 6).
Circuit deutsch_swap_1d(const ComplexMatrix& w);

/// CC-diag(e^{-i theta}, e^{i theta}) as one 3-qubit gate, target in the middle.
Circuit diagonal_direct(double theta);
/// Depth-4 nearest-neighbour CC-diag(e^{-i theta}, e^{i theta}) built from V
/// (V|00> = |01>, V|01> = |00>, V|1x> = |1x>) and controlled-W with W^2 = U.
/// The two controlled-W gates use angles theta_first / theta_second.
Circuit diagonal_depth4(double theta_first, double theta_second);

/// Places `micro`, shifted by `offset`, into an n-qubit 1D brickwork circuit
/// whose remaining gates are two-qubit identities. Layer k of the host uses
/// brickwork parity (first_parity + k) % 2; host pairs overlapping a micro gate
/// of that layer are dropped.
Circuit embed_in_brickwork(const Circuit& micro, int n_qubits, int offset, int first_parity);

struct MicroFixture {
  std::string name;
  Circuit c0;
  Circuit c1;
  Verdict expected_weak = Verdict::Equivalent;
  Verdict expected_strong = Verdict::Equivalent;
};

struct MicroFixtureOptions {
  std::uint64_t seed = 2024;
  /// Host width for the embedded variants; 0 keeps only the 3-qubit forms.
  int embed_qubits = 20;
  /// Position of the first micro qubit inside the host.
  int embed_offset = 9;
  double perturbation = 0.1;
};

/// The doubly controlled gate fixtures, each with a fresh Haar W or random
/// theta, in 3-qubit form and embedded into the brickwork host.
std::vector<MicroFixture> micro_fixtures(const MicroFixtureOptions& opts = {});

}  // namespace shallowcheck

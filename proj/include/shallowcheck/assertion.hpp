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

// Local-projection assertions on circuit outputs.
//
// Static checking pulls each assertion Q back through the inverse circuit to a
// projection Q' on the input and tests |0...0> against Q'. Runtime checking
// simulates the two-outcome measurements {Q, I - Q} on a state vector.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "shallowcheck/circuit.hpp"
#include "shallowcheck/description.hpp"

namespace shallowcheck {

inline constexpr double kDefaultAssertionThreshold = 1e-7;
/// Commutator tolerance for admitting a tuple to runtime checking.
inline constexpr double kCommutationTolerance = 1e-8;

/// Tuple of local projections; supports may repeat or nest.
struct AssertionTuple {
  std::vector<LocalProjection> projections;
};

struct AssertionVerdict {
  int index = 0;
  /// Support of the pulled-back projection on the circuit input.
  QubitList pulled_back_support;
  ResidualTriple residual;
  bool holds = false;
};

/// Pulls every assertion back through `c` and checks it against |0...0>.
/// Entries are evaluated independently; the result always has one verdict per
/// assertion.
std::vector<AssertionVerdict> verify_static(const Circuit& c, const AssertionTuple& a,
                                            double threshold = kDefaultAssertionThreshold,
                                            const DescriptionOptions& opts = {});

/// First pair (i, j) whose embedded projections fail to commute, if any.
std::optional<std::pair<int, int>> find_non_commuting_pair(const AssertionTuple& a,
                                                           double tol = kCommutationTolerance);

struct RuntimeResult {
  bool passed = true;
  std::optional<int> abort_index;
  /// 0 for outcome m0 (inside the projection), 1 for m1.
  std::vector<int> outcome_log;
  StateVector post_state;
  std::uint64_t seed = 0;
};

enum class CommutationGuard { Enforce, Bypass };

/// Measures {P_t, I - P_t} for t = 0, 1, ... in order, collapsing the state;
/// stops with abort at the first m1 outcome. Non-commuting tuples are rejected
/// with DomainError unless the guard is bypassed.
RuntimeResult runtime_assert(const StateVector& state, int n_qubits, const AssertionTuple& a, Rng& rng,
                             CommutationGuard guard = CommutationGuard::Enforce);

/// Probability that every measurement yields m0 when applied in `order`.
double joint_pass_probability(const StateVector& state, int n_qubits, const AssertionTuple& a,
                              std::span<const int> order);

/// Max |p(order) - p(identity order)| of the all-m0 probability over `trials`
/// random orders.
double order_independence_check(const StateVector& state, int n_qubits, const AssertionTuple& a, int trials,
                                Rng& rng, CommutationGuard guard = CommutationGuard::Enforce);

/// State-vector run of `c` on |0...0> where, after each gate and with
/// probability `p`, a uniformly random non-identity Pauli hits the gate's qubits.
StateVector simulate_with_depolarizing(const Circuit& c, double p, Rng& rng, int oracle_cap = kDefaultOracleCap);

}  // namespace shallowcheck

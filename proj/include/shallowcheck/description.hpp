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

// Local-projection descriptions of shallow-circuit output states.
//
// Starting from |0><0| on every qubit t, each layer widens the support s_t by
// the qubits of every gate that overlaps it and conjugates the projection by
// the tensor product of those gates. The n resulting projections pairwise
// commute and their embedded intersection is exactly the span of the output
// state C|0...0>.

#pragma once

#include <functional>
#include <span>
#include <vector>

#include "shallowcheck/circuit.hpp"
#include "shallowcheck/linalg.hpp"

namespace shallowcheck {

struct ProjectionAccess;

/// Largest active factor (in qubits) the engine will allocate densely: a
/// 2^13 x 2^13 complex matrix is 1 GiB.
inline constexpr int kDefaultDenseCap = 13;
/// Largest qubit count handled by brute-force state-vector routines.
inline constexpr int kDefaultOracleCap = 14;
/// Entry tolerance when recognising an exact identity tensor factor.
inline constexpr double kFactorTolerance = 1e-13;

/// A projection acting on a sorted qubit support.
///
/// Storage is factored: a dense matrix on the "active" subset of the support
/// and the identity on the remaining support qubits. matrix() materialises the
/// full 2^|support| operator.
class LocalProjection {
 public:
  LocalProjection() = default;
  /// Dense projection over `support` (sorted, duplicate-free).
  LocalProjection(QubitList support, ComplexMatrix matrix);
  static LocalProjection factored(QubitList support, QubitList active, ComplexMatrix factor);

  const QubitList& support() const { return support_; }
  const QubitList& active_support() const { return active_; }
  const ComplexMatrix& factor() const { return factor_; }
  int support_size() const { return static_cast<int>(support_.size()); }

  ComplexMatrix matrix() const;

  /// Moves every active qubit on which the factor is the identity (to `tol`
  /// per entry) into the implicit identity part.
  void factor_out_identities(double tol = kFactorTolerance);

  /// Residual of P|0...0> - |0...0> over the full support dimension.
  ResidualTriple zero_state_residual() const;

 private:
  friend struct ProjectionAccess;
  QubitList support_;
  QubitList active_;
  ComplexMatrix factor_;
};

struct Description {
  int n_qubits = 0;
  /// Entry t originates from qubit t.
  std::vector<LocalProjection> projections;

  int max_support() const;
};

struct DescriptionOptions {
  int support_cap = kDefaultQubitCap;
  int dense_cap = kDefaultDenseCap;
  /// Replace P by (P + P^dagger)/2 after every layer.
  bool resymmetrize = true;
  /// Keep identity tensor factors implicit.
  bool factor_identities = true;
};

/// Propagates one projection forward through all layers of `c`, widening its
/// support by every overlapping gate. `origin` and `context` only label errors.
LocalProjection evolve_projection(LocalProjection p, const Circuit& c, const DescriptionOptions& opts = {},
                                  int origin = -1, const char* context = "projection");

/// Streams the description entry by entry; each entry is independent, so only
/// one projection is alive at a time.
void for_each_projection(const Circuit& c, const DescriptionOptions& opts,
                         const std::function<void(int, LocalProjection&&)>& sink);

Description compute_description(const Circuit& c, const DescriptionOptions& opts = {});

/// membership residual of |0^{|s_t|}> for every entry.
std::vector<ResidualTriple> initial_state_residuals(const Description& d);

/// Max entry of [P_t, P_u] over all pairs with overlapping supports, both
/// embedded into s_t u s_u. Throws CapacityError when a union exceeds the cap.
double commutation_check(std::span<const LocalProjection> projections, int support_cap = kDefaultQubitCap);
double commutation_check(const Description& d, int support_cap = kDefaultQubitCap);

/// In place: state <- (P embedded into n qubits) * state.
void apply_projection(StateVector& state, const LocalProjection& p, int n_qubits);

/// Rank of the product of all embedded projections on the full 2^n space.
int intersection_rank_small(std::span<const LocalProjection> projections, int n_qubits,
                            int oracle_cap = kDefaultOracleCap);
int intersection_rank_small(const Description& d, int oracle_cap = kDefaultOracleCap);

}  // namespace shallowcheck

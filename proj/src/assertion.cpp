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

#include "shallowcheck/assertion.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "shallowcheck/oracle.hpp"

namespace shallowcheck {
namespace {

void require_projections(const AssertionTuple& a) {
  for (std::size_t i = 0; i < a.projections.size(); ++i) {
    if (!is_projection(a.projections[i].factor(), kDefaultTolerance)) {
      throw DomainError("assertion " + std::to_string(i) + " is not a projection");
    }
  }
}

int state_qubits(const StateVector& state, int n_qubits) {
  if (state.size() != (Eigen::Index{1} << n_qubits)) throw DomainError("state dimension does not match qubit count");
  return n_qubits;
}

}  // namespace

std::vector<AssertionVerdict> verify_static(const Circuit& c, const AssertionTuple& a, double threshold,
                                            const DescriptionOptions& opts) {
  require_projections(a);
  const Circuit inverse = adjoint(c);
  std::vector<AssertionVerdict> out;
  out.reserve(a.projections.size());
  for (std::size_t i = 0; i < a.projections.size(); ++i) {
    const int index = static_cast<int>(i);
    LocalProjection pulled = evolve_projection(a.projections[i], inverse, opts, index, "assertion");
    AssertionVerdict v;
    v.index = index;
    v.pulled_back_support = pulled.support();
    v.residual = pulled.zero_state_residual();
    v.holds = v.residual.linf <= threshold;
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::pair<int, int>> find_non_commuting_pair(const AssertionTuple& a, double tol) {
  for (std::size_t i = 0; i < a.projections.size(); ++i) {
    for (std::size_t j = i + 1; j < a.projections.size(); ++j) {
      const std::array<LocalProjection, 2> pair{a.projections[i], a.projections[j]};
      if (commutation_check(pair) > tol) return std::make_pair(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return std::nullopt;
}

RuntimeResult runtime_assert(const StateVector& state, int n_qubits, const AssertionTuple& a, Rng& rng,
                             CommutationGuard guard) {
  const int n = state_qubits(state, n_qubits);
  require_projections(a);
  if (guard == CommutationGuard::Enforce) {
    if (auto bad = find_non_commuting_pair(a)) {
      throw DomainError("assertions " + std::to_string(bad->first) + " and " + std::to_string(bad->second) +
                        " do not commute");
    }
  }
  RuntimeResult result;
  result.seed = rng.seed();
  StateVector psi = state;
  for (std::size_t t = 0; t < a.projections.size(); ++t) {
    StateVector inside = psi;
    apply_projection(inside, a.projections[t], n);
    const double p0 = std::clamp(inside.squaredNorm(), 0.0, 1.0);
    if (rng.uniform() < p0) {
      result.outcome_log.push_back(0);
      psi = inside / std::sqrt(p0);
    } else {
      result.outcome_log.push_back(1);
      StateVector outside = psi - inside;
      const double norm = outside.norm();
      psi = norm > 0.0 ? StateVector(outside / norm) : outside;
      result.passed = false;
      result.abort_index = static_cast<int>(t);
      break;
    }
  }
  result.post_state = std::move(psi);
  return result;
}

double joint_pass_probability(const StateVector& state, int n_qubits, const AssertionTuple& a,
                              std::span<const int> order) {
  const int n = state_qubits(state, n_qubits);
  StateVector psi = state;
  for (int t : order) apply_projection(psi, a.projections.at(static_cast<std::size_t>(t)), n);
  return psi.squaredNorm();
}

double order_independence_check(const StateVector& state, int n_qubits, const AssertionTuple& a, int trials,
                                Rng& rng, CommutationGuard guard) {
  if (guard == CommutationGuard::Enforce) {
    if (auto bad = find_non_commuting_pair(a)) {
      throw DomainError("assertions " + std::to_string(bad->first) + " and " + std::to_string(bad->second) +
                        " do not commute");
    }
  }
  std::vector<int> order(a.projections.size());
  std::iota(order.begin(), order.end(), 0);
  const double reference = joint_pass_probability(state, n_qubits, a, order);
  double worst = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    worst = std::max(worst, std::abs(joint_pass_probability(state, n_qubits, a, order) - reference));
  }
  return worst;
}

StateVector simulate_with_depolarizing(const Circuit& c, double p, Rng& rng, int oracle_cap) {
  if (p < 0.0 || p > 1.0) throw DomainError("depolarizing probability must lie in [0, 1]");
  StateVector state = oracle::simulate(Circuit{c.n_qubits, {}}, oracle_cap);
  const std::array<const char*, 3> paulis = {"X", "Y", "Z"};
  for (const Layer& layer : c.layers) {
    for (const Gate& g : layer.gates) {
      oracle::apply_gate(state, g, c.n_qubits);
      if (p == 0.0 || rng.uniform() >= p) continue;
      const std::uint64_t choices = (std::uint64_t{1} << (2 * g.qubits.size())) - 1;
      std::uint64_t code = 1 + rng.below(choices);
      for (int q : g.qubits) {
        const auto digit = code & 3U;
        code >>= 2;
        if (digit != 0) oracle::apply_gate(state, make_gate(paulis[digit - 1], {q}), c.n_qubits);
      }
    }
  }
  return state;
}

}  // namespace shallowcheck

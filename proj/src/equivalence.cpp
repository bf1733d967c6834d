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

#include "shallowcheck/equivalence.hpp"

#include <chrono>

namespace shallowcheck {

std::string to_string(EquivalenceMode mode) { return mode == EquivalenceMode::Weak ? "weak" : "strong"; }

std::string to_string(Verdict verdict) {
  return verdict == Verdict::Equivalent ? "equivalent" : "inequivalent";
}

namespace {

void require_compatible(const Circuit& c0, const Circuit& c1) {
  if (c0.n_qubits != c1.n_qubits) {
    throw DomainError("circuits act on different qubit counts (" + std::to_string(c0.n_qubits) + " vs " +
                      std::to_string(c1.n_qubits) + ")");
  }
}

}  // namespace

EquivalenceReport check_weak(const Circuit& c0, const Circuit& c1, double threshold, const DescriptionOptions& opts) {
  require_compatible(c0, c1);
  const auto start = std::chrono::steady_clock::now();
  const Circuit composite = concat(c0, adjoint(c1));

  EquivalenceReport report;
  report.mode = EquivalenceMode::Weak;
  report.threshold = threshold;
  report.residuals.reserve(composite.n_qubits);
  for_each_projection(composite, opts, [&](int, LocalProjection&& p) {
    const ResidualTriple r = p.zero_state_residual();
    report.max_linf = std::max(report.max_linf, r.linf);
    report.max_support = std::max(report.max_support, p.support_size());
    report.residuals.push_back({p.support(), r});
  });
  report.verdict = report.max_linf <= threshold ? Verdict::Equivalent : Verdict::Inequivalent;
  report.near_threshold = report.max_linf >= threshold / 10.0 && report.max_linf <= threshold * 10.0;
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

EquivalenceReport check_strong(const Circuit& c0, const Circuit& c1, double threshold,
                               const DescriptionOptions& opts) {
  require_compatible(c0, c1);
  const auto start = std::chrono::steady_clock::now();
  EquivalenceReport report = check_weak(choi_extend(c0), choi_extend(c1), threshold, opts);
  report.mode = EquivalenceMode::Strong;
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace shallowcheck

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

#include <numbers>
#include <set>

#include "shallowcheck/equivalence.hpp"

namespace shallowcheck {
namespace {

Circuit from_layers(int n, std::vector<std::vector<Gate>> layers) {
  Circuit c;
  c.n_qubits = n;
  for (auto& gates : layers) c.layers.push_back(Layer{std::move(gates)});
  return c;
}

ComplexMatrix phase_pair(double theta) {
  ComplexMatrix u = ComplexMatrix::Zero(2, 2);
  u(0, 0) = std::polar(1.0, -theta);
  u(1, 1) = std::polar(1.0, theta);
  return u;
}

// V|00> = |01>, V|01> = |00>, V|10> = |10>, V|11> = |11>.
ComplexMatrix anti_controlled_not() {
  ComplexMatrix v = ComplexMatrix::Zero(4, 4);
  v(1, 0) = v(0, 1) = v(2, 2) = v(3, 3) = 1.0;
  return v;
}

}  // namespace

Circuit deutsch_direct(const ComplexMatrix& w) {
  const ComplexMatrix u = w * w;
  return from_layers(3, {{make_gate({0, 1, 2}, doubly_controlled(u), "CCU")}});
}

Circuit deutsch_decomposed(const ComplexMatrix& w) {
  const ComplexMatrix cw = controlled(w);
  const ComplexMatrix cwd = controlled(dagger(w));
  return from_layers(3, {{make_gate({1, 2}, cw, "CW")},
                         {make_gate("CNOT", {0, 1})},
                         {make_gate({1, 2}, cwd, "CWdg")},
                         {make_gate("CNOT", {0, 1})},
                         {make_gate({0, 2}, cw, "CW")}});
}

Circuit deutsch_swap_1d(const ComplexMatrix& w) {
  const ComplexMatrix cw = controlled(w);
  const ComplexMatrix cwd = controlled(dagger(w));
  const ComplexMatrix swap_after_cnot = named_gate("SWAP", 2) * named_gate("CNOT", 2);
  return from_layers(3, {{make_gate({1, 2}, cw, "CW")},
                         {make_gate("CNOT", {0, 1})},
                         {make_gate({1, 2}, cwd, "CWdg")},
                         {make_gate({0, 1}, swap_after_cnot, "SWAP.CNOT")},
                         {make_gate({1, 2}, cw, "CW")},
                         {make_gate("SWAP", {0, 1})}});
}

Circuit diagonal_direct(double theta) {
  // Controls are qubits 0 and 2, the target is qubit 1.
  return from_layers(3, {{make_gate({0, 2, 1}, doubly_controlled(phase_pair(theta)), "CCD")}});
}

Circuit diagonal_depth4(double theta_first, double theta_second) {
  // V (controlled on qubit 2 being |0>) maps the target to t xor b xor 1, so
  // the first controlled-W sees the phase of z_t z_b and the second of z_t;
  // together they produce the phase only when both controls are set.
  const ComplexMatrix v = anti_controlled_not();
  return from_layers(3, {{make_gate({2, 1}, v, "V")},
                         {make_gate({0, 1}, controlled(phase_pair(theta_first / 2.0)), "CW")},
                         {make_gate({2, 1}, v, "V")},
                         {make_gate({0, 1}, controlled(phase_pair(theta_second / 2.0)), "CW")}});
}

Circuit embed_in_brickwork(const Circuit& micro, int n_qubits, int offset, int first_parity) {
  if (offset < 0 || offset + micro.n_qubits > n_qubits) throw DomainError("embed_in_brickwork: micro circuit does not fit");
  Circuit c;
  c.n_qubits = n_qubits;
  const ComplexMatrix id2 = named_gate("I", 2);
  for (int k = 0; k < micro.depth(); ++k) {
    Layer layer;
    std::set<int> busy;
    for (const Gate& g : micro.layers[k].gates) {
      Gate shifted = g;
      for (int& q : shifted.qubits) {
        q += offset;
        busy.insert(q);
      }
      layer.gates.push_back(std::move(shifted));
    }
    for (auto [a, b] : brickwork_pairs(n_qubits, (first_parity + k) % 2)) {
      if (busy.count(a) || busy.count(b)) continue;
      layer.gates.push_back(Gate{{a, b}, id2, std::string("I")});
    }
    c.layers.push_back(std::move(layer));
  }
  return c;
}

std::vector<MicroFixture> micro_fixtures(const MicroFixtureOptions& opts) {
  Rng rng(opts.seed);
  std::vector<MicroFixture> out;
  auto add = [&](std::string name, Circuit c0, Circuit c1, Verdict weak, Verdict strong) {
    out.push_back({name, c0, c1, weak, strong});
    if (opts.embed_qubits > 0) {
      // The nearest-neighbour circuit starts on (offset+1, offset+2); chaining
      // c0 before c1^dagger then keeps the whole composite in brickwork order.
      const int p1 = (opts.embed_offset + 1) % 2;
      const int p0 = (p1 + c1.depth()) % 2;
      out.push_back({name + "_embedded" + std::to_string(opts.embed_qubits),
                     embed_in_brickwork(c0, opts.embed_qubits, opts.embed_offset, p0),
                     embed_in_brickwork(c1, opts.embed_qubits, opts.embed_offset, p1), weak, strong});
    }
  };
  constexpr auto eq = Verdict::Equivalent;
  constexpr auto ne = Verdict::Inequivalent;

  const ComplexMatrix w_decomp = haar_unitary(1, rng);
  add("deutsch_direct_vs_decomposed", deutsch_direct(w_decomp), deutsch_decomposed(w_decomp), eq, eq);
  const ComplexMatrix w_swap = haar_unitary(1, rng);
  add("deutsch_direct_vs_swap", deutsch_direct(w_swap), deutsch_swap_1d(w_swap), eq, eq);

  const double theta = 2.0 * std::numbers::pi * rng.uniform();
  add("diagonal_direct_vs_depth4", diagonal_direct(theta), diagonal_depth4(theta, theta), eq, eq);
  // Both circuits fix |000>, so only the strong check can see the perturbation.
  const double theta_p = 2.0 * std::numbers::pi * rng.uniform();
  add("diagonal_perturbed", diagonal_direct(theta_p), diagonal_depth4(theta_p + opts.perturbation, theta_p), eq, ne);
  return out;
}

}  // namespace shallowcheck

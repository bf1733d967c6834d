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

#include <gtest/gtest.h>

#include <numbers>

#include <Eigen/Eigenvalues>

#include "shallowcheck/equivalence.hpp"
#include "shallowcheck/errors.hpp"
#include "shallowcheck/oracle.hpp"
#include "test_support.hpp"

namespace shallowcheck::oracle {
namespace {

using shallowcheck::testing::max_abs;
using shallowcheck::testing::random_state;
using shallowcheck::testing::single_layer;

// Tensor product of each layer's gates, built with kron over the full width.
ComplexMatrix layer_matrix(const Layer& layer, int n) {
  ComplexMatrix m = ComplexMatrix::Identity(1, 1);
  int q = 0;
  while (q < n) {
    const Gate* owner = nullptr;
    for (const Gate& g : layer.gates) {
      if (g.qubits.front() == q) owner = &g;
    }
    if (owner != nullptr) {
      m = kron(m, owner->matrix);
      q += owner->arity();
    } else {
      m = kron(m, ComplexMatrix::Identity(2, 2));
      ++q;
    }
  }
  return m;
}

int eigen_rank(const ComplexMatrix& hermitian, double tol = 1e-8) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(Eigen::MatrixXcd(hermitian), Eigen::EigenvaluesOnly);
  int rank = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) rank += es.eigenvalues()(i) > tol ? 1 : 0;
  return rank;
}

TEST(Simulate, Basics) {
  const StateVector id = simulate(testing::identity_circuit(2));
  EXPECT_EQ((id - basis_state(2, 0)).norm(), 0.0);
  const StateVector h = simulate(single_layer(1, {make_gate("H", {0})}));
  EXPECT_NEAR(h(0).real(), std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(h(1).real(), std::sqrt(0.5), 1e-15);
  Rng rng(1);
  const StateVector psi = random_state(3, rng);
  EXPECT_EQ((simulate(testing::identity_circuit(3), psi) - psi).norm(), 0.0);
}

TEST(Simulate, MatchesLayerProductOnBrickwork) {
  // CNOT-like fixtures on the eight-qubit brickwork pattern, plus random ones.
  Circuit c = random_circuit(8, 3, 2);
  const ComplexMatrix bell = named_gate("CNOT", 2) * kron(named_gate("H", 1), named_gate("I", 1));
  for (Layer& l : c.layers) {
    for (std::size_t i = 0; i < l.gates.size(); i += 2) l.gates[i].matrix = bell;
  }
  ComplexMatrix u = ComplexMatrix::Identity(256, 256);
  for (const Layer& l : c.layers) u = layer_matrix(l, 8) * u;
  EXPECT_LT((simulate(c) - u.col(0)).norm(), 1e-13);
  EXPECT_LT(max_abs(circuit_unitary(c) - u), 1e-13);
}

TEST(Simulate, ReversedQubitOrderOnGate) {
  // CNOT listed as (1, 0): qubit 1 controls qubit 0.
  const Circuit c = single_layer(2, {make_gate("X", {1})});
  Circuit both = concat(c, single_layer(2, {make_gate("CNOT", {1, 0})}));
  EXPECT_EQ((simulate(both) - basis_state(2, 0b11)).norm(), 0.0);
}

TEST(Simulate, RefusesAboveCap) {
  EXPECT_THROW(simulate(random_circuit(15, 1, 0)), CapacityError);
  EXPECT_THROW(simulate(random_circuit(6, 1, 0), 5), CapacityError);
}

TEST(EqualUpToPhase, Examples) {
  Rng rng(3);
  const StateVector u = random_state(3, rng);
  EXPECT_TRUE(equal_up_to_phase(u, std::polar(1.0, std::numbers::pi / 7) * u));
  EXPECT_FALSE(equal_up_to_phase(basis_state(1, 0), basis_state(1, 1)));
}

TEST(EqualUpToPhase, DiagonalPairOutputs) {
  const double theta = 1.1;
  EXPECT_TRUE(equal_up_to_phase(simulate(diagonal_direct(theta)), simulate(diagonal_depth4(theta, theta))));
}

TEST(UnitariesEqualUpToPhase, Examples) {
  Rng rng(4);
  const ComplexMatrix u = haar_unitary(2, rng);
  EXPECT_TRUE(unitaries_equal_up_to_phase(u, std::polar(1.0, 2.0) * u));
  EXPECT_FALSE(unitaries_equal_up_to_phase(named_gate("S", 1), named_gate("T", 1)));
}

TEST(PartialTrace, BellReducesToMaximallyMixed) {
  StateVector phi = StateVector::Zero(4);
  phi(0) = phi(3) = std::sqrt(0.5);
  const int keep[] = {0};
  const DensityMatrix rho = partial_trace(density_matrix(phi), keep, 2);
  EXPECT_LT(max_abs(rho - 0.5 * ComplexMatrix::Identity(2, 2)), 1e-15);
}

TEST(PartialTrace, KeepAllIsIdentityMap) {
  Rng rng(2);
  const DensityMatrix rho = density_matrix(random_state(3, rng));
  const int keep[] = {2, 0, 1};
  EXPECT_LT(max_abs(partial_trace(rho, keep, 3) - rho), 1e-15);
  EXPECT_TRUE(is_density_matrix(rho));
}

TEST(PartialTrace, SupportContainmentMatchesMembership) {
  // supp(tr_rest rho) lies in range(Q) exactly when (Q (x) I) fixes the state.
  Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix q = testing::random_projector(2, 2, rng);
    StateVector psi = random_state(4, rng);
    if (trial % 2 == 0) {
      // Force the first two qubits into range(Q).
      const QubitList s{0, 1};
      const QubitList all{0, 1, 2, 3};
      psi = embed(q, s, all) * psi;
      psi /= psi.norm();
    }
    const int keep[] = {0, 1};
    const DensityMatrix reduced = partial_trace(density_matrix(psi), keep, 4);
    const bool contained = max_abs(q * reduced - reduced) < 1e-10;
    const QubitList s{0, 1};
    const QubitList all{0, 1, 2, 3};
    const bool member = (embed(q, s, all) * psi - psi).norm() < 1e-10;
    EXPECT_EQ(contained, member) << "trial " << trial;
    EXPECT_EQ(member, trial % 2 == 0);
  }
}

TEST(PartialTrace, DescriptionEntryContainsReducedState) {
  const Circuit c = random_circuit(6, 2, 2);
  const StateVector out = simulate(c);
  const Description d = compute_description(c);
  for (const LocalProjection& p : d.projections) {
    const DensityMatrix reduced = partial_trace(density_matrix(out), p.support(), 6);
    EXPECT_LT(max_abs(p.matrix() * reduced - reduced), 1e-12);
  }
}

TEST(SubspaceDim, Examples) {
  const std::vector<ComplexMatrix> id{ComplexMatrix::Identity(4, 4)};
  EXPECT_EQ(subspace_dim(id), 4);
  ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  const std::vector<ComplexMatrix> both{kron(p0, ComplexMatrix::Identity(2, 2)), kron(ComplexMatrix::Identity(2, 2), p0)};
  EXPECT_EQ(subspace_dim(both), 1);
}

TEST(SubspaceDim, DescriptionIsOneDimensional) {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const Description d = compute_description(random_circuit(6, 2, seed));
    std::vector<ComplexMatrix> full;
    for (const LocalProjection& p : d.projections) full.push_back(embed_full(p, 6));
    EXPECT_EQ(subspace_dim(full), 1);
  }
}

TEST(SubspaceDim, AgreesWithEigenvalueCount) {
  Rng rng(8);
  for (int trial = 0; trial < 5; ++trial) {
    // Commuting projectors: diagonal in a shared random basis.
    const ComplexMatrix u = haar_unitary(3, rng);
    std::vector<ComplexMatrix> ps;
    ComplexMatrix product = ComplexMatrix::Identity(8, 8);
    for (int k = 0; k < 3; ++k) {
      ComplexMatrix diag = ComplexMatrix::Zero(8, 8);
      for (int i = 0; i < 8; ++i) diag(i, i) = rng.uniform() < 0.7 ? 1.0 : 0.0;
      ps.push_back(u * diag * u.adjoint());
      product = ps.back() * product;
    }
    EXPECT_EQ(subspace_dim(ps), eigen_rank(product));
  }
}

TEST(SubspaceDim, TraceOfProductCountsIntersection) {
  // For commuting projectors the product is the projector onto the
  // intersection, so its trace is the dimension.
  Rng rng(10);
  const ComplexMatrix q = testing::random_projector(2, 2, rng);
  const ComplexMatrix r = ComplexMatrix::Identity(4, 4) - q;
  const std::vector<ComplexMatrix> disjoint{q, r};
  EXPECT_EQ(subspace_dim(disjoint), 0);
  const std::vector<ComplexMatrix> same{q, q};
  EXPECT_EQ(subspace_dim(same), 2);
}

TEST(SubspaceDim, RejectsNonCommuting) {
  ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  const std::vector<ComplexMatrix> ps{ComplexMatrix::Constant(2, 2, 0.5), p0};
  EXPECT_THROW(subspace_dim(ps), DomainError);
}

TEST(DensityMatrix, Validity) {
  Rng rng(11);
  EXPECT_TRUE(is_density_matrix(density_matrix(random_state(2, rng))));
  EXPECT_FALSE(is_density_matrix(2.0 * ComplexMatrix::Identity(2, 2)));
  ComplexMatrix neg = ComplexMatrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  EXPECT_FALSE(is_density_matrix(neg));
}

}  // namespace
}  // namespace shallowcheck::oracle

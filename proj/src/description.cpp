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

#include "shallowcheck/description.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>

namespace shallowcheck {

struct ProjectionAccess {
  static QubitList& support(LocalProjection& p) { return p.support_; }
  static QubitList& active(LocalProjection& p) { return p.active_; }
  static ComplexMatrix& factor(LocalProjection& p) { return p.factor_; }
};

namespace {

QubitList sorted_union(const QubitList& a, const QubitList& b) {
  QubitList out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

QubitList sorted_copy(QubitList q) {
  std::sort(q.begin(), q.end());
  return q;
}

bool intersects(const QubitList& a, const QubitList& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

// Per layer: gates sorted by smallest qubit, and the owning gate of each qubit.
struct LayerIndex {
  std::vector<const Gate*> gates;
  std::vector<QubitList> sorted_qubits;
  std::vector<int> owner;
};

std::vector<LayerIndex> index_layers(const Circuit& c) {
  std::vector<LayerIndex> out(c.layers.size());
  for (std::size_t k = 0; k < c.layers.size(); ++k) {
    LayerIndex& idx = out[k];
    for (const Gate& g : c.layers[k].gates) idx.gates.push_back(&g);
    std::stable_sort(idx.gates.begin(), idx.gates.end(),
                     [](const Gate* a, const Gate* b) { return a->min_qubit() < b->min_qubit(); });
    idx.owner.assign(c.n_qubits, -1);
    for (std::size_t g = 0; g < idx.gates.size(); ++g) {
      idx.sorted_qubits.push_back(sorted_copy(idx.gates[g]->qubits));
      for (int q : idx.gates[g]->qubits) {
        if (q < 0 || q >= c.n_qubits) throw DomainError("gate qubit " + std::to_string(q) + " out of range");
        if (idx.owner[q] != -1) {
          throw DomainError("layer " + std::to_string(k) + " has overlapping gates on qubit " + std::to_string(q));
        }
        idx.owner[q] = static_cast<int>(g);
      }
    }
  }
  return out;
}

std::string describe_origin(const char* context, int origin) {
  std::string s = context;
  if (origin >= 0) s += " " + std::to_string(origin);
  return s;
}

// Checks whether the factor is I on the qubit at bit `bit`; if so, writes the
// reduced factor to `reduced`.
bool split_identity(const ComplexMatrix& f, int bit, double tol, ComplexMatrix& reduced) {
  const Eigen::Index dim = f.rows();
  const Eigen::Index mask = Eigen::Index{1} << bit;
  for (Eigen::Index r = 0; r < dim; ++r) {
    if (r & mask) continue;
    for (Eigen::Index c = 0; c < dim; ++c) {
      if (c & mask) continue;
      if (std::abs(f(r, c | mask)) > tol || std::abs(f(r | mask, c)) > tol ||
          std::abs(f(r, c) - f(r | mask, c | mask)) > tol) {
        return false;
      }
    }
  }
  const Eigen::Index half = dim / 2;
  reduced.resize(half, half);
  const Eigen::Index low = mask - 1;
  auto squeeze = [&](Eigen::Index i) { return ((i >> 1) & ~low) | (i & low); };
  for (Eigen::Index r = 0; r < dim; ++r) {
    if (r & mask) continue;
    for (Eigen::Index c = 0; c < dim; ++c) {
      if (c & mask) continue;
      reduced(squeeze(r), squeeze(c)) = (f(r, c) + f(r | mask, c | mask)) * 0.5;
    }
  }
  return true;
}

void evolve_through(LocalProjection& p, const Circuit& c, const std::vector<LayerIndex>& layers,
                    const DescriptionOptions& opts, int origin, const char* context) {
  QubitList& support = ProjectionAccess::support(p);
  QubitList& active = ProjectionAccess::active(p);
  ComplexMatrix& factor = ProjectionAccess::factor(p);
  std::vector<int> overlapping;
  for (std::size_t k = 0; k < layers.size(); ++k) {
    const LayerIndex& idx = layers[k];
    overlapping.clear();
    for (int q : support) {
      const int g = idx.owner[q];
      if (g >= 0) overlapping.push_back(g);
    }
    std::sort(overlapping.begin(), overlapping.end());
    overlapping.erase(std::unique(overlapping.begin(), overlapping.end()), overlapping.end());
    if (overlapping.empty()) continue;

    QubitList grown = support;
    for (int g : overlapping) grown = sorted_union(grown, idx.sorted_qubits[g]);
    if (static_cast<int>(grown.size()) > opts.support_cap) {
      throw CapacityError(describe_origin(context, origin) + ": support grows to " + std::to_string(grown.size()) +
                          " qubits in layer " + std::to_string(k) + ", above the cap of " +
                          std::to_string(opts.support_cap));
    }

    // Gates that only touch the implicit identity part leave it unchanged.
    std::vector<int> acting;
    QubitList next_active = opts.factor_identities ? active : grown;
    for (int g : overlapping) {
      if (!opts.factor_identities || intersects(idx.sorted_qubits[g], active)) {
        acting.push_back(g);
        next_active = sorted_union(next_active, idx.sorted_qubits[g]);
      }
    }
    if (static_cast<int>(next_active.size()) > opts.dense_cap) {
      throw CapacityError(describe_origin(context, origin) + ": dense factor grows to " +
                          std::to_string(next_active.size()) + " qubits in layer " + std::to_string(k) +
                          ", above the dense cap of " + std::to_string(opts.dense_cap));
    }
    support = std::move(grown);
    if (acting.empty()) continue;
    if (next_active != active) {
      factor = embed(factor, active, next_active);
      active = std::move(next_active);
    }

    std::vector<std::vector<int>> positions;
    positions.reserve(acting.size());
    for (int g : acting) positions.push_back(bit_positions(idx.gates[g]->qubits, active));
    for (std::size_t i = 0; i < acting.size(); ++i) apply_left(factor, idx.gates[acting[i]]->matrix, positions[i]);
    for (std::size_t i = 0; i < acting.size(); ++i) {
      apply_right_adjoint(factor, idx.gates[acting[i]]->matrix, positions[i]);
    }
    if (opts.resymmetrize) hermitize(factor);
    if (opts.factor_identities) p.factor_out_identities();
  }
  (void)c;
}

}  // namespace

LocalProjection::LocalProjection(QubitList support, ComplexMatrix matrix)
    : support_(std::move(support)), active_(support_), factor_(std::move(matrix)) {
  detail::check_sorted_unique(support_, "LocalProjection");
  if (support_.empty()) throw DomainError("LocalProjection: empty support");
  if (factor_.rows() != factor_.cols() || factor_.rows() != (Eigen::Index{1} << support_.size())) {
    throw DomainError("LocalProjection: matrix dimension does not match support size");
  }
}

LocalProjection LocalProjection::factored(QubitList support, QubitList active, ComplexMatrix factor) {
  detail::check_sorted_unique(support, "LocalProjection");
  detail::check_sorted_unique(active, "LocalProjection");
  if (!std::includes(support.begin(), support.end(), active.begin(), active.end())) {
    throw DomainError("LocalProjection: active qubits must lie in the support");
  }
  if (factor.rows() != factor.cols() || factor.rows() != (Eigen::Index{1} << active.size())) {
    throw DomainError("LocalProjection: factor dimension does not match active support");
  }
  LocalProjection p;
  p.support_ = std::move(support);
  p.active_ = std::move(active);
  p.factor_ = std::move(factor);
  return p;
}

ComplexMatrix LocalProjection::matrix() const {
  if (active_ == support_) return factor_;
  return embed(factor_, active_, support_);
}

void LocalProjection::factor_out_identities(double tol) {
  ComplexMatrix reduced;
  for (std::size_t i = active_.size(); i-- > 0;) {
    if (active_.size() == 1) break;
    const int bit = static_cast<int>(active_.size()) - 1 - static_cast<int>(i);
    if (split_identity(factor_, bit, tol, reduced)) {
      factor_.swap(reduced);
      active_.erase(active_.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
}

ResidualTriple LocalProjection::zero_state_residual() const {
  // P|0..0> = (F|0..0>) x |0..0> on the identity part, so only the factor's
  // first column contributes to E; the averages still run over 2^|support|.
  const StateVector e0 = basis_state(static_cast<int>(active_.size()));
  const double dim = std::ldexp(1.0, support_size());
  const StateVector image = factor_.col(0);
  return residual_of(image, e0, dim);
}

int Description::max_support() const {
  int m = 0;
  for (const auto& p : projections) m = std::max(m, p.support_size());
  return m;
}

LocalProjection evolve_projection(LocalProjection p, const Circuit& c, const DescriptionOptions& opts, int origin,
                                  const char* context) {
  for (int q : p.support()) {
    if (q < 0 || q >= c.n_qubits) throw DomainError("projection qubit " + std::to_string(q) + " out of range");
  }
  if (static_cast<int>(p.support().size()) > opts.support_cap) {
    throw CapacityError(describe_origin(context, origin) + ": initial support exceeds the cap");
  }
  const auto layers = index_layers(c);
  if (opts.factor_identities) p.factor_out_identities();
  if (!opts.factor_identities && p.active_support() != p.support()) {
    p = LocalProjection(p.support(), p.matrix());
  }
  evolve_through(p, c, layers, opts, origin, context);
  return p;
}

void for_each_projection(const Circuit& c, const DescriptionOptions& opts,
                         const std::function<void(int, LocalProjection&&)>& sink) {
  const auto layers = index_layers(c);
  ComplexMatrix zero = ComplexMatrix::Zero(2, 2);
  zero(0, 0) = 1.0;
  for (int t = 0; t < c.n_qubits; ++t) {
    LocalProjection p({t}, zero);
    evolve_through(p, c, layers, opts, t, "projection of qubit");
    sink(t, std::move(p));
  }
}

Description compute_description(const Circuit& c, const DescriptionOptions& opts) {
  Description d;
  d.n_qubits = c.n_qubits;
  d.projections.reserve(c.n_qubits);
  for_each_projection(c, opts, [&](int, LocalProjection&& p) { d.projections.push_back(std::move(p)); });
  return d;
}

std::vector<ResidualTriple> initial_state_residuals(const Description& d) {
  std::vector<ResidualTriple> out;
  out.reserve(d.projections.size());
  for (const auto& p : d.projections) out.push_back(p.zero_state_residual());
  return out;
}

double commutation_check(std::span<const LocalProjection> projections, int support_cap) {
  double worst = 0.0;
  for (std::size_t a = 0; a < projections.size(); ++a) {
    for (std::size_t b = a + 1; b < projections.size(); ++b) {
      const auto& pa = projections[a];
      const auto& pb = projections[b];
      if (!intersects(pa.support(), pb.support())) continue;
      const QubitList full = sorted_union(pa.support(), pb.support());
      if (static_cast<int>(full.size()) > support_cap) {
        throw CapacityError("commutation_check: union of supports " + std::to_string(a) + " and " +
                            std::to_string(b) + " spans " + std::to_string(full.size()) + " qubits");
      }
      // Identity factors commute with everything.
      if (!intersects(pa.active_support(), pb.active_support())) continue;
      const QubitList joint = sorted_union(pa.active_support(), pb.active_support());
      ComplexMatrix prod = embed(pb.factor(), pb.active_support(), joint);
      apply_left(prod, pa.factor(), bit_positions(pa.active_support(), joint));
      // For Hermitian A and B, BA = (AB)^dagger.
      worst = std::max(worst, (prod - prod.adjoint()).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

double commutation_check(const Description& d, int support_cap) {
  return commutation_check(std::span<const LocalProjection>(d.projections), support_cap);
}

namespace {

std::vector<int> global_positions(const QubitList& qubits, int n_qubits) {
  std::vector<int> pos;
  pos.reserve(qubits.size());
  for (int q : qubits) {
    if (q < 0 || q >= n_qubits) throw DomainError("qubit " + std::to_string(q) + " out of range");
    pos.push_back(n_qubits - 1 - q);
  }
  return pos;
}

}  // namespace

void apply_projection(StateVector& state, const LocalProjection& p, int n_qubits) {
  if (state.size() != (Eigen::Index{1} << n_qubits)) throw DomainError("apply_projection: state dimension mismatch");
  apply_left(state, p.factor(), global_positions(p.active_support(), n_qubits));
}

int intersection_rank_small(std::span<const LocalProjection> projections, int n_qubits, int oracle_cap) {
  if (n_qubits > oracle_cap) {
    throw CapacityError("intersection_rank_small: " + std::to_string(n_qubits) + " qubits exceeds the oracle cap of " +
                        std::to_string(oracle_cap));
  }
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  std::vector<std::vector<int>> positions;
  for (const auto& p : projections) positions.push_back(global_positions(p.active_support(), n_qubits));
  // Trace of the product projector, accumulated over blocks of basis columns.
  const Eigen::Index block = std::min<Eigen::Index>(dim, 128);
  double trace = 0.0;
  ComplexMatrix cols(dim, block);
  for (Eigen::Index start = 0; start < dim; start += block) {
    const Eigen::Index width = std::min(block, dim - start);
    cols.setZero();
    for (Eigen::Index j = 0; j < width; ++j) cols(start + j, j) = 1.0;
    for (std::size_t i = 0; i < projections.size(); ++i) apply_left(cols, projections[i].factor(), positions[i]);
    for (Eigen::Index j = 0; j < width; ++j) trace += cols(start + j, j).real();
  }
  return static_cast<int>(std::llround(trace));
}

int intersection_rank_small(const Description& d, int oracle_cap) {
  return intersection_rank_small(std::span<const LocalProjection>(d.projections), d.n_qubits, oracle_cap);
}

}  // namespace shallowcheck

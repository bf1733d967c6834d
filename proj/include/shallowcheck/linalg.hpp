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

// Dense linear algebra on qubit-indexed operators.
//
// Bit convention used everywhere in the library: for an operator on the
// ordered qubit list q_0, q_1, ..., q_{k-1}, qubit q_j is bit (k-1-j) of the
// row/column index, i.e. the first listed qubit is the most significant bit.
// Supports handed to `embed` as the target are sorted ascending, so the
// smallest qubit index is always the most significant bit of the result.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "shallowcheck/errors.hpp"

namespace shallowcheck {

using Complex = std::complex<double>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using ComplexMatrix = DenseMatrix<Complex>;
using StateVector = DenseVector<Complex>;
using QubitList = std::vector<int>;

/// Tolerance for structural predicates (unitary, projection).
inline constexpr double kDefaultTolerance = 1e-9;
/// Largest number of qubits any single operator support may span.
inline constexpr int kDefaultQubitCap = 26;

/// Averaged residual norms of an error vector E, as used for membership tests:
/// l1 = mean |E_j|, l2 = sqrt(mean |E_j|^2), linf = max |E_j|.
struct ResidualTriple {
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
};

/// Number of qubits k with 2^k == dim; throws DomainError for other sizes.
inline int qubit_count(Eigen::Index dim) {
  if (dim <= 0 || (dim & (dim - 1)) != 0) {
    throw DomainError("dimension " + std::to_string(dim) + " is not a power of two");
  }
  int k = 0;
  while ((Eigen::Index{1} << k) < dim) ++k;
  return k;
}

template <typename DA, typename DB>
DenseMatrix<typename DA::Scalar> kron(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b,
                                      int qubit_cap = kDefaultQubitCap) {
  static_assert(std::is_same_v<typename DA::Scalar, typename DB::Scalar>, "kron: scalar types differ");
  const Eigen::Index rows = a.rows() * b.rows();
  const Eigen::Index cols = a.cols() * b.cols();
  const Eigen::Index limit = Eigen::Index{1} << qubit_cap;
  if (rows > limit || cols > limit) {
    throw CapacityError("kron: result dimension " + std::to_string(rows) + "x" + std::to_string(cols) +
                        " exceeds the " + std::to_string(qubit_cap) + "-qubit cap");
  }
  DenseMatrix<typename DA::Scalar> out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

template <typename Derived>
DenseMatrix<typename Derived::Scalar> dagger(const Eigen::MatrixBase<Derived>& a) {
  return a.adjoint();
}

/// Bit position inside a `target`-indexed operator of every qubit in `sub`.
/// `sub` may be in any order; every entry must occur in `target`.
inline std::vector<int> bit_positions(std::span<const int> sub, std::span<const int> target) {
  std::vector<int> pos;
  pos.reserve(sub.size());
  const int m = static_cast<int>(target.size());
  for (int q : sub) {
    auto it = std::find(target.begin(), target.end(), q);
    if (it == target.end()) {
      throw DomainError("qubit " + std::to_string(q) + " is not contained in the target support");
    }
    pos.push_back(m - 1 - static_cast<int>(it - target.begin()));
  }
  return pos;
}

namespace detail {

/// offsets[x] is the index contribution of local index x scattered to `pos`.
inline std::vector<std::int64_t> scatter_offsets(std::span<const int> pos) {
  const int k = static_cast<int>(pos.size());
  std::vector<std::int64_t> off(std::size_t{1} << k, 0);
  for (std::size_t x = 0; x < off.size(); ++x) {
    std::int64_t v = 0;
    for (int j = 0; j < k; ++j) {
      if ((x >> (k - 1 - j)) & 1U) v |= std::int64_t{1} << pos[j];
    }
    off[x] = v;
  }
  return off;
}

/// Offsets enumerating every index whose bits at `pos` are zero.
inline std::vector<std::int64_t> complement_offsets(std::span<const int> pos, int total_bits) {
  std::vector<int> rest;
  for (int b = total_bits - 1; b >= 0; --b) {
    if (std::find(pos.begin(), pos.end(), b) == pos.end()) rest.push_back(b);
  }
  return scatter_offsets(rest);
}

inline void check_sorted_unique(std::span<const int> s, const char* what) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i - 1] >= s[i]) throw DomainError(std::string(what) + ": support must be sorted and duplicate-free");
  }
}

}  // namespace detail

/// Operator on `target_support` acting as `op` on `op_support` and as the
/// identity elsewhere. Built by index scattering; no identity Kronecker
/// product is formed.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> embed(const Eigen::MatrixBase<Derived>& op, std::span<const int> op_support,
                                             std::span<const int> target_support) {
  detail::check_sorted_unique(target_support, "embed");
  if (op.rows() != op.cols() || op.rows() != (Eigen::Index{1} << op_support.size())) {
    throw DomainError("embed: operator dimension does not match its support");
  }
  for (std::size_t i = 0; i < op_support.size(); ++i) {
    for (std::size_t j = i + 1; j < op_support.size(); ++j) {
      if (op_support[i] == op_support[j]) throw DomainError("embed: repeated qubit in operator support");
    }
  }
  const int m = static_cast<int>(target_support.size());
  if (m > kDefaultQubitCap) throw CapacityError("embed: target support exceeds the qubit cap");
  const auto pos = bit_positions(op_support, target_support);
  const auto off = detail::scatter_offsets(pos);
  const auto rest = detail::complement_offsets(pos, m);
  const Eigen::Index dim = Eigen::Index{1} << m;
  DenseMatrix<typename Derived::Scalar> out = DenseMatrix<typename Derived::Scalar>::Zero(dim, dim);
  const Eigen::Index k = op.rows();
  for (std::int64_t y : rest) {
    for (Eigen::Index r = 0; r < k; ++r) {
      for (Eigen::Index c = 0; c < k; ++c) {
        out(off[r] + y, off[c] + y) = op(r, c);
      }
    }
  }
  return out;
}

/// u * p * u^dagger.
template <typename DU, typename DP>
DenseMatrix<typename DP::Scalar> conjugate(const Eigen::MatrixBase<DU>& u, const Eigen::MatrixBase<DP>& p) {
  if (u.rows() != u.cols() || p.rows() != p.cols() || u.rows() != p.rows()) {
    throw DomainError("conjugate: dimension mismatch");
  }
  DenseMatrix<typename DP::Scalar> tmp = u * p;
  return tmp * u.adjoint();
}

template <typename Derived>
bool is_projection(const Eigen::MatrixBase<Derived>& p, double tol = kDefaultTolerance) {
  if (p.rows() != p.cols()) return false;
  if (!p.allFinite()) return false;
  const double herm = (p - p.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol) return false;
  DenseMatrix<typename Derived::Scalar> sq = p * p;
  return (sq - p).cwiseAbs().maxCoeff() <= tol;
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& u, double tol = kDefaultTolerance) {
  if (u.rows() != u.cols() || !u.allFinite()) return false;
  DenseMatrix<typename Derived::Scalar> prod = u * u.adjoint();
  prod -= DenseMatrix<typename Derived::Scalar>::Identity(u.rows(), u.cols());
  return prod.cwiseAbs().maxCoeff() <= tol;
}

/// Residual norms of E = e - v for a precomputed image e = P v.
template <typename DE, typename DV>
ResidualTriple residual_of(const Eigen::MatrixBase<DE>& image, const Eigen::MatrixBase<DV>& v,
                           double dimension) {
  ResidualTriple r;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    const double e = std::abs(image(j) - v(j));
    sum += e;
    sum_sq += e * e;
    r.linf = std::max(r.linf, e);
  }
  r.l1 = sum / dimension;
  r.l2 = std::sqrt(sum_sq / dimension);
  return r;
}

/// Norms of E = P v - v, with l1 and l2 averaged over the dimension of v.
template <typename DP, typename DV>
ResidualTriple membership_residual(const Eigen::MatrixBase<DP>& p, const Eigen::MatrixBase<DV>& v) {
  if (p.rows() != p.cols() || p.cols() != v.size()) throw DomainError("membership_residual: dimension mismatch");
  DenseVector<typename DP::Scalar> image = p * v;
  return residual_of(image, v, static_cast<double>(v.size()));
}

namespace detail {

/// In place on a contiguous array of 2^unit_bits units of `unit` scalars each:
/// applies `op` to the unit index, op local qubit j sitting at unit-index bit
/// pos[j]. Every unit is an untouched contiguous vector, so rows of a
/// row-major matrix (unit = cols) and single entries (unit = 1) both work.
template <typename Scalar>
void apply_on_units(Scalar* data, std::int64_t unit, int unit_bits, const DenseMatrix<Scalar>& op,
                    std::span<const int> pos) {
  using Chunk = Eigen::Map<DenseMatrix<Scalar>, Eigen::Unaligned, Eigen::OuterStride<>>;
  const int m = static_cast<int>(pos.size());
  const Eigen::Index k = Eigen::Index{1} << m;
  if (op.rows() != k || op.cols() != k) throw DomainError("apply_left: operator size does not match positions");
  for (int b : pos) {
    if (b < 0 || b >= unit_bits) throw DomainError("apply_left: bit position out of range");
  }
  std::vector<int> sorted(pos.begin(), pos.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<int>());
  bool contiguous = true;
  for (int j = 1; j < m; ++j) contiguous = contiguous && sorted[j] == sorted[0] - j;

  if (contiguous) {
    // Re-express op on the descending run so that local index bits line up
    // with unit-index bits; each block is then a k x S row-major matrix.
    DenseMatrix<Scalar> local = op;
    if (!std::equal(sorted.begin(), sorted.end(), pos.begin())) {
      std::vector<Eigen::Index> perm(static_cast<std::size_t>(k));
      for (Eigen::Index xs = 0; xs < k; ++xs) {
        Eigen::Index x = 0;
        for (int i = 0; i < m; ++i) {
          const int j = static_cast<int>(std::find(sorted.begin(), sorted.end(), pos[i]) - sorted.begin());
          if ((xs >> (m - 1 - j)) & 1) x |= Eigen::Index{1} << (m - 1 - i);
        }
        perm[static_cast<std::size_t>(xs)] = x;
      }
      for (Eigen::Index r = 0; r < k; ++r) {
        for (Eigen::Index c = 0; c < k; ++c) local(r, c) = op(perm[r], perm[c]);
      }
    }
    const std::int64_t stride = (std::int64_t{1} << sorted.back()) * unit;
    const std::int64_t blocks = (std::int64_t{1} << unit_bits) / (k * (std::int64_t{1} << sorted.back()));
    if (stride >= 16) {
      constexpr std::int64_t kWidth = 256;
      DenseMatrix<Scalar> buf(k, std::min(stride, kWidth));
      for (std::int64_t b = 0; b < blocks; ++b) {
        Scalar* base = data + b * k * stride;
        for (std::int64_t c0 = 0; c0 < stride; c0 += kWidth) {
          const Eigen::Index w = static_cast<Eigen::Index>(std::min(kWidth, stride - c0));
          Chunk view(base + c0, k, w, Eigen::OuterStride<>(stride));
          buf.leftCols(w).noalias() = local.lazyProduct(view);
          view = buf.leftCols(w);
        }
      }
    } else {
      std::vector<Scalar> in(static_cast<std::size_t>(k));
      for (std::int64_t b = 0; b < blocks; ++b) {
        Scalar* base = data + b * k * stride;
        for (std::int64_t s = 0; s < stride; ++s) {
          for (Eigen::Index y = 0; y < k; ++y) in[y] = base[y * stride + s];
          for (Eigen::Index x = 0; x < k; ++x) {
            Scalar acc(0);
            for (Eigen::Index y = 0; y < k; ++y) acc += local(x, y) * in[y];
            base[x * stride + s] = acc;
          }
        }
      }
    }
    return;
  }

  const auto off = scatter_offsets(pos);
  const auto rest = complement_offsets(pos, unit_bits);
  DenseMatrix<Scalar> gathered(k, unit);
  DenseMatrix<Scalar> mixed(k, unit);
  for (std::int64_t base : rest) {
    for (Eigen::Index x = 0; x < k; ++x) {
      gathered.row(x) = Eigen::Map<const DenseVector<Scalar>>(data + (base + off[x]) * unit, unit).transpose();
    }
    mixed.noalias() = op.lazyProduct(gathered);
    for (Eigen::Index x = 0; x < k; ++x) {
      Eigen::Map<DenseVector<Scalar>>(data + (base + off[x]) * unit, unit) = mixed.row(x).transpose();
    }
  }
}

}  // namespace detail

/// In place: target <- (op on the qubits at row bit positions `pos`) * target.
/// op local qubit j sits at row bit pos[j].
template <typename Scalar, typename DOp>
void apply_left(DenseMatrix<Scalar>& target, const Eigen::MatrixBase<DOp>& op, std::span<const int> pos) {
  const DenseMatrix<Scalar> dense = op;
  detail::apply_on_units(target.data(), target.cols(), qubit_count(target.rows()), dense, pos);
}

template <typename Scalar, typename DOp>
void apply_left(DenseVector<Scalar>& target, const Eigen::MatrixBase<DOp>& op, std::span<const int> pos) {
  const DenseMatrix<Scalar> dense = op;
  detail::apply_on_units(target.data(), 1, qubit_count(target.size()), dense, pos);
}

/// In place: target <- target * (op on the column bit positions `pos`)^dagger,
/// for a row-major matrix whose column count is a power of two.
template <typename Scalar, typename DOp>
void apply_right_adjoint(DenseMatrix<Scalar>& target, const Eigen::MatrixBase<DOp>& op, std::span<const int> pos) {
  // (T U^dagger)[r, c] = sum_c' T[r, c'] conj(U[c, c']): conj(U) acting on
  // the low (column) bits of the flattened index.
  const DenseMatrix<Scalar> conj = op.conjugate();
  const int bits = qubit_count(target.rows()) + qubit_count(target.cols());
  detail::apply_on_units(target.data(), 1, bits, conj, pos);
}

/// In place: m <- (m + m^dagger) / 2 for a square matrix, tile by tile.
template <typename Scalar>
void hermitize(DenseMatrix<Scalar>& m) {
  const Eigen::Index n = m.rows();
  constexpr Eigen::Index kTile = 32;
  for (Eigen::Index ti = 0; ti < n; ti += kTile) {
    const Eigen::Index i_end = std::min(n, ti + kTile);
    for (Eigen::Index tj = ti; tj < n; tj += kTile) {
      const Eigen::Index j_end = std::min(n, tj + kTile);
      for (Eigen::Index i = ti; i < i_end; ++i) {
        for (Eigen::Index j = std::max(tj, i); j < j_end; ++j) {
          if (i == j) {
            m(i, i) = Scalar(std::real(m(i, i)));
            continue;
          }
          const Scalar avg = (m(i, j) + std::conj(m(j, i))) * 0.5;
          m(i, j) = avg;
          m(j, i) = std::conj(avg);
        }
      }
    }
  }
}

/// Largest absolute entry of a*b - b*a.
template <typename DA, typename DB>
double commutator_norm(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  DenseMatrix<typename DA::Scalar> ab = a * b;
  ab -= b * a;
  return ab.cwiseAbs().maxCoeff();
}

/// Computational basis vector |index> of dimension 2^k.
inline StateVector basis_state(int k, std::int64_t index = 0) {
  StateVector v = StateVector::Zero(Eigen::Index{1} << k);
  v(index) = 1.0;
  return v;
}

}  // namespace shallowcheck

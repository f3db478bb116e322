// Copyright 2026 The Hornkit Authors.
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

// Exact linear algebra over a prime field on top of Eigen dense storage.
//
// Everything here is templated on the scalar type and only relies on the
// field operations (+, -, *, /, ==), so the routines work for any exact
// field scalar that Eigen accepts. Subspaces are kept as the rows of a
// matrix in reduced row-echelon form, which makes equality syntactic.

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "hornkit/field.hpp"

namespace hornkit {

using Index = Eigen::Index;

template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Mat = MatrixX<Zp>;
using Vec = VectorX<Zp>;

// Seeded pseudo-random source. Sampling is done by rejection on raw
// mt19937_64 output, so a (seed, modulus) pair reproduces bit-identical
// values on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  Zp element() { return Zp(static_cast<std::uint32_t>(below(Zp::modulus())), Zp::Raw{}); }
  Zp nonzero_element() {
    return Zp(static_cast<std::uint32_t>(1 + below(Zp::modulus() - 1)), Zp::Raw{});
  }

  // Child seed for an independent stream; splitmix64 finalizer.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

// Customization point for drawing uniform field elements.
template <class Scalar>
Scalar sample_uniform(Rng& rng);
template <class Scalar>
Scalar sample_nonzero(Rng& rng);

template <>
inline Zp sample_uniform<Zp>(Rng& rng) {
  return rng.element();
}
template <>
inline Zp sample_nonzero<Zp>(Rng& rng) {
  return rng.nonzero_element();
}

// Reduces `m` in place to reduced row-echelon form and returns the pivot
// columns (strictly increasing; one per nonzero row).
template <class Derived>
std::vector<Index> rref_in_place(Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    m.row(row) *= inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == Scalar(0)) continue;
      const Scalar f = m(r, col);
      m.row(r) -= f * m.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  MatrixX<typename Derived::Scalar> work = m;
  return static_cast<Index>(rref_in_place(work).size());
}

template <class Scalar>
class Subspace {
 public:
  // Zero subspace of the given ambient dimension.
  explicit Subspace(Index ambient_dim = 0)
      : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

  static Subspace span_of_rows(MatrixX<Scalar> rows) {
    Subspace s(rows.cols());
    s.pivots_ = rref_in_place(rows);
    s.basis_ = rows.topRows(static_cast<Index>(s.pivots_.size()));
    return s;
  }

  static Subspace span_of_columns(const MatrixX<Scalar>& cols) {
    return span_of_rows(cols.transpose());
  }

  static Subspace full(Index n) {
    return span_of_rows(MatrixX<Scalar>::Identity(n, n));
  }

  Index ambient_dim() const { return ambient_dim_; }
  Index dim() const { return basis_.rows(); }
  Index codim() const { return ambient_dim_ - dim(); }

  // Rows form the reduced echelon basis.
  const MatrixX<Scalar>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  // Coefficients of `v` against basis(); meaningful only if contains(v).
  VectorX<Scalar> coordinates(const VectorX<Scalar>& v) const {
    VectorX<Scalar> c(dim());
    for (Index i = 0; i < dim(); ++i) c(i) = v(pivots_[static_cast<std::size_t>(i)]);
    return c;
  }

  bool contains(const VectorX<Scalar>& v) const {
    if (v.size() != ambient_dim_) return false;
    VectorX<Scalar> residual = v - basis_.transpose() * coordinates(v);
    for (Index i = 0; i < residual.size(); ++i) {
      if (residual(i) != Scalar(0)) return false;
    }
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.pivots_ == b.pivots_ &&
           a.basis_ == b.basis_;
  }

 private:
  Index ambient_dim_;
  MatrixX<Scalar> basis_;
  std::vector<Index> pivots_;
};

// Kernel {x : m x = 0}.
template <class Derived>
Subspace<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> r = m;
  const std::vector<Index> pivots = rref_in_place(r);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  MatrixX<Scalar> kernel(n - static_cast<Index>(pivots.size()), n);
  kernel.setZero();
  Index row = 0;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    kernel(row, f) = Scalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      kernel(row, pivots[i]) = -r(static_cast<Index>(i), f);
    }
    ++row;
  }
  return Subspace<Scalar>::span_of_rows(std::move(kernel));
}

// Functionals vanishing on `s`, as rows.
template <class Scalar>
MatrixX<Scalar> annihilator(const Subspace<Scalar>& s) {
  return nullspace(s.basis()).basis();
}

template <class Scalar>
Subspace<Scalar> intersect(std::span<const Subspace<Scalar>> spaces) {
  if (spaces.empty()) throw std::invalid_argument("intersect: no subspaces");
  const Index n = spaces.front().ambient_dim();
  std::vector<MatrixX<Scalar>> constraints;
  Index total = 0;
  for (const auto& s : spaces) {
    if (s.ambient_dim() != n) {
      throw std::invalid_argument("intersect: mismatched ambient dimensions");
    }
    constraints.push_back(annihilator(s));
    total += constraints.back().rows();
  }
  MatrixX<Scalar> stacked(total, n);
  Index at = 0;
  for (const auto& c : constraints) {
    stacked.middleRows(at, c.rows()) = c;
    at += c.rows();
  }
  return nullspace(stacked);
}

template <class Scalar>
Subspace<Scalar> intersect(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  const Subspace<Scalar> both[] = {a, b};
  return intersect<Scalar>(std::span<const Subspace<Scalar>>(both));
}

template <class Scalar>
Subspace<Scalar> sum(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw std::invalid_argument("sum: mismatched ambient dimensions");
  }
  MatrixX<Scalar> rows(a.dim() + b.dim(), a.ambient_dim());
  rows << a.basis(), b.basis();
  return Subspace<Scalar>::span_of_rows(std::move(rows));
}

template <class Scalar>
VectorX<Scalar> random_element(const Subspace<Scalar>& s, Rng& rng) {
  VectorX<Scalar> v = VectorX<Scalar>::Zero(s.ambient_dim());
  for (Index i = 0; i < s.dim(); ++i) {
    v += sample_uniform<Scalar>(rng) * s.basis().row(i).transpose();
  }
  return v;
}

template <class Scalar>
VectorX<Scalar> random_element(const Subspace<Scalar>& s, std::uint64_t seed) {
  Rng rng(seed);
  return random_element(s, rng);
}

// Invertible matrix preserving the coordinate flag
// span(e_{order[0]}) ⊂ span(e_{order[0]}, e_{order[1]}) ⊂ ...
// (0-based `order`): entry (order[j], order[k]) vanishes for j > k, the
// diagonal is nonzero and every other entry is uniform.
template <class Scalar = Zp>
MatrixX<Scalar> random_borel(Index n, std::span<const int> order, Rng& rng) {
  if (static_cast<Index>(order.size()) != n) {
    throw std::invalid_argument("random_borel: flag order has wrong length");
  }
  MatrixX<Scalar> m = MatrixX<Scalar>::Zero(n, n);
  for (Index k = 0; k < n; ++k) {
    for (Index j = 0; j <= k; ++j) {
      const auto row = order[static_cast<std::size_t>(j)];
      const auto col = order[static_cast<std::size_t>(k)];
      m(row, col) = j == k ? sample_nonzero<Scalar>(rng) : sample_uniform<Scalar>(rng);
    }
  }
  return m;
}

template <class Scalar = Zp>
MatrixX<Scalar> random_borel(Index n, std::span<const int> order, std::uint64_t seed) {
  Rng rng(seed);
  return random_borel<Scalar>(n, order, rng);
}

template <class Scalar = Zp>
MatrixX<Scalar> random_invertible(Index n, Rng& rng) {
  for (;;) {
    MatrixX<Scalar> m(n, n);
    for (Index j = 0; j < n; ++j) {
      for (Index i = 0; i < n; ++i) m(i, j) = sample_uniform<Scalar>(rng);
    }
    if (rank(m) == n) return m;
  }
}

// Inverse by Gauss-Jordan; throws std::domain_error if singular.
template <class Derived>
MatrixX<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Index n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse: matrix is not square");
  MatrixX<Scalar> aug(n, 2 * n);
  aug << m, MatrixX<Scalar>::Identity(n, n);
  const auto pivots = rref_in_place(aug);
  if (static_cast<Index>(pivots.size()) < n || (n > 0 && pivots[static_cast<std::size_t>(n - 1)] != n - 1)) {
    throw std::domain_error("inverse: matrix is singular");
  }
  return aug.rightCols(n);
}

template <class Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (m(i, j) != Scalar(0)) return false;
    }
  }
  return true;
}

}  // namespace hornkit

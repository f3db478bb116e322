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

// Tangent-space models of Schubert cells.
//
// Maps φ ∈ Hom(V, Q) are (dim Q) x (dim V) matrices, source index along
// columns, vectorised column-major: entry (i, j) sits at j * dim Q + i.
// For a partition λ the coordinate model X̂_λ frees the top λ_j rows of
// column j. Generic translates X_λ are built from random flags on V and Q.
//
// The two-step model Ŷ_σ on Fl(d, r, n) lives on the n x n grid: rows and
// columns are split into blocks [0, n-r) | [n-r, n-d) | [n-d, n) (Q, V/S, S),
// cell (j, k) belongs to g/p when block(j) < block(k), and it is free when
// η_j < η_k.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hornkit/exactla.hpp"
#include "hornkit/strings.hpp"

namespace hornkit {

enum class Geometry { kHomVQ, kHomVSQ, kHomSVS, kHomSQ, kTwoStepFull };

const char* geometry_name(Geometry g);

// Column-major slot of entry (i, j) of a map with `target_dim` rows.
inline Index hom_index(Index i, Index j, Index target_dim) { return j * target_dim + i; }

// Grid of free / fixed cells describing a coordinate subspace.
class PatternSpace {
 public:
  PatternSpace(Index rows, Index cols, Geometry geometry);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  Geometry geometry() const { return geometry_; }

  bool is_free(Index i, Index j) const { return cells_[static_cast<std::size_t>(hom_index(i, j, rows_))] != 0; }
  void set_free(Index i, Index j, bool free = true) {
    cells_[static_cast<std::size_t>(hom_index(i, j, rows_))] = free ? 1 : 0;
  }

  Index dim() const;
  std::vector<int> column_counts() const;
  // Top-justified columns, i.e. the pattern of some X̂_λ.
  bool is_young() const;

  Subspace<Zp> to_subspace() const;

  friend bool operator==(const PatternSpace&, const PatternSpace&) = default;

 private:
  Index rows_;
  Index cols_;
  Geometry geometry_;
  std::vector<char> cells_;
};

// X̂_λ in Hom(V, Q): (cap) x (rows) grid, column j free in its top λ_j rows.
PatternSpace hat_X(const Partition& lambda);

struct TwoStepModel {
  int d = 0;
  int r = 0;
  int n = 0;
  std::vector<int> eta;  // 1-based positions: zeros, then ones, then twos.
  PatternSpace pattern{0, 0, Geometry::kTwoStepFull};

  // Block (0 = Q, 1 = V/S, 2 = S) of 0-based grid index.
  int block(int j) const { return j < n - r ? 0 : (j < n - d ? 1 : 2); }
  bool in_tangent(int j, int k) const { return block(j) < block(k); }
};

TwoStepModel hat_Y(const StepString& sigma, int d, int r, int n);

struct TwoStepBlocks {
  PatternSpace quotient;  // σ(01): Hom(V/S, Q), (n-r) x (r-d)
  PatternSpace top;       // σ(02): Hom(S, Q),   (n-r) x d
  PatternSpace fiber;     // σ(12): Hom(S, V/S), (r-d) x d
};

TwoStepBlocks blocks_of(const TwoStepModel& y);

// Full flag: step l is the span of the first l columns of `basis`.
class FlagModel {
 public:
  FlagModel() = default;
  explicit FlagModel(Mat basis);

  static FlagModel standard(Index m);
  static FlagModel reversed(Index m);
  static FlagModel random(Index m, Rng& rng);

  Index dim() const { return basis_.cols(); }
  const Mat& basis() const { return basis_; }
  Subspace<Zp> step(Index l) const;

 private:
  Mat basis_;
};

// {φ : φ(src_l) ⊆ dst_{λ_l} for all l}, solved as the kernel of the
// linear constraints (dst^{-1} φ src)_{m, l} = 0 for m >= λ_l.
Subspace<Zp> X_from_flags(const Partition& lambda, const FlagModel& src, const FlagModel& dst);

struct GenericTangent {
  FlagModel source;  // flag on V
  FlagModel target;  // flag on Q
  Subspace<Zp> space;
};

// One tangent space per partition, each from its own seeded random flags.
std::vector<GenericTangent> generic_tangents(std::span<const Partition> lambdas, std::uint64_t seed);

// Signed expected dimension Σ dims − (s−1)·ambient of a transverse
// intersection. A negative value means no transverse intersection exists.
Index expected_intersection_dim(std::span<const Index> dims, Index ambient);
bool is_transverse(std::span<const Index> dims, Index ambient, Index achieved);

struct TransversalityVerdict {
  bool nonzero = false;
  Index achieved_dim = 0;
  Index expected_dim = 0;  // signed, see expected_intersection_dim
  Index ambient_dim = 0;
  Index sum_codims = 0;

  Index achieved_codim() const { return ambient_dim - achieved_dim; }
};

// Generic tangent intersection over `trials` derived seeds; the minimum
// achieved dimension is compared with the expected one.
TransversalityVerdict transversality_verdict(std::span<const Partition> lambdas, std::uint64_t seed,
                                             int trials);

// Flags induced on V (coordinates: coefficients against V.basis()) and on
// the quotient (coordinates: see quotient_coordinates).
struct InducedFlags {
  FlagModel on_subspace;
  FlagModel on_quotient;
};

InducedFlags induced_flag(const FlagModel& flag, const Subspace<Zp>& v);

// Image of x in ambient / V: the entries of x reduced against V's echelon
// basis, read at the non-pivot columns.
Vec quotient_coordinates(const Subspace<Zp>& v, const Vec& x);

// σ_l = dim(V ∩ F_l) − dim(V ∩ F_{l−1}).
StepString schubert_position(const Subspace<Zp>& v, const FlagModel& flag);

// λ restricted to the positions of the zeros of ρ.
Partition quotient_pattern(const Partition& lambda, const StepString& rho);

// Generic two-step translates Ad_p(Ŷ_σ) for random p in the parabolic
// subgroup, expressed in the g/p coordinates listed by TwoStepCoordinates.
class TwoStepCoordinates {
 public:
  TwoStepCoordinates(int d, int r, int n);

  int d() const { return d_; }
  int r() const { return r_; }
  int n() const { return n_; }
  Index dim() const { return static_cast<Index>(cells_.size()); }
  const std::vector<std::pair<int, int>>& cells() const { return cells_; }
  Index index_of(int j, int k) const;

  // Cells of one block: 0 = σ(01), 1 = σ(02), 2 = σ(12).
  std::vector<Index> block_cells(int which) const;

 private:
  int d_, r_, n_;
  std::vector<std::pair<int, int>> cells_;
  std::vector<Index> lookup_;
};

Subspace<Zp> generic_Y(const StepString& sigma, const TwoStepCoordinates& coords, Rng& rng);

// Y ∩ (coordinate subspace on `cells`), re-expressed on those cells.
Subspace<Zp> restrict_to_cells(const Subspace<Zp>& y, const std::vector<Index>& cells);
// Image of Y under the coordinate projection onto `cells`.
Subspace<Zp> project_to_cells(const Subspace<Zp>& y, const std::vector<Index>& cells);

// ASCII renderings.
std::string render_pattern(const PatternSpace& p);
std::string render_two_step(const TwoStepModel& y);

// Overlay of X̂_a ('*') and the opposite translate of X̂_b ('+').
std::string render_grassmann_pair(const Partition& a, const Partition& b);
// Three-block picture of two lifted 012-strings: V/S columns then S
// columns; Q rows, then V/S rows under the S columns.
std::string render_lifted_pair(const StepString& a, const StepString& b, int d, int r, int n);

}  // namespace hornkit

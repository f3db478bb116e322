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

#include "hornkit/tangent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hornkit {
namespace {

std::size_t at(Index i) { return static_cast<std::size_t>(i); }

struct Cell {
  bool present = false;
  std::string text;
};
using Table = std::vector<std::vector<Cell>>;

std::string rstrip(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

std::string render_table(const Table& table) {
  if (table.empty()) return "(empty)\n";
  const std::size_t cols = table.front().size();
  if (cols == 0) return "(empty)\n";
  auto present = [&](std::size_t row, std::size_t col) {
    return row < table.size() && col < cols && table[row][col].present;
  };
  // Horizontal rule between row `above` (may be -1) and `below`.
  auto rule = [&](std::ptrdiff_t above, std::size_t below) {
    std::string line;
    for (std::size_t c = 0; c <= cols; ++c) {
      bool corner = false;
      for (std::size_t cc : {c, c - 1}) {
        if (c == 0 && cc == c - 1) continue;
        if (above >= 0 && present(static_cast<std::size_t>(above), cc)) corner = true;
        if (present(below, cc)) corner = true;
      }
      line += corner ? '+' : ' ';
      if (c == cols) break;
      const bool seg = (above >= 0 && present(static_cast<std::size_t>(above), c)) || present(below, c);
      line += seg ? "--" : "  ";
    }
    return rstrip(line) + "\n";
  };
  std::string out;
  for (std::size_t row = 0; row < table.size(); ++row) {
    out += rule(static_cast<std::ptrdiff_t>(row) - 1, row);
    std::string line;
    for (std::size_t c = 0; c <= cols; ++c) {
      const bool bar = present(row, c) || (c > 0 && present(row, c - 1));
      line += bar ? '|' : ' ';
      if (c == cols) break;
      std::string text = table[row][c].text;
      text.resize(2, ' ');
      line += text;
    }
    out += rstrip(line) + "\n";
  }
  out += rule(static_cast<std::ptrdiff_t>(table.size()) - 1, table.size());
  return out;
}

// 180-degree rotation within a block.
bool opposite_free(const PatternSpace& p, Index i, Index j) {
  return p.is_free(p.rows() - 1 - i, p.cols() - 1 - j);
}

std::string mark(bool first, bool second) {
  std::string s;
  if (first) s += '*';
  if (second) s += '+';
  return s;
}

}  // namespace

const char* geometry_name(Geometry g) {
  switch (g) {
    case Geometry::kHomVQ: return "hom(V,Q)";
    case Geometry::kHomVSQ: return "hom(V/S,Q)";
    case Geometry::kHomSVS: return "hom(S,V/S)";
    case Geometry::kHomSQ: return "hom(S,Q)";
    case Geometry::kTwoStepFull: return "two-step-full";
  }
  return "?";
}

PatternSpace::PatternSpace(Index rows, Index cols, Geometry geometry)
    : rows_(rows), cols_(cols), geometry_(geometry), cells_(at(rows * cols), 0) {}

Index PatternSpace::dim() const {
  return static_cast<Index>(std::count(cells_.begin(), cells_.end(), 1));
}

std::vector<int> PatternSpace::column_counts() const {
  std::vector<int> counts(at(cols_), 0);
  for (Index j = 0; j < cols_; ++j) {
    for (Index i = 0; i < rows_; ++i) counts[at(j)] += is_free(i, j) ? 1 : 0;
  }
  return counts;
}

bool PatternSpace::is_young() const {
  const auto counts = column_counts();
  for (Index j = 0; j < cols_; ++j) {
    for (Index i = 0; i < rows_; ++i) {
      if (is_free(i, j) != (i < counts[at(j)])) return false;
    }
    if (j > 0 && counts[at(j - 1)] > counts[at(j)]) return false;
  }
  return true;
}

Subspace<Zp> PatternSpace::to_subspace() const {
  Mat rows = Mat::Zero(dim(), rows_ * cols_);
  Index k = 0;
  for (Index slot = 0; slot < rows_ * cols_; ++slot) {
    if (cells_[at(slot)] != 0) rows(k++, slot) = Zp(1);
  }
  return Subspace<Zp>::span_of_rows(std::move(rows));
}

PatternSpace hat_X(const Partition& lambda) {
  PatternSpace p(lambda.cap(), lambda.rows(), Geometry::kHomVQ);
  for (Index j = 0; j < lambda.rows(); ++j) {
    for (Index i = 0; i < lambda[at(j)]; ++i) p.set_free(i, j);
  }
  return p;
}

TwoStepModel hat_Y(const StepString& sigma, int d, int r, int n) {
  if (!(0 <= d && d <= r && r <= n) || sigma.size() != n || sigma.count(0) != n - r ||
      sigma.count(1) != r - d || sigma.count(2) != d) {
    throw std::invalid_argument("hat_Y: " + sigma.to_string() + " does not have shape (" +
                                std::to_string(d) + "," + std::to_string(r) + "," +
                                std::to_string(n) + ")");
  }
  TwoStepModel y;
  y.d = d;
  y.r = r;
  y.n = n;
  for (int letter = 0; letter <= 2; ++letter) {
    for (int l = 0; l < n; ++l) {
      if (sigma[at(l)] == letter) y.eta.push_back(l + 1);
    }
  }
  y.pattern = PatternSpace(n, n, Geometry::kTwoStepFull);
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      if (y.in_tangent(j, k) && y.eta[at(j)] < y.eta[at(k)]) y.pattern.set_free(j, k);
    }
  }
  return y;
}

TwoStepBlocks blocks_of(const TwoStepModel& y) {
  const int q = y.n - y.r;
  const int vs = y.r - y.d;
  TwoStepBlocks b{PatternSpace(q, vs, Geometry::kHomVSQ), PatternSpace(q, y.d, Geometry::kHomSQ),
                  PatternSpace(vs, y.d, Geometry::kHomSVS)};
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < vs; ++j) b.quotient.set_free(i, j, y.pattern.is_free(i, q + j));
    for (int j = 0; j < y.d; ++j) b.top.set_free(i, j, y.pattern.is_free(i, q + vs + j));
  }
  for (int i = 0; i < vs; ++i) {
    for (int j = 0; j < y.d; ++j) b.fiber.set_free(i, j, y.pattern.is_free(q + i, q + vs + j));
  }
  return b;
}

FlagModel::FlagModel(Mat basis) : basis_(std::move(basis)) {
  if (basis_.rows() != basis_.cols() || rank(basis_) != basis_.cols()) {
    throw std::invalid_argument("FlagModel: basis must be square and invertible");
  }
}

FlagModel FlagModel::standard(Index m) { return FlagModel(Mat::Identity(m, m)); }

FlagModel FlagModel::reversed(Index m) {
  Mat b = Mat::Zero(m, m);
  for (Index l = 0; l < m; ++l) b(m - 1 - l, l) = Zp(1);
  return FlagModel(std::move(b));
}

FlagModel FlagModel::random(Index m, Rng& rng) { return FlagModel(random_invertible(m, rng)); }

Subspace<Zp> FlagModel::step(Index l) const {
  return Subspace<Zp>::span_of_columns(basis_.leftCols(l));
}

Subspace<Zp> X_from_flags(const Partition& lambda, const FlagModel& src, const FlagModel& dst) {
  const Index r = lambda.rows();
  const Index cap = lambda.cap();
  if (src.dim() != r || dst.dim() != cap) {
    throw std::invalid_argument("X_from_flags: flag dimensions do not match the rectangle");
  }
  const Mat dst_inv = inverse(dst.basis());
  const Index constraints = r * cap - lambda.weight();
  Mat system = Mat::Zero(constraints, r * cap);
  Index row = 0;
  for (Index l = 0; l < r; ++l) {
    const auto a = src.basis().col(l);
    for (Index m = lambda[at(l)]; m < cap; ++m, ++row) {
      for (Index j = 0; j < r; ++j) {
        if (a(j) == Zp(0)) continue;
        for (Index i = 0; i < cap; ++i) system(row, hom_index(i, j, cap)) = dst_inv(m, i) * a(j);
      }
    }
  }
  return nullspace(system);
}

std::vector<GenericTangent> generic_tangents(std::span<const Partition> lambdas, std::uint64_t seed) {
  std::vector<GenericTangent> out;
  out.reserve(lambdas.size());
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    const Partition& lambda = lambdas[i];
    if (lambda.rows() != lambdas.front().rows() || lambda.cap() != lambdas.front().cap()) {
      throw std::invalid_argument("generic_tangents: partitions live in different rectangles");
    }
    Rng rng(Rng::derive(seed, i));
    FlagModel source = FlagModel::random(lambda.rows(), rng);
    FlagModel target = FlagModel::random(lambda.cap(), rng);
    Subspace<Zp> space = X_from_flags(lambda, source, target);
    out.push_back({std::move(source), std::move(target), std::move(space)});
  }
  return out;
}

Index expected_intersection_dim(std::span<const Index> dims, Index ambient) {
  const Index total = std::accumulate(dims.begin(), dims.end(), Index{0});
  return total - static_cast<Index>(dims.size() - 1) * ambient;
}

bool is_transverse(std::span<const Index> dims, Index ambient, Index achieved) {
  const Index expected = expected_intersection_dim(dims, ambient);
  return expected >= 0 && achieved == expected;
}

TransversalityVerdict transversality_verdict(std::span<const Partition> lambdas, std::uint64_t seed,
                                             int trials) {
  if (lambdas.empty()) throw std::invalid_argument("transversality_verdict: no partitions");
  if (trials < 1) throw std::invalid_argument("transversality_verdict: trials must be >= 1");
  const Index ambient = Index{lambdas.front().rows()} * lambdas.front().cap();
  std::vector<Index> dims;
  for (const auto& lambda : lambdas) dims.push_back(lambda.weight());

  TransversalityVerdict v;
  v.ambient_dim = ambient;
  v.expected_dim = expected_intersection_dim(dims, ambient);
  v.sum_codims = static_cast<Index>(dims.size()) * ambient -
                 std::accumulate(dims.begin(), dims.end(), Index{0});
  v.achieved_dim = ambient;
  for (int t = 0; t < trials; ++t) {
    const auto tangents = generic_tangents(lambdas, Rng::derive(seed, static_cast<std::uint64_t>(t)));
    std::vector<Subspace<Zp>> spaces;
    for (const auto& g : tangents) spaces.push_back(g.space);
    v.achieved_dim = std::min(v.achieved_dim, intersect<Zp>(spaces).dim());
  }
  v.nonzero = is_transverse(dims, ambient, v.achieved_dim);
  return v;
}

Vec quotient_coordinates(const Subspace<Zp>& v, const Vec& x) {
  Vec y = x;
  const auto& pivots = v.pivots();
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const Zp c = y(pivots[i]);
    if (c != Zp(0)) y -= c * v.basis().row(static_cast<Index>(i)).transpose();
  }
  Vec out(v.codim());
  Index k = 0;
  std::size_t p = 0;
  for (Index col = 0; col < v.ambient_dim(); ++col) {
    if (p < pivots.size() && pivots[p] == col) {
      ++p;
      continue;
    }
    out(k++) = y(col);
  }
  return out;
}

InducedFlags induced_flag(const FlagModel& flag, const Subspace<Zp>& v) {
  const Index m = flag.dim();
  if (v.ambient_dim() != m) throw std::invalid_argument("induced_flag: dimension mismatch");

  Mat sub(v.dim(), v.dim());
  Index kept = 0;
  Subspace<Zp> reached(m);
  for (Index l = 1; l <= m && kept < v.dim(); ++l) {
    const Subspace<Zp> meet = intersect(v, flag.step(l));
    if (meet.dim() == reached.dim()) continue;
    for (Index i = 0; i < meet.dim(); ++i) {
      const Vec w = meet.basis().row(i).transpose();
      if (!reached.contains(w)) {
        sub.col(kept++) = v.coordinates(w);
        break;
      }
    }
    reached = meet;
  }

  Mat quot(v.codim(), v.codim());
  Index qkept = 0;
  Mat images(0, v.codim());
  for (Index l = 0; l < m && qkept < v.codim(); ++l) {
    const Vec q = quotient_coordinates(v, flag.basis().col(l));
    Mat trial(images.rows() + 1, v.codim());
    trial << images, q.transpose();
    if (rank(trial) > images.rows()) {
      images = trial;
      quot.col(qkept++) = q;
    }
  }
  return {FlagModel(std::move(sub)), FlagModel(std::move(quot))};
}

StepString schubert_position(const Subspace<Zp>& v, const FlagModel& flag) {
  if (v.ambient_dim() != flag.dim()) throw std::invalid_argument("schubert_position: dimension mismatch");
  std::vector<int> letters;
  Index previous = 0;
  for (Index l = 1; l <= flag.dim(); ++l) {
    const Index now = intersect(v, flag.step(l)).dim();
    letters.push_back(static_cast<int>(now - previous));
    previous = now;
  }
  return StepString(std::move(letters), 1);
}

Partition quotient_pattern(const Partition& lambda, const StepString& rho) {
  if (rho.size() != lambda.rows()) throw std::invalid_argument("quotient_pattern: length mismatch");
  std::vector<int> parts;
  for (int k = 0; k < rho.size(); ++k) {
    if (rho[at(k)] == 0) parts.push_back(lambda[at(k)]);
  }
  return Partition(std::move(parts), lambda.cap());
}

TwoStepCoordinates::TwoStepCoordinates(int d, int r, int n)
    : d_(d), r_(r), n_(n), lookup_(at(Index{n} * n), -1) {
  if (!(0 <= d && d <= r && r <= n)) throw std::invalid_argument("TwoStepCoordinates: need 0<=d<=r<=n");
  auto block = [&](int j) { return j < n - r ? 0 : (j < n - d ? 1 : 2); };
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      if (block(j) < block(k)) {
        lookup_[at(Index{k} * n + j)] = static_cast<Index>(cells_.size());
        cells_.emplace_back(j, k);
      }
    }
  }
}

Index TwoStepCoordinates::index_of(int j, int k) const { return lookup_[at(Index{k} * n_ + j)]; }

std::vector<Index> TwoStepCoordinates::block_cells(int which) const {
  static constexpr int kRow[] = {0, 0, 1};
  static constexpr int kCol[] = {1, 2, 2};
  auto block = [&](int j) { return j < n_ - r_ ? 0 : (j < n_ - d_ ? 1 : 2); };
  std::vector<Index> out;
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    if (block(cells_[c].first) == kRow[which] && block(cells_[c].second) == kCol[which]) {
      out.push_back(static_cast<Index>(c));
    }
  }
  return out;
}

Subspace<Zp> generic_Y(const StepString& sigma, const TwoStepCoordinates& coords, Rng& rng) {
  const TwoStepModel hat = hat_Y(sigma, coords.d(), coords.r(), coords.n());
  const int n = coords.n();
  Mat p;
  do {
    p = Mat::Zero(n, n);
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) {
        if (hat.block(j) >= hat.block(k)) p(j, k) = rng.element();
      }
    }
  } while (rank(p) < n);
  const Mat p_inv = inverse(p);

  Mat rows = Mat::Zero(hat.pattern.dim(), coords.dim());
  Index row = 0;
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      if (!hat.pattern.is_free(j, k)) continue;
      // p E_jk p^{-1} = p[:, j] * p^{-1}[k, :], read on g/p.
      for (Index c = 0; c < coords.dim(); ++c) {
        const auto [a, b] = coords.cells()[at(c)];
        rows(row, c) = p(a, j) * p_inv(k, b);
      }
      ++row;
    }
  }
  return Subspace<Zp>::span_of_rows(std::move(rows));
}

Subspace<Zp> restrict_to_cells(const Subspace<Zp>& y, const std::vector<Index>& cells) {
  Mat coordinate = Mat::Zero(static_cast<Index>(cells.size()), y.ambient_dim());
  for (std::size_t c = 0; c < cells.size(); ++c) coordinate(static_cast<Index>(c), cells[c]) = Zp(1);
  const Subspace<Zp> meet = intersect(y, Subspace<Zp>::span_of_rows(std::move(coordinate)));
  Mat rows(meet.dim(), static_cast<Index>(cells.size()));
  for (std::size_t c = 0; c < cells.size(); ++c) rows.col(static_cast<Index>(c)) = meet.basis().col(cells[c]);
  return Subspace<Zp>::span_of_rows(std::move(rows));
}

Subspace<Zp> project_to_cells(const Subspace<Zp>& y, const std::vector<Index>& cells) {
  Mat rows(y.dim(), static_cast<Index>(cells.size()));
  for (std::size_t c = 0; c < cells.size(); ++c) rows.col(static_cast<Index>(c)) = y.basis().col(cells[c]);
  return Subspace<Zp>::span_of_rows(std::move(rows));
}

std::string render_pattern(const PatternSpace& p) {
  if (p.rows() == 0 || p.cols() == 0) return "(empty " + std::to_string(p.rows()) + "x" +
                                              std::to_string(p.cols()) + " grid)\n";
  std::string out;
  for (Index i = 0; i < p.rows(); ++i) {
    for (Index j = 0; j < p.cols(); ++j) {
      if (j > 0) out += ' ';
      out += p.is_free(i, j) ? '*' : '0';
    }
    out += '\n';
  }
  return out;
}

std::string render_two_step(const TwoStepModel& y) {
  std::string out;
  for (int j = 0; j < y.n; ++j) {
    for (int k = 0; k < y.n; ++k) {
      if (k > 0) out += ' ';
      out += !y.in_tangent(j, k) ? '.' : (y.pattern.is_free(j, k) ? '*' : '0');
    }
    out += '\n';
  }
  return out;
}

std::string render_grassmann_pair(const Partition& a, const Partition& b) {
  if (a.rows() != b.rows() || a.cap() != b.cap()) {
    throw std::invalid_argument("render_grassmann_pair: different rectangles");
  }
  const PatternSpace pa = hat_X(a);
  const PatternSpace pb = hat_X(b);
  Table table(at(a.cap()), std::vector<Cell>(at(a.rows())));
  for (Index i = 0; i < a.cap(); ++i) {
    for (Index j = 0; j < a.rows(); ++j) {
      table[at(i)][at(j)] = {true, mark(pa.is_free(i, j), opposite_free(pb, i, j))};
    }
  }
  return render_table(table);
}

std::string render_lifted_pair(const StepString& a, const StepString& b, int d, int r, int n) {
  const TwoStepBlocks ba = blocks_of(hat_Y(a, d, r, n));
  const TwoStepBlocks bb = blocks_of(hat_Y(b, d, r, n));
  const int q = n - r;
  const int vs = r - d;
  Table table(at(q + vs), std::vector<Cell>(at(r)));
  for (int i = 0; i < q + vs; ++i) {
    for (int c = 0; c < r; ++c) {
      Cell& cell = table[at(i)][at(c)];
      if (i < q && c < vs) {
        cell = {true, mark(ba.quotient.is_free(i, c), opposite_free(bb.quotient, i, c))};
      } else if (i < q) {
        cell = {true, mark(ba.top.is_free(i, c - vs), opposite_free(bb.top, i, c - vs))};
      } else if (c >= vs) {
        cell = {true, mark(ba.fiber.is_free(i - q, c - vs), opposite_free(bb.fiber, i - q, c - vs))};
      }
    }
  }
  return render_table(table);
}

}  // namespace hornkit

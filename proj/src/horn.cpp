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

#include "hornkit/horn.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>

namespace hornkit {
namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

void check_rectangle(std::span<const Partition> lambdas, int r, int n, const char* who) {
  if (lambdas.empty()) throw std::invalid_argument(std::string(who) + ": no partitions");
  for (const auto& lambda : lambdas) {
    if (lambda.rows() != r || lambda.cap() != n - r) {
      throw std::invalid_argument(std::string(who) + ": " + lambda.to_string() +
                                  " is not in Λ(" + std::to_string(r) + "," +
                                  std::to_string(n - r) + ")");
    }
  }
}

std::vector<int> memo_key(const std::vector<Partition>& lambdas, int r, int cap) {
  std::vector<Partition> sorted = lambdas;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> key{r, cap, static_cast<int>(sorted.size())};
  for (const auto& p : sorted) key.insert(key.end(), p.parts().begin(), p.parts().end());
  return key;
}

bool nonvanishing(const std::vector<Partition>& lambdas, int r, int cap, HornMemo& memo);

// Nonvanishing μ-tuples at every level d = 1..r for products of s classes
// in Gr(r, n), in enumeration order.
std::shared_ptr<const HornMemo::Levels> levels_for(int r, int s, HornMemo& memo) {
  if (auto hit = memo.find_levels(r, s)) return hit;
  HornMemo::Levels levels;
  for (int d = 1; d <= r; ++d) {
    const int box = r - d;
    const std::vector<Partition> shapes = partitions_in_box(d, box);
    // Degree bound: Σ|μ^i| >= (s-1) d (r-d) is necessary.
    const long need = static_cast<long>(s - 1) * d * box;
    const long top = static_cast<long>(d) * box;
    std::vector<Partition> tuple;
    std::function<void(int, long)> walk = [&](int i, long weight) {
      if (weight + (s - i) * top < need) return;
      if (i == s) {
        if (nonvanishing(tuple, d, box, memo)) levels.push_back({d, tuple});
        return;
      }
      for (const auto& mu : shapes) {
        tuple.push_back(mu);
        walk(i + 1, weight + mu.weight());
        tuple.pop_back();
      }
    };
    walk(0, 0);
  }
  return memo.publish_levels(r, s, std::move(levels));
}

// First violated inequality, if any.
std::optional<Violation> first_violation(const std::vector<Partition>& lambdas, int r, int cap,
                                         HornMemo& memo) {
  if (r == 0 || cap == 0) return std::nullopt;
  const int s = static_cast<int>(lambdas.size());
  const auto levels = levels_for(r, s, memo);
  for (const auto& level : *levels) {
    HornInequality ineq = make_inequality(r, r + cap, level.mus);
    const long slack = evaluate(ineq, lambdas);
    if (slack < 0) return Violation{std::move(ineq), slack};
  }
  return std::nullopt;
}

bool nonvanishing(const std::vector<Partition>& lambdas, int r, int cap, HornMemo& memo) {
  if (r == 0 || cap == 0) return true;
  std::vector<int> key = memo_key(lambdas, r, cap);
  if (auto hit = memo.find_nonvanishing(key)) return *hit;
  const bool value = !first_violation(lambdas, r, cap, memo).has_value();
  memo.publish_nonvanishing(std::move(key), value);
  return value;
}

using Shape = std::vector<int>;  // weakly decreasing, padded to the row count

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max()
                                                           : a + b;
}

// Adds c * s_alpha * s_beta, truncated to the rows x cols box, into `out`.
// LR tableaux are built one letter at a time as horizontal strips; the
// lattice condition on the reverse reading word becomes, for letter i+1 in
// row j: #(i+1 in rows <= j) <= #(i in rows < j).
class LrMultiplier {
 public:
  LrMultiplier(int rows, int cols) : rows_(rows), cols_(cols) {}

  void multiply(const Shape& alpha, const Shape& beta, std::uint64_t c,
                std::map<Shape, std::uint64_t>& out) {
    beta_.clear();
    for (int b : beta) {
      if (b > 0) beta_.push_back(b);
    }
    if (static_cast<int>(beta_.size()) > rows_) return;
    counts_.assign(beta_.size(), std::vector<int>(at(rows_), 0));
    coeff_ = c;
    out_ = &out;
    place_letter(0, alpha);
  }

 private:
  void place_letter(std::size_t letter, const Shape& shape) {
    if (letter == beta_.size()) {
      auto& slot = (*out_)[shape];
      slot = saturating_add(slot, coeff_);
      return;
    }
    Shape next = shape;
    place_row(letter, 0, beta_[letter], shape, next, 0, 0);
  }

  // cum_this: letters `letter` in rows < row; cum_prev: letters letter-1 in rows < row.
  void place_row(std::size_t letter, int row, int remaining, const Shape& old, Shape& next,
                 int cum_this, int cum_prev) {
    if (remaining == 0) {
      for (int j = row; j < rows_; ++j) counts_[letter][at(j)] = 0;
      place_letter(letter + 1, next);
      return;
    }
    if (row == rows_) return;
    const int ceiling = row == 0 ? cols_ : old[at(row - 1)];
    int most = std::min(remaining, ceiling - old[at(row)]);
    if (letter > 0) most = std::min(most, cum_prev - cum_this);
    const int prev_here = letter > 0 ? counts_[letter - 1][at(row)] : 0;
    for (int a = most; a >= 0; --a) {
      counts_[letter][at(row)] = a;
      next[at(row)] = old[at(row)] + a;
      place_row(letter, row + 1, remaining - a, old, next, cum_this + a, cum_prev + prev_here);
    }
    next[at(row)] = old[at(row)];
    counts_[letter][at(row)] = 0;
  }

  int rows_;
  int cols_;
  std::vector<int> beta_;
  std::vector<std::vector<int>> counts_;
  std::uint64_t coeff_ = 0;
  std::map<Shape, std::uint64_t>* out_ = nullptr;
};

Shape complement_shape(const Partition& lambda) {
  Shape s;
  for (int part : lambda.parts()) s.push_back(lambda.cap() - part);
  return s;
}

}  // namespace

HornInequality make_inequality(int r, int n, std::vector<Partition> mus) {
  if (mus.empty()) throw std::invalid_argument("make_inequality: empty tuple");
  HornInequality ineq;
  ineq.d = mus.front().rows();
  ineq.r = r;
  ineq.n = n;
  for (const auto& mu : mus) {
    if (mu.rows() != ineq.d || mu.cap() != r - ineq.d) {
      throw std::invalid_argument("make_inequality: " + mu.to_string() + " not in Λ(" +
                                  std::to_string(ineq.d) + "," + std::to_string(r - ineq.d) + ")");
    }
    std::vector<int> idx;
    for (int k = 0; k < mu.rows(); ++k) idx.push_back(mu[at(k)] + k + 1);
    ineq.indices.push_back(std::move(idx));
  }
  ineq.rhs = static_cast<long>(mus.size() - 1) * ineq.d * (n - r);
  ineq.mus = std::move(mus);
  return ineq;
}

const char* method_name(Method m) {
  switch (m) {
    case Method::kHornRecursion: return "horn-recursion";
    case Method::kLrOracle: return "lr-oracle";
    case Method::kNumeric: return "numeric";
  }
  return "?";
}

std::optional<bool> HornMemo::find_nonvanishing(const std::vector<int>& key) const {
  std::shared_lock lock(mutex_);
  auto it = nonvanishing_.find(key);
  if (it == nonvanishing_.end()) return std::nullopt;
  return it->second;
}

void HornMemo::publish_nonvanishing(std::vector<int> key, bool value) {
  std::unique_lock lock(mutex_);
  nonvanishing_.emplace(std::move(key), value);
}

std::shared_ptr<const HornMemo::Levels> HornMemo::find_levels(int r, int s) const {
  std::shared_lock lock(mutex_);
  auto it = levels_.find({r, s});
  return it == levels_.end() ? nullptr : it->second;
}

std::shared_ptr<const HornMemo::Levels> HornMemo::publish_levels(int r, int s, Levels levels) {
  std::unique_lock lock(mutex_);
  auto [it, inserted] =
      levels_.emplace(std::make_pair(r, s), std::make_shared<const Levels>(std::move(levels)));
  return it->second;
}

std::size_t HornMemo::size() const {
  std::shared_lock lock(mutex_);
  return nonvanishing_.size() + levels_.size();
}

HornMemo& default_memo() {
  static HornMemo memo;
  return memo;
}

void for_each_horn_inequality(int r, int n, int s, HornMemo& memo,
                              const std::function<bool(const HornInequality&)>& visit) {
  if (!(0 < r && r < n)) throw std::invalid_argument("enumerate_horn: need 0 < r < n");
  if (s < 1) throw std::invalid_argument("enumerate_horn: need s >= 1");
  const auto levels = levels_for(r, s, memo);
  for (const auto& level : *levels) {
    if (!visit(make_inequality(r, n, level.mus))) return;
  }
}

std::vector<HornInequality> enumerate_horn(int r, int n, int s, HornMemo& memo, std::size_t limit) {
  std::vector<HornInequality> out;
  for_each_horn_inequality(r, n, s, memo, [&](const HornInequality& ineq) {
    out.push_back(ineq);
    return limit == 0 || out.size() < limit;
  });
  return out;
}

std::vector<HornInequality> enumerate_horn(int r, int n, int s, std::size_t limit) {
  return enumerate_horn(r, n, s, default_memo(), limit);
}

long evaluate(const HornInequality& ineq, std::span<const Partition> lambdas) {
  if (lambdas.size() != ineq.indices.size()) {
    throw std::out_of_range("evaluate: inequality has " + std::to_string(ineq.indices.size()) +
                            " factors, got " + std::to_string(lambdas.size()));
  }
  long lhs = 0;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    for (int index : ineq.indices[i]) {
      if (index < 1 || index > lambdas[i].rows()) {
        throw std::out_of_range("evaluate: index " + std::to_string(index) + " outside [1, " +
                                std::to_string(lambdas[i].rows()) + "]");
      }
      lhs += lambdas[i][at(index - 1)];
    }
  }
  return lhs - ineq.rhs;
}

Verdict horn_verdict(std::span<const Partition> lambdas, int r, int n, HornMemo& memo) {
  check_rectangle(lambdas, r, n, "horn_verdict");
  const std::vector<Partition> tuple(lambdas.begin(), lambdas.end());
  Verdict v;
  v.method = Method::kHornRecursion;
  v.violated = first_violation(tuple, r, n - r, memo);
  v.nonzero = !v.violated.has_value();
  memo.publish_nonvanishing(memo_key(tuple, r, n - r), v.nonzero);
  return v;
}

Verdict horn_verdict(std::span<const Partition> lambdas, int r, int n) {
  return horn_verdict(lambdas, r, n, default_memo());
}

std::map<Partition, std::uint64_t> lr_expand(std::span<const Partition> lambdas, int r, int n) {
  check_rectangle(lambdas, r, n, "lr_oracle");
  const int cap = n - r;
  std::map<Shape, std::uint64_t> current{{complement_shape(lambdas.front()), 1}};
  LrMultiplier multiplier(r, cap);
  for (std::size_t i = 1; i < lambdas.size() && !current.empty(); ++i) {
    const Shape beta = complement_shape(lambdas[i]);
    std::map<Shape, std::uint64_t> next;
    for (const auto& [alpha, c] : current) multiplier.multiply(alpha, beta, c, next);
    current = std::move(next);
  }
  std::map<Partition, std::uint64_t> out;
  for (const auto& [shape, c] : current) {
    std::vector<int> parts;
    for (int row : shape) parts.push_back(cap - row);
    out.emplace(Partition(std::move(parts), cap), c);
  }
  return out;
}

bool lr_oracle(std::span<const Partition> lambdas, int r, int n) {
  return !lr_expand(lambdas, r, n).empty();
}

Verdict numeric_verdict(std::span<const Partition> lambdas, int r, int n, std::uint64_t seed,
                        int trials) {
  check_rectangle(lambdas, r, n, "numeric_verdict");
  Verdict v;
  v.method = Method::kNumeric;
  v.numeric = transversality_verdict(lambdas, seed, trials);
  v.nonzero = v.numeric->nonzero;
  return v;
}

}  // namespace hornkit

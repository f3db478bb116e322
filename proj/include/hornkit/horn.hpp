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

// Horn inequalities, the recursive Horn verdict, and an independent
// Littlewood-Richardson oracle for products of Grassmannian Schubert
// classes. Classes are indexed by weakly increasing partitions in
// Λ(r, n - r) whose weight is the cell dimension, so (n-r, ..., n-r) is
// the identity and (0, ..., 0) the point class.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <utility>
#include <vector>

#include "hornkit/strings.hpp"
#include "hornkit/tangent.hpp"

namespace hornkit {

// Σ_i Σ_k λ^i_{indices[i][k]} >= rhs, one per level d and nonvanishing
// product of the μ^i in H*(Gr(d, r)).
struct HornInequality {
  int d = 0;
  int r = 0;
  int n = 0;
  std::vector<Partition> mus;
  std::vector<std::vector<int>> indices;  // 1-based, μ_k + k
  long rhs = 0;

  friend bool operator==(const HornInequality&, const HornInequality&) = default;
};

// Builds the inequality for λ ∈ Λ(r, n-r) attached to μ-tuple in Λ(d, r-d).
HornInequality make_inequality(int r, int n, std::vector<Partition> mus);

enum class Method { kHornRecursion, kLrOracle, kNumeric };
const char* method_name(Method m);

struct Violation {
  HornInequality inequality;
  long slack = 0;
};

struct Verdict {
  bool nonzero = false;
  Method method = Method::kHornRecursion;
  std::optional<Violation> violated;
  std::optional<TransversalityVerdict> numeric;
};

// Grow-only cache shared by the recursive verdict and the enumerator.
// Entries are published whole under a lock, so concurrent readers never
// observe partial results.
class HornMemo {
 public:
  struct Level {
    int d;
    std::vector<Partition> mus;
  };
  using Levels = std::vector<Level>;

  std::optional<bool> find_nonvanishing(const std::vector<int>& key) const;
  void publish_nonvanishing(std::vector<int> key, bool value);

  std::shared_ptr<const Levels> find_levels(int r, int s) const;
  std::shared_ptr<const Levels> publish_levels(int r, int s, Levels levels);

  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::vector<int>, bool> nonvanishing_;
  std::map<std::pair<int, int>, std::shared_ptr<const Levels>> levels_;
};

// Process-wide memo used by the overloads without an explicit one.
HornMemo& default_memo();

// Visits inequalities in order: d ascending, μ-tuples lexicographic.
// Stops early when `visit` returns false.
void for_each_horn_inequality(int r, int n, int s, HornMemo& memo,
                              const std::function<bool(const HornInequality&)>& visit);

// limit == 0 means all.
std::vector<HornInequality> enumerate_horn(int r, int n, int s, HornMemo& memo,
                                           std::size_t limit = 0);
std::vector<HornInequality> enumerate_horn(int r, int n, int s, std::size_t limit = 0);

// Left side minus right side. Throws std::out_of_range on bad indices.
long evaluate(const HornInequality& ineq, std::span<const Partition> lambdas);

Verdict horn_verdict(std::span<const Partition> lambdas, int r, int n, HornMemo& memo);
Verdict horn_verdict(std::span<const Partition> lambdas, int r, int n);

// Littlewood-Richardson expansion of the product inside Λ(r, n-r), keyed
// by the (weakly increasing) partition of each surviving class.
// Coefficients saturate at UINT64_MAX.
std::map<Partition, std::uint64_t> lr_expand(std::span<const Partition> lambdas, int r, int n);
bool lr_oracle(std::span<const Partition> lambdas, int r, int n);

Verdict numeric_verdict(std::span<const Partition> lambdas, int r, int n, std::uint64_t seed,
                        int trials);

}  // namespace hornkit

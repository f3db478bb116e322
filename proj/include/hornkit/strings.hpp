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

// Partitions and step strings indexing Schubert cells on Grassmannians and
// two-step flag manifolds, with the substring/projection/lift operators
// that relate them.
//
// Conventions: partitions are weakly increasing with parts in [0, cap]; a
// partition with r parts and cap c indexes a cell of dimension |λ| in
// Gr(r, r + c). Its 01-string puts exactly λ_k zeros before the k-th one.
// Reported string positions are 1-based.

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hornkit {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class Partition {
 public:
  Partition() = default;
  Partition(std::vector<int> parts, int cap);

  // "0,1,3,3/4x5" is (0,1,3,3) in the 4x5 rectangle; "/0x4" is empty.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int cap() const { return cap_; }
  int ambient() const { return rows() + cap_; }
  int operator[](std::size_t k) const { return parts_[k]; }
  int weight() const;

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int cap_ = 0;
};

// Word over {0, ..., steps}.
class StepString {
 public:
  StepString() = default;
  StepString(std::vector<int> letters, int steps);

  // Digit word; steps defaults to max(1, largest letter).
  static StepString parse(std::string_view digits, int steps = 0);
  static StepString constant(int letter, int length, int steps);

  const std::vector<int>& letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  int steps() const { return steps_; }
  int operator[](std::size_t l) const { return letters_[l]; }
  int count(int letter) const;

  std::string to_string() const;

  friend auto operator<=>(const StepString&, const StepString&) = default;

 private:
  std::vector<int> letters_;
  int steps_ = 1;
};

// A 012-string together with the base and fiber positions it was lifted
// from: lifted[2] == base and lifted(12) == fiber.
struct LiftCertificate {
  StepString base;
  StepString fiber;
  StepString lifted;
};

StepString partition_to_string(const Partition& lambda);
Partition string_to_partition(const StepString& s);

// σ(uv): keep letters u and v, renamed to 0 and 1.
StepString substring_uv(const StepString& sigma, int u, int v);

// σ[j]: 1 where σ_l > steps - j, else 0.
StepString project_j(const StepString& sigma, int j);

// #{l < l' : σ_l < σ_l'}.
long cell_dimension(const StepString& sigma);

// The 012-string whose k-th nonzero letter is 2 exactly when fiber_k = 1.
StepString lift(const StepString& base, const StepString& fiber);
LiftCertificate make_lift(const StepString& base, const StepString& fiber);

// 1-based positions of the '2's.
std::vector<int> horn_indices(const StepString& sigma);

// All partitions with `rows` parts in [0, cap], lexicographic.
std::vector<Partition> partitions_in_box(int rows, int cap);

// All words over {0..steps} with the given letter counts, lexicographic.
std::vector<StepString> strings_with_counts(const std::vector<int>& counts);

}  // namespace hornkit

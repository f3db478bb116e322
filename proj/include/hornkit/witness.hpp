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

// Kernel descent: for a vanishing product, a generic φ in the intersection
// of tangent spaces has a kernel S whose Schubert positions cut the problem
// down to the Hom(S, Q) block. Repeating until φ = 0 produces a violated
// Horn inequality, whose indices are read off the composed lifted strings.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hornkit/horn.hpp"
#include "hornkit/strings.hpp"
#include "hornkit/tangent.hpp"

namespace hornkit {

struct WitnessLevel {
  int rows = 0;  // r̃; the ambient is Gr(r̃, r̃ + cap)
  int cap = 0;
  std::vector<Partition> lambdas;
  std::uint64_t seed = 0;  // seed of the accepted sample
  int attempts = 0;
  Index rank = 0;
  Index nullity = 0;
  bool terminal = false;
  std::vector<StepString> kernel_positions;  // ρ^i, empty when terminal
  std::vector<StepString> lifted;            // lift(λ^i, ρ^i)
  std::vector<Partition> mus;                // partition of lifted(02)
};

struct WitnessTrace {
  int r = 0;
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<Partition> lambdas;
  std::vector<WitnessLevel> levels;
  std::vector<StepString> certificates;  // '2' positions give the indices
  HornInequality final;
  long slack = 0;
};

struct WitnessOptions {
  int max_retries = 8;
  bool defensive_check = true;
};

class WitnessError : public std::runtime_error {
 public:
  enum class Kind { kNotVanishing, kGenericityExhausted };
  WitnessError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

const char* witness_error_name(WitnessError::Kind kind);

// One draw of a generic φ in the intersection of seeded generic tangents,
// with its kernel and the kernel's positions against each source flag.
struct KernelSample {
  std::vector<GenericTangent> tangents;
  Mat phi;
  Subspace<Zp> kernel;
  std::vector<StepString> positions;
};

KernelSample sample_kernel(std::span<const Partition> lambdas, std::uint64_t seed);

// LR oracle when the rectangle is small, the Horn recursion otherwise.
Verdict defensive_verdict(std::span<const Partition> lambdas, int r, int n);

WitnessTrace find_witness(std::span<const Partition> lambdas, int r, int n, std::uint64_t seed,
                          const WitnessOptions& options = {});

bool verify_witness(const WitnessTrace& trace, std::span<const Partition> lambdas);

// Per-level block tables of the lifted strings (pairs) or the terminal
// Grassmannian patterns.
std::string render_witness(const WitnessTrace& trace);

}  // namespace hornkit

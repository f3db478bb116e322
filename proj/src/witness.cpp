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

#include "hornkit/witness.hpp"

#include <sstream>
#include <utility>

namespace hornkit {
namespace {

constexpr int kLrScale = 30;

// Marker of the '2's of a 012-string.
StepString twos_marker(const StepString& chi) {
  std::vector<int> letters;
  for (int c : chi.letters()) letters.push_back(c == 2 ? 1 : 0);
  return StepString(std::move(letters), 1);
}

std::vector<int> twos_positions(const StepString& chi) {
  std::vector<int> out;
  for (int l = 0; l < chi.size(); ++l) {
    if (chi[static_cast<std::size_t>(l)] == 2) out.push_back(l + 1);
  }
  return out;
}

}  // namespace

KernelSample sample_kernel(std::span<const Partition> lambdas, std::uint64_t seed) {
  if (lambdas.empty()) throw std::invalid_argument("sample_kernel: no partitions");
  const int rows = lambdas.front().rows();
  const int cap = lambdas.front().cap();
  KernelSample out;
  out.tangents = generic_tangents(lambdas, seed);
  std::vector<Subspace<Zp>> spaces;
  for (const auto& g : out.tangents) spaces.push_back(g.space);
  const Subspace<Zp> meet = intersect<Zp>(spaces);
  Rng rng(Rng::derive(seed, lambdas.size()));
  const Vec v = random_element(meet, rng);
  out.phi = Mat::Zero(cap, rows);
  for (Index j = 0; j < rows; ++j) {
    for (Index i = 0; i < cap; ++i) out.phi(i, j) = v(hom_index(i, j, cap));
  }
  out.kernel = nullspace(out.phi);
  for (const auto& g : out.tangents) out.positions.push_back(schubert_position(out.kernel, g.source));
  return out;
}

const char* witness_error_name(WitnessError::Kind kind) {
  switch (kind) {
    case WitnessError::Kind::kNotVanishing: return "not-vanishing";
    case WitnessError::Kind::kGenericityExhausted: return "genericity-exhausted";
  }
  return "?";
}

Verdict defensive_verdict(std::span<const Partition> lambdas, int r, int n) {
  if (r * (n - r) <= kLrScale) {
    Verdict v;
    v.method = Method::kLrOracle;
    v.nonzero = lr_oracle(lambdas, r, n);
    return v;
  }
  return horn_verdict(lambdas, r, n);
}

WitnessTrace find_witness(std::span<const Partition> lambdas, int r, int n, std::uint64_t seed,
                          const WitnessOptions& options) {
  if (lambdas.empty()) throw std::invalid_argument("find_witness: no partitions");
  for (const auto& lambda : lambdas) {
    if (lambda.rows() != r || lambda.cap() != n - r) {
      throw std::invalid_argument("find_witness: " + lambda.to_string() + " is not in Λ(" +
                                  std::to_string(r) + "," + std::to_string(n - r) + ")");
    }
  }
  if (options.defensive_check && defensive_verdict(lambdas, r, n).nonzero) {
    throw WitnessError(WitnessError::Kind::kNotVanishing, "product is nonzero; no violated inequality");
  }

  WitnessTrace trace;
  trace.r = r;
  trace.n = n;
  trace.seed = seed;
  trace.lambdas.assign(lambdas.begin(), lambdas.end());

  const int cap = n - r;
  const std::size_t s = lambdas.size();
  std::vector<Partition> current = trace.lambdas;
  for (int depth = 0;; ++depth) {
    WitnessLevel level;
    level.rows = current.front().rows();
    level.cap = cap;
    level.lambdas = current;
    const std::uint64_t level_seed = Rng::derive(seed, static_cast<std::uint64_t>(depth));

    bool accepted = false;
    KernelSample chosen;
    for (int attempt = 0; attempt < options.max_retries && !accepted; ++attempt) {
      const std::uint64_t a = Rng::derive(level_seed, static_cast<std::uint64_t>(attempt));
      KernelSample first = sample_kernel(current, Rng::derive(a, 0));
      KernelSample second = sample_kernel(current, Rng::derive(a, 1));
      level.attempts = attempt + 1;
      if (first.kernel.dim() != second.kernel.dim() || first.positions != second.positions) continue;
      // An injective φ cannot certify anything; treat it as a bad sample.
      if (first.kernel.dim() == 0) continue;
      level.seed = Rng::derive(a, 0);
      chosen = std::move(first);
      accepted = true;
    }
    if (!accepted) {
      throw WitnessError(WitnessError::Kind::kGenericityExhausted,
                         "kernel positions disagreed in " + std::to_string(options.max_retries) +
                             " attempts at level " + std::to_string(depth + 1));
    }

    level.nullity = chosen.kernel.dim();
    level.rank = level.rows - level.nullity;
    if (level.rank == 0) {
      level.terminal = true;
      trace.levels.push_back(std::move(level));
      break;
    }
    for (std::size_t i = 0; i < s; ++i) {
      const StepString& rho = chosen.positions[i];
      StepString sigma = lift(partition_to_string(current[i]), rho);
      level.mus.push_back(string_to_partition(substring_uv(sigma, 0, 2)));
      level.kernel_positions.push_back(rho);
      level.lifted.push_back(std::move(sigma));
    }
    current = level.mus;
    trace.levels.push_back(std::move(level));
  }

  // Compose from the innermost level outward.
  const int d = trace.levels.back().rows;
  std::vector<StepString> chi(s, lift(StepString::constant(1, d, 1), StepString::constant(1, d, 1)));
  for (auto it = trace.levels.rbegin() + 1; it != trace.levels.rend(); ++it) {
    for (std::size_t i = 0; i < s; ++i) chi[i] = lift(it->kernel_positions[i], twos_marker(chi[i]));
  }
  trace.certificates = chi;

  std::vector<Partition> mus;
  for (const auto& c : chi) mus.push_back(string_to_partition(twos_marker(c)));
  trace.final = make_inequality(r, n, std::move(mus));
  trace.slack = evaluate(trace.final, lambdas);
  return trace;
}

bool verify_witness(const WitnessTrace& trace, std::span<const Partition> lambdas) {
  const HornInequality& f = trace.final;
  if (f.r != trace.r || f.n != trace.n || f.mus.size() != lambdas.size()) return false;
  if (f.indices.size() != lambdas.size() || trace.certificates.size() != lambdas.size()) return false;
  for (const auto& lambda : lambdas) {
    if (lambda.rows() != f.r || lambda.cap() != f.n - f.r) return false;
  }
  for (const auto& mu : f.mus) {
    if (mu.rows() != f.d || mu.cap() != f.r - f.d) return false;
  }
  try {
    if (make_inequality(f.r, f.n, f.mus) != f) return false;
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      const StepString& c = trace.certificates[i];
      if (c.size() != f.r) return false;
      if (twos_positions(c) != f.indices[i]) return false;
    }
    const long slack = evaluate(f, lambdas);
    if (slack >= 0 || slack != trace.slack) return false;
    if (f.d < f.r && !lr_oracle(f.mus, f.d, f.r)) return false;
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

std::string render_witness(const WitnessTrace& trace) {
  std::ostringstream out;
  for (std::size_t l = 0; l < trace.levels.size(); ++l) {
    const WitnessLevel& level = trace.levels[l];
    const int n = level.rows + level.cap;
    out << "level " << l + 1 << ": Gr(" << level.rows << "," << n << ") rank " << level.rank
        << " nullity " << level.nullity << (level.terminal ? " terminal" : "") << "\n";
    if (!level.terminal) {
      out << "kernel positions:";
      for (const auto& rho : level.kernel_positions) out << " " << rho.to_string();
      out << "\nlifted:";
      for (const auto& sigma : level.lifted) out << " " << sigma.to_string();
      out << "\n";
    }
    const std::size_t s = level.lambdas.size();
    if (s == 2) {
      out << render_grassmann_pair(level.lambdas[0], level.lambdas[1]);
      if (!level.terminal) {
        out << "\n"
            << render_lifted_pair(level.lifted[0], level.lifted[1], static_cast<int>(level.nullity),
                                  level.rows, n);
      }
    } else {
      for (std::size_t i = 0; i < s; ++i) {
        out << (level.terminal
                    ? render_pattern(hat_X(level.lambdas[i]))
                    : render_two_step(hat_Y(level.lifted[i], static_cast<int>(level.nullity),
                                            level.rows, n)));
        if (i + 1 < s) out << "\n";
      }
    }
    out << "\n";
  }
  out << "inequality:";
  for (std::size_t i = 0; i < trace.final.indices.size(); ++i) {
    out << (i == 0 ? " " : " + ");
    for (std::size_t k = 0; k < trace.final.indices[i].size(); ++k) {
      out << (k == 0 ? "" : " + ") << "l" << i + 1 << "_" << trace.final.indices[i][k];
    }
  }
  out << " >= " << trace.final.rhs << " (slack " << trace.slack << ")\n";
  return out.str();
}

}  // namespace hornkit

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

// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "hornkit/cli.hpp"
#include "hornkit/horn.hpp"
#include "hornkit/serialize.hpp"
#include "hornkit/strings.hpp"
#include "hornkit/tangent.hpp"
#include "hornkit/witness.hpp"

using namespace hornkit;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void expect(Outcome& o, bool ok, const std::string& what) {
  if (!ok && o.pass) o.detail = "failed: " + what;
  o.pass = o.pass && ok;
}

Json cli_json(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out, err;
  const int c = run_cli(args, out, err);
  if (code) *code = c;
  return Json::parse(out.str());
}

std::string cli_text(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  run_cli(args, out, err);
  return out.str();
}

void for_each_tuple(const std::vector<Partition>& box, int s,
                    const std::function<void(const std::vector<Partition>&)>& visit) {
  std::vector<Partition> tuple;
  std::function<void()> rec = [&] {
    if (static_cast<int>(tuple.size()) == s) {
      visit(tuple);
      return;
    }
    for (const auto& p : box) {
      tuple.push_back(p);
      rec();
      tuple.pop_back();
    }
  };
  rec();
}

struct Sweep {
  int r, cap, s;
};
const std::vector<Sweep> kSweeps{{2, 2, 3}, {2, 2, 2}, {2, 3, 2}, {3, 3, 2}};

const std::vector<std::string> kCheck1{"check", "0,1,3,3/4x5 ; 3,3,3,5/4x5", "--method", "all", "--seed", "0"};
const std::vector<std::string> kWitness1{"witness", "0,3,3/3x4 ; 1,3,3/3x4", "--seed", "0"};
const std::vector<std::string> kWitness2{"witness", "0,2,3,3,3,4/6x4 ; 1,1,3,3,3,3/6x4", "--seed", "0"};

Outcome criterion1() {
  Outcome o;
  const std::vector<Partition> pair{Partition::parse("0,1,3,3/4x5"), Partition::parse("3,3,3,5/4x5")};
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto t = generic_tangents(pair, seed);
    const Subspace<Zp> both = intersect(t[0].space, t[1].space);
    expect(o, both.dim() == 2 && both.codim() == 18, "intersection dim 2 / codim 18");
    const TransversalityVerdict v = transversality_verdict(pair, seed, 3);
    expect(o, v.ambient_dim - v.expected_dim == 19, "expected codim 19");
    expect(o, !v.nonzero, "numeric verdict zero");
  }
  expect(o, !horn_verdict(pair, 4, 9).nonzero, "horn verdict zero");
  expect(o, !lr_oracle(pair, 4, 9), "lr oracle zero");
  int code = -1;
  const Json j = cli_json(kCheck1, &code);
  expect(o, code == exit_code::kZero && j["agree"] == true, "cli check --method all agrees on zero");
  if (o.pass) o.detail = "dim 2, codim 18 vs 19 over 6 seeds; horn/lr/numeric all zero";
  return o;
}

Outcome witness_example(const std::string& classes, const std::vector<std::string>& kernel,
                        const std::vector<std::string>& certs, const Json& indices) {
  Outcome o;
  for (int seed = 0; seed < 5; ++seed) {
    int code = -1;
    const Json j = cli_json({"witness", classes, "--seed", std::to_string(seed)}, &code);
    expect(o, code == exit_code::kOk && j["verified"] == true, "witness verified");
    const Json& t = j["trace"];
    expect(o, t["levels"][0]["kernel_positions"] == Json(kernel), "level-1 kernel positions");
    expect(o, t["certificates"] == Json(certs), "composed strings");
    expect(o, t["final"]["indices"] == indices, "final indices");
    expect(o, t["final"]["rhs"] == 8, "rhs 8");
    expect(o, t["slack"] == -1, "slack -1");
  }
  return o;
}

Outcome criterion2() {
  Outcome o = witness_example("0,3,3/3x4 ; 1,3,3/3x4", {"101", "101"}, {"202", "202"},
                              Json::parse("[[1,3],[1,3]]"));
  if (o.pass) o.detail = "kernel (101,101), indices ({1,3},{1,3}), rhs 8, slack -1 over 5 seeds";
  return o;
}

Outcome criterion3() {
  Outcome o = witness_example("0,2,3,3,3,4/6x4 ; 1,1,3,3,3,3/6x4", {"100110", "010011"},
                              {"200120", "020012"}, Json::parse("[[1,5],[2,6]]"));
  if (o.pass) {
    o.detail = "kernel (100110,010011), strings (200120,020012), indices ({1,5},{2,6}), rhs 8, slack -1 over 5 seeds";
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::ostringstream detail;
  for (const Sweep& sw : kSweeps) {
    int tuples = 0, zeros = 0;
    for_each_tuple(partitions_in_box(sw.r, sw.cap), sw.s, [&](const std::vector<Partition>& t) {
      const int n = sw.r + sw.cap;
      const bool lr = lr_oracle(t, sw.r, n);
      const bool horn = horn_verdict(t, sw.r, n).nonzero;
      const bool num = numeric_verdict(t, sw.r, n, 0, 3).nonzero;
      expect(o, horn == lr && num == lr, "three-way agreement");
      ++tuples;
      zeros += !lr;
    });
    detail << "Λ(" << sw.r << "," << sw.cap << ")^" << sw.s << ": " << tuples << " tuples, " << zeros
           << " zero; ";
  }
  if (o.pass) o.detail = detail.str() + "all agree";
  return o;
}

Outcome criterion5() {
  Outcome o;
  int witnessed = 0;
  for (const Sweep& sw : kSweeps) {
    for_each_tuple(partitions_in_box(sw.r, sw.cap), sw.s, [&](const std::vector<Partition>& t) {
      const int n = sw.r + sw.cap;
      if (lr_oracle(t, sw.r, n)) return;
      try {
        const WitnessTrace w = find_witness(t, sw.r, n, 0);
        expect(o, verify_witness(w, t), "verify_witness");
      } catch (const std::exception& e) {
        expect(o, false, std::string("find_witness threw: ") + e.what());
      }
      ++witnessed;
    });
  }
  if (o.pass) o.detail = std::to_string(witnessed) + " zero tuples certified and verified";
  return o;
}

Outcome criterion6() {
  Outcome o;
  long strings = 0;
  for (int n = 1; n <= 9; ++n) {
    for (int r = 0; r <= n; ++r) {
      for (int d = 0; d <= r; ++d) {
        for (const auto& w : strings_with_counts({n - r, r - d, d})) {
          const StepString sigma(w.letters(), 2);
          ++strings;
          const StepString s01 = substring_uv(sigma, 0, 1);
          const StepString s02 = substring_uv(sigma, 0, 2);
          const StepString s12 = substring_uv(sigma, 1, 2);
          expect(o, cell_dimension(sigma) == cell_dimension(s01) + cell_dimension(s02) + cell_dimension(s12),
                 "block additivity");

          const StepString base = project_j(sigma, 2);
          const Partition lambda = string_to_partition(base);
          const Partition mu = string_to_partition(s12);
          long sum = 0;
          for (int k = 0; k < mu.rows(); ++k) {
            sum += lambda[static_cast<std::size_t>(mu[static_cast<std::size_t>(k)] + k)];
          }
          expect(o, string_to_partition(s02).weight() == sum, "top-block identity");

          const StepString lifted = lift(base, s12);
          expect(o, lifted == sigma, "lift of projections");
          expect(o, project_j(lifted, 2) == base && substring_uv(lifted, 1, 2) == s12, "projections of lift");

          const TwoStepModel y = hat_Y(sigma, d, r, n);
          expect(o, y.pattern.dim() == cell_dimension(sigma), "hat_Y star count");
        }
      }
    }
  }
  long partitions = 0;
  for (int n = 0; n <= 12; ++n) {
    for (int r = 0; r <= n; ++r) {
      for (const auto& p : partitions_in_box(r, n - r)) {
        ++partitions;
        expect(o, string_to_partition(partition_to_string(p)) == p, "partition round trip");
      }
    }
  }
  if (o.pass) {
    o.detail = std::to_string(strings) + " 012-strings with n <= 9, " + std::to_string(partitions) +
               " partitions with r+cap <= 12";
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  expect(o, substring_uv(StepString::parse("01312230132"), 1, 3).to_string() == "010101", "σ(13)");
  const StepString s = StepString::parse("2103210");
  expect(o, project_j(s, 1).to_string() == "0001000", "σ[1]");
  expect(o, project_j(s, 2).to_string() == "1001100", "σ[2]");
  expect(o, project_j(s, 3).to_string() == "1101110", "σ[3]");
  const TwoStepModel y = hat_Y(StepString::parse("021010201"), 2, 5, 9);
  std::string eta;
  for (int e : y.eta) eta += std::to_string(e);
  expect(o, eta == "146835927", "η");
  if (o.pass) o.detail = "010101; 0001000,1001100,1101110; η = " + eta;
  return o;
}

Outcome criterion8() {
  Outcome o;
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases{
      {"criterion1.json", kCheck1}, {"criterion2.json", kWitness1}, {"criterion3.json", kWitness2}};
  for (const auto& [file, args] : cases) {
    std::ifstream in(std::string(HORNKIT_GOLDEN_DIR) + "/" + file, std::ios::binary);
    const std::string golden((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    expect(o, !golden.empty(), file + " missing");
    expect(o, cli_text(args) == golden, file + " differs");
    expect(o, cli_text(args) == cli_text(args), file + " unstable");
  }
  if (o.pass) o.detail = "3 golden JSON files byte-identical";
  return o;
}

}  // namespace

int main() {
  unsetenv("HORNKIT_SEED");
  struct Criterion {
    int id;
    double limit_s;
    Outcome (*run)();
  };
  const std::vector<Criterion> criteria{{1, 1.0, criterion1},  {2, 1.0, criterion2},   {3, 5.0, criterion3},
                                        {4, 60.0, criterion4}, {5, 300.0, criterion5}, {6, 60.0, criterion6},
                                        {7, 1.0, criterion7},  {8, 10.0, criterion8}};
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(c.limit_s) + " s budget)";
    }
    failures += !o.pass;
    std::printf("criterion %d: %s  %.3f s  %s\n", c.id, o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

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

#include "hornkit/serialize.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hornkit {
namespace {

std::vector<StepString> strings_with_steps(const Json& j, int steps) {
  std::vector<StepString> out;
  for (const auto& word : j) out.push_back(StepString::parse(word.get<std::string>(), steps));
  return out;
}

}  // namespace

void to_json(Json& j, const Partition& p) { j = p.to_string(); }
void from_json(const Json& j, Partition& p) { p = Partition::parse(j.get<std::string>()); }

void to_json(Json& j, const StepString& s) { j = s.to_string(); }
void from_json(const Json& j, StepString& s) { s = StepString::parse(j.get<std::string>()); }

void to_json(Json& j, const HornInequality& ineq) {
  j = Json{{"d", ineq.d},     {"r", ineq.r},          {"n", ineq.n},
           {"mus", ineq.mus}, {"indices", ineq.indices}, {"rhs", ineq.rhs}};
}

void from_json(const Json& j, HornInequality& ineq) {
  ineq = make_inequality(j.at("r").get<int>(), j.at("n").get<int>(),
                         j.at("mus").get<std::vector<Partition>>());
  if (ineq.d != j.at("d").get<int>() || ineq.indices != j.at("indices").get<std::vector<std::vector<int>>>() ||
      ineq.rhs != j.at("rhs").get<long>()) {
    throw std::invalid_argument("inequality fields are inconsistent with its μ-tuple");
  }
}

void to_json(Json& j, const TransversalityVerdict& v) {
  j = Json{{"nonzero", v.nonzero},         {"achieved_dim", v.achieved_dim},
           {"expected_dim", v.expected_dim}, {"ambient_dim", v.ambient_dim},
           {"sum_codims", v.sum_codims},   {"achieved_codim", v.achieved_codim()}};
}

void from_json(const Json& j, TransversalityVerdict& v) {
  v.nonzero = j.at("nonzero").get<bool>();
  v.achieved_dim = j.at("achieved_dim").get<Index>();
  v.expected_dim = j.at("expected_dim").get<Index>();
  v.ambient_dim = j.at("ambient_dim").get<Index>();
  v.sum_codims = j.at("sum_codims").get<Index>();
}

Method method_from_name(const std::string& name) {
  for (Method m : {Method::kHornRecursion, Method::kLrOracle, Method::kNumeric}) {
    if (name == method_name(m)) return m;
  }
  throw std::invalid_argument("unknown method: " + name);
}

void to_json(Json& j, const Verdict& v) {
  j = Json{{"nonzero", v.nonzero}, {"method", method_name(v.method)}};
  if (v.violated) {
    j["violated"] = Json{{"inequality", v.violated->inequality}, {"slack", v.violated->slack}};
  }
  if (v.numeric) j["numeric"] = *v.numeric;
}

void from_json(const Json& j, Verdict& v) {
  v = Verdict{};
  v.nonzero = j.at("nonzero").get<bool>();
  v.method = method_from_name(j.at("method").get<std::string>());
  if (j.contains("violated")) {
    v.violated = Violation{j["violated"].at("inequality").get<HornInequality>(),
                           j["violated"].at("slack").get<long>()};
  }
  if (j.contains("numeric")) v.numeric = j["numeric"].get<TransversalityVerdict>();
}

void to_json(Json& j, const WitnessLevel& level) {
  j = Json{{"ambient", {level.rows, level.rows + level.cap}},
           {"cap", level.cap},
           {"lambdas", level.lambdas},
           {"seed", level.seed},
           {"attempts", level.attempts},
           {"rank", level.rank},
           {"nullity", level.nullity},
           {"terminal", level.terminal},
           {"kernel_positions", level.kernel_positions},
           {"lifted", level.lifted},
           {"mus", level.mus}};
}

void from_json(const Json& j, WitnessLevel& level) {
  level = WitnessLevel{};
  level.rows = j.at("ambient").at(0).get<int>();
  level.cap = j.at("cap").get<int>();
  level.lambdas = j.at("lambdas").get<std::vector<Partition>>();
  level.seed = j.at("seed").get<std::uint64_t>();
  level.attempts = j.at("attempts").get<int>();
  level.rank = j.at("rank").get<Index>();
  level.nullity = j.at("nullity").get<Index>();
  level.terminal = j.at("terminal").get<bool>();
  level.kernel_positions = strings_with_steps(j.at("kernel_positions"), 1);
  level.lifted = strings_with_steps(j.at("lifted"), 2);
  level.mus = j.at("mus").get<std::vector<Partition>>();
}

void to_json(Json& j, const WitnessTrace& trace) {
  j = Json{{"r", trace.r},
           {"n", trace.n},
           {"seed", trace.seed},
           {"lambdas", trace.lambdas},
           {"levels", trace.levels},
           {"certificates", trace.certificates},
           {"final", trace.final},
           {"slack", trace.slack}};
}

void from_json(const Json& j, WitnessTrace& trace) {
  trace = WitnessTrace{};
  trace.r = j.at("r").get<int>();
  trace.n = j.at("n").get<int>();
  trace.seed = j.at("seed").get<std::uint64_t>();
  trace.lambdas = j.at("lambdas").get<std::vector<Partition>>();
  trace.levels = j.at("levels").get<std::vector<WitnessLevel>>();
  trace.certificates = strings_with_steps(j.at("certificates"), 2);
  trace.final = j.at("final").get<HornInequality>();
  trace.slack = j.at("slack").get<long>();
}

}  // namespace hornkit

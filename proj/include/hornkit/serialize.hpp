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

// JSON encodings. Partitions travel as "p1,...,pr/RxC" strings and step
// strings as digit words; objects use sorted keys.

#include "json.hpp"

#include "hornkit/horn.hpp"
#include "hornkit/strings.hpp"
#include "hornkit/tangent.hpp"
#include "hornkit/witness.hpp"

namespace hornkit {

using Json = nlohmann::json;

void to_json(Json& j, const Partition& p);
void from_json(const Json& j, Partition& p);

void to_json(Json& j, const StepString& s);
// Steps are inferred from the largest letter.
void from_json(const Json& j, StepString& s);

void to_json(Json& j, const HornInequality& ineq);
void from_json(const Json& j, HornInequality& ineq);

void to_json(Json& j, const TransversalityVerdict& v);
void from_json(const Json& j, TransversalityVerdict& v);

void to_json(Json& j, const Verdict& v);
void from_json(const Json& j, Verdict& v);

void to_json(Json& j, const WitnessLevel& level);
void from_json(const Json& j, WitnessLevel& level);

void to_json(Json& j, const WitnessTrace& trace);
void from_json(const Json& j, WitnessTrace& trace);

Method method_from_name(const std::string& name);

}  // namespace hornkit

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

// Command-line front end, kept as a library so tests can drive it.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hornkit/field.hpp"
#include "hornkit/strings.hpp"

namespace hornkit {

enum class OutputFormat { kJson, kText, kDiagram };

struct RunConfig {
  std::uint32_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
  int trials = 3;
  OutputFormat format = OutputFormat::kJson;
};

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kWitnessFailed = 3;  // not-vanishing, or methods disagree
inline constexpr int kGenericityExhausted = 4;
inline constexpr int kZero = 10;
}  // namespace exit_code

// Joins the arguments with ';' and parses each non-empty piece. All
// classes must share one rectangle. ParseError positions index the
// joined text.
std::vector<Partition> parse_classes(const std::vector<std::string>& args);

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hornkit

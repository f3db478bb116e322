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

#include "hornkit/strings.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace hornkit {
namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

void require_binary(const StepString& s, const char* who) {
  for (int x : s.letters()) {
    if (x > 1) fail(std::string(who) + ": expected a 01-string, got " + s.to_string());
  }
}

// Parses a non-negative integer at text[pos...]; advances pos.
int parse_int(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
  if (ec != std::errc{} || ptr == text.data() + pos) {
    throw ParseError("expected a non-negative integer", start);
  }
  pos = static_cast<std::size_t>(ptr - text.data());
  return value;
}

}  // namespace

Partition::Partition(std::vector<int> parts, int cap)
    : parts_(std::move(parts)), cap_(cap) {
  if (cap_ < 0) fail("partition cap must be non-negative");
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 0 || parts_[k] > cap_) {
      fail("partition part out of range [0, " + std::to_string(cap_) + "]: " +
           std::to_string(parts_[k]));
    }
    if (k > 0 && parts_[k - 1] > parts_[k]) fail("partition parts must be weakly increasing");
  }
}

Partition Partition::parse(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) throw ParseError("missing '/RxC' rectangle", text.size());
  std::vector<int> parts;
  std::size_t pos = 0;
  if (slash > 0) {
    for (;;) {
      parts.push_back(parse_int(text, pos));
      if (pos == slash) break;
      if (text[pos] != ',') throw ParseError("expected ',' or '/'", pos);
      ++pos;
    }
  }
  pos = slash + 1;
  const int rows = parse_int(text, pos);
  if (pos >= text.size() || (text[pos] != 'x' && text[pos] != 'X')) {
    throw ParseError("expected 'x' in rectangle", pos);
  }
  ++pos;
  const int cap = parse_int(text, pos);
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  if (static_cast<int>(parts.size()) != rows) {
    throw ParseError("partition has " + std::to_string(parts.size()) + " parts, rectangle wants " +
                         std::to_string(rows),
                     slash);
  }
  try {
    return Partition(std::move(parts), cap);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(parts_[k]);
  }
  return out + "/" + std::to_string(rows()) + "x" + std::to_string(cap_);
}

StepString::StepString(std::vector<int> letters, int steps)
    : letters_(std::move(letters)), steps_(steps) {
  if (steps_ < 1) fail("step string needs at least one step");
  for (int x : letters_) {
    if (x < 0 || x > steps_) {
      fail("letter " + std::to_string(x) + " outside {0.." + std::to_string(steps_) + "}");
    }
  }
}

StepString StepString::parse(std::string_view digits, int steps) {
  std::vector<int> letters;
  int top = 1;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const char c = digits[i];
    if (c < '0' || c > '9') throw ParseError("expected a digit", i);
    letters.push_back(c - '0');
    top = std::max(top, c - '0');
  }
  if (steps == 0) steps = top;
  if (top > steps) throw ParseError("letter exceeds step count", 0);
  return StepString(std::move(letters), steps);
}

StepString StepString::constant(int letter, int length, int steps) {
  return StepString(std::vector<int>(static_cast<std::size_t>(length), letter), steps);
}

int StepString::count(int letter) const {
  return static_cast<int>(std::count(letters_.begin(), letters_.end(), letter));
}

std::string StepString::to_string() const {
  std::string out;
  out.reserve(letters_.size());
  for (int x : letters_) out += static_cast<char>('0' + x);
  return out;
}

StepString partition_to_string(const Partition& lambda) {
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(lambda.ambient()));
  int zeros = 0;
  for (int part : lambda.parts()) {
    for (; zeros < part; ++zeros) letters.push_back(0);
    letters.push_back(1);
  }
  for (; zeros < lambda.cap(); ++zeros) letters.push_back(0);
  return StepString(std::move(letters), 1);
}

Partition string_to_partition(const StepString& s) {
  require_binary(s, "string_to_partition");
  std::vector<int> parts;
  int zeros = 0;
  for (int x : s.letters()) {
    if (x == 0) {
      ++zeros;
    } else {
      parts.push_back(zeros);
    }
  }
  return Partition(std::move(parts), zeros);
}

StepString substring_uv(const StepString& sigma, int u, int v) {
  if (!(0 <= u && u < v && v <= sigma.steps())) {
    fail("substring_uv: need 0 <= u < v <= steps");
  }
  std::vector<int> out;
  for (int x : sigma.letters()) {
    if (x == u) out.push_back(0);
    if (x == v) out.push_back(1);
  }
  return StepString(std::move(out), 1);
}

StepString project_j(const StepString& sigma, int j) {
  if (j < 1 || j > sigma.steps()) fail("project_j: need 1 <= j <= steps");
  const int threshold = sigma.steps() - j;
  std::vector<int> out;
  out.reserve(sigma.letters().size());
  for (int x : sigma.letters()) out.push_back(x > threshold ? 1 : 0);
  return StepString(std::move(out), 1);
}

long cell_dimension(const StepString& sigma) {
  // Running count of each letter seen so far.
  std::vector<long> seen(static_cast<std::size_t>(sigma.steps()) + 1, 0);
  long total = 0;
  for (int x : sigma.letters()) {
    for (int smaller = 0; smaller < x; ++smaller) total += seen[static_cast<std::size_t>(smaller)];
    ++seen[static_cast<std::size_t>(x)];
  }
  return total;
}

StepString lift(const StepString& base, const StepString& fiber) {
  require_binary(base, "lift");
  require_binary(fiber, "lift");
  if (base.count(1) != fiber.size()) {
    fail("lift: base has " + std::to_string(base.count(1)) + " ones but fiber has length " +
         std::to_string(fiber.size()));
  }
  std::vector<int> out;
  out.reserve(base.letters().size());
  std::size_t k = 0;
  for (int x : base.letters()) {
    if (x == 0) {
      out.push_back(0);
    } else {
      out.push_back(fiber[k++] == 1 ? 2 : 1);
    }
  }
  return StepString(std::move(out), 2);
}

LiftCertificate make_lift(const StepString& base, const StepString& fiber) {
  return {base, fiber, lift(base, fiber)};
}

std::vector<int> horn_indices(const StepString& sigma) {
  std::vector<int> out;
  for (int l = 0; l < sigma.size(); ++l) {
    if (sigma[static_cast<std::size_t>(l)] == 2) out.push_back(l + 1);
  }
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int cap) {
  std::vector<Partition> out;
  std::vector<int> parts(static_cast<std::size_t>(rows), 0);
  for (;;) {
    out.emplace_back(parts, cap);
    // Next weakly increasing vector in lexicographic order.
    int k = rows - 1;
    while (k >= 0 && parts[static_cast<std::size_t>(k)] == cap) --k;
    if (k < 0) break;
    const int v = ++parts[static_cast<std::size_t>(k)];
    for (int m = k + 1; m < rows; ++m) parts[static_cast<std::size_t>(m)] = v;
  }
  return out;
}

std::vector<StepString> strings_with_counts(const std::vector<int>& counts) {
  std::vector<int> letters;
  for (std::size_t x = 0; x < counts.size(); ++x) {
    letters.insert(letters.end(), static_cast<std::size_t>(counts[x]), static_cast<int>(x));
  }
  const int steps = std::max(1, static_cast<int>(counts.size()) - 1);
  std::vector<StepString> out;
  do {
    out.emplace_back(letters, steps);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

}  // namespace hornkit

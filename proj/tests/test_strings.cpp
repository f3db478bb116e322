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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "hornkit/strings.hpp"

using namespace hornkit;

namespace {

StepString S(const char* w, int steps = 0) { return StepString::parse(w, steps); }
Partition P(const char* text) { return Partition::parse(text); }

long pair_count(const StepString& s) {
  long count = 0;
  for (int a = 0; a < s.size(); ++a) {
    for (int b = a + 1; b < s.size(); ++b) count += s[static_cast<std::size_t>(a)] < s[static_cast<std::size_t>(b)];
  }
  return count;
}

std::vector<StepString> all_012(int n) {
  std::vector<StepString> out;
  for (int twos = 0; twos <= n; ++twos) {
    for (int ones = 0; ones + twos <= n; ++ones) {
      for (auto& s : strings_with_counts({n - ones - twos, ones, twos})) {
        out.emplace_back(s.letters(), 2);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("partition parsing") {
  const Partition p = P("0,1,3,3/4x5");
  CHECK(p.parts() == std::vector<int>{0, 1, 3, 3});
  CHECK(p.rows() == 4);
  CHECK(p.cap() == 5);
  CHECK(p.ambient() == 9);
  CHECK(p.weight() == 7);
  CHECK(p.to_string() == "0,1,3,3/4x5");
  CHECK(P("/0x4").rows() == 0);

  CHECK_THROWS_AS(P("1,0/2x3"), ParseError);
  CHECK_THROWS_AS(P("0,4/2x3"), ParseError);
  CHECK_THROWS_AS(P("0,1/3x3"), ParseError);
  CHECK_THROWS_AS(P("0,1"), ParseError);
  try {
    P("0,x/2x3");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(Partition({0, -1}, 3), std::invalid_argument);
}

TEST_CASE("step strings") {
  const StepString s = S("021010201");
  CHECK(s.steps() == 2);
  CHECK(s.size() == 9);
  CHECK(s.count(0) == 4);
  CHECK(s.count(1) == 3);
  CHECK(s.count(2) == 2);
  CHECK(s.to_string() == "021010201");
  CHECK(S("0101", 2).steps() == 2);
  CHECK(StepString::constant(1, 3, 1).to_string() == "111");
  CHECK_THROWS_AS(S("01a"), ParseError);
  CHECK_THROWS_AS(S("012", 1), ParseError);
}

TEST_CASE("partition_to_string") {
  CHECK(partition_to_string(P("0,1,3,3/4x5")).to_string() == "101001100");
  CHECK(partition_to_string(P("0,0,0,0/4x5")).to_string() == "111100000");
  CHECK(partition_to_string(P("5,5,5,5/4x5")).to_string() == "000001111");
}

TEST_CASE("string_to_partition") {
  CHECK(string_to_partition(S("101001100")) == P("0,1,3,3/4x5"));
  CHECK(string_to_partition(S("010010")) == P("1,3/2x4"));
  const Partition empty = string_to_partition(S("0000"));
  CHECK(empty.rows() == 0);
  CHECK(empty.cap() == 4);
  CHECK_THROWS(string_to_partition(S("012")));
}

TEST_CASE("substring_uv") {
  CHECK(substring_uv(S("01312230132"), 1, 3).to_string() == "010101");
  CHECK(substring_uv(S("021010201"), 0, 2).to_string() == "010010");
  CHECK(substring_uv(S("012"), 0, 1).to_string() == "01");
  CHECK_THROWS(substring_uv(S("012"), 2, 1));
}

TEST_CASE("project_j") {
  const StepString s = S("2103210");
  CHECK(project_j(s, 1).to_string() == "0001000");
  CHECK(project_j(s, 2).to_string() == "1001100");
  CHECK(project_j(s, 3).to_string() == "1101110");
  CHECK_THROWS(project_j(s, 4));
}

TEST_CASE("cell_dimension") {
  CHECK(cell_dimension(S("021010201")) == 13);
  CHECK(cell_dimension(S("2210")) == 0);
  CHECK(cell_dimension(S("101001100")) == 7);
}

TEST_CASE("lift") {
  CHECK(lift(S("100110"), S("101")).to_string() == "200120");
  CHECK(lift(S("010011"), S("101")).to_string() == "020012");
  CHECK(lift(S("111000"), S("000")).to_string() == "111000");
  CHECK_THROWS(lift(S("1100"), S("101")));
  const LiftCertificate c = make_lift(S("100110"), S("101"));
  CHECK(project_j(c.lifted, 2) == c.base);
  CHECK(substring_uv(c.lifted, 1, 2) == c.fiber);
}

TEST_CASE("horn_indices") {
  CHECK(horn_indices(S("200120")) == std::vector<int>{1, 5});
  CHECK(horn_indices(S("020012")) == std::vector<int>{2, 6});
  CHECK(horn_indices(S("111000", 2)).empty());
}

TEST_CASE("enumeration helpers") {
  const auto box = partitions_in_box(2, 2);
  REQUIRE(box.size() == 6);
  CHECK(box.front() == P("0,0/2x2"));
  CHECK(box.back() == P("2,2/2x2"));
  for (std::size_t i = 1; i < box.size(); ++i) CHECK(box[i - 1] < box[i]);
  CHECK(partitions_in_box(3, 4).size() == 35);
  CHECK(partitions_in_box(0, 3).size() == 1);
  CHECK(strings_with_counts({2, 1, 1}).size() == 12);
}

TEST_CASE("round trips over small rectangles") {
  for (int n = 0; n <= 12; ++n) {
    for (int r = 0; r <= n; ++r) {
      for (const auto& lambda : partitions_in_box(r, n - r)) {
        const StepString s = partition_to_string(lambda);
        REQUIRE(string_to_partition(s) == lambda);
        CHECK(cell_dimension(s) == lambda.weight());
      }
      for (const auto& s : strings_with_counts({n - r, r})) {
        CHECK(partition_to_string(string_to_partition(s)) == s);
      }
    }
  }
}

TEST_CASE("012-string identities") {
  for (int n = 1; n <= 9; ++n) {
    for (const StepString& sigma : all_012(n)) {
      const long dim = cell_dimension(sigma);
      CHECK(dim == pair_count(sigma));
      CHECK(dim == cell_dimension(substring_uv(sigma, 0, 1)) + cell_dimension(substring_uv(sigma, 0, 2)) +
                       cell_dimension(substring_uv(sigma, 1, 2)));

      const Partition lambda = string_to_partition(project_j(sigma, 2));
      const Partition mu = string_to_partition(substring_uv(sigma, 1, 2));
      long sum = 0;
      for (int k = 0; k < mu.rows(); ++k) sum += lambda[static_cast<std::size_t>(mu[static_cast<std::size_t>(k)] + k)];
      CHECK(string_to_partition(substring_uv(sigma, 0, 2)).weight() == sum);

      const StepString base = project_j(sigma, 2);
      const StepString fiber = substring_uv(sigma, 1, 2);
      CHECK(lift(base, fiber) == sigma);

      std::vector<int> via_mu;
      const Partition twos = string_to_partition(project_j(sigma, 1));
      for (int k = 0; k < twos.rows(); ++k) via_mu.push_back(twos[static_cast<std::size_t>(k)] + k + 1);
      CHECK(horn_indices(sigma) == via_mu);
    }
  }
}

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

#include <array>
#include <vector>

#include "hornkit/exactla.hpp"
#include "hornkit/field.hpp"

using namespace hornkit;

namespace {

Mat from_ints(std::initializer_list<std::initializer_list<int>> rows) {
  Mat m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (int x : row) m(i, j++) = Zp(x);
    ++i;
  }
  return m;
}

Mat random_matrix(Index rows, Index cols, Rng& rng) {
  Mat m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) m(i, j) = rng.element();
  }
  return m;
}

Subspace<Zp> coordinate_span(Index n, std::initializer_list<Index> axes) {
  Mat rows = Mat::Zero(static_cast<Index>(axes.size()), n);
  Index k = 0;
  for (Index a : axes) rows(k++, a) = Zp(1);
  return Subspace<Zp>::span_of_rows(rows);
}

}  // namespace

TEST_CASE("field arithmetic") {
  CHECK(Zp::modulus() == kDefaultPrime);
  const Zp a(123456789), b(-5);
  CHECK(b.value() == kDefaultPrime - 5);
  CHECK((a * a.inverse()).value() == 1);
  CHECK((a / a) == Zp(1));
  CHECK(Zp(2).pow(31) == Zp(1));  // 2^31 = 1 mod 2^31 - 1
  CHECK((a - a).is_zero());
  CHECK_THROWS(Zp(0).inverse());
}

TEST_CASE("prime scope") {
  CHECK(is_prime(kDefaultPrime));
  CHECK_FALSE(is_prime(kDefaultPrime - 2));
  {
    PrimeScope scope(1048583);
    CHECK(Zp::modulus() == 1048583u);
    CHECK(Zp(1048583).is_zero());
  }
  CHECK(Zp::modulus() == kDefaultPrime);
  CHECK_THROWS_AS(PrimeScope(1000003), std::invalid_argument);
  CHECK_THROWS_AS(PrimeScope(2147483646u), std::invalid_argument);
}

TEST_CASE("rank") {
  CHECK(rank(Mat::Zero(3, 3)) == 0);
  CHECK(rank(Mat::Identity(4, 4)) == 4);
  const Mat phi = from_ints({{0, 0, 0, 0, 0, 0},
                             {0, 5, 6, 7, 0, 0},
                             {0, 0, 8, 9, 0, 0},
                             {0, 0, 0, 0, 0, 1}});
  CHECK(rank(phi) == 3);
  CHECK(nullspace(phi).dim() == 3);
}

TEST_CASE("nullspace") {
  CHECK(nullspace(Mat::Identity(5, 5)).dim() == 0);

  const Mat phi = from_ints({{0, 0, 0}, {0, 3, 0}, {0, 8, 0}, {0, 0, 0}});
  const Subspace<Zp> k = nullspace(phi);
  CHECK(k == coordinate_span(3, {0, 2}));

  Rng rng(7);
  const Mat m = random_invertible(6, rng);
  REQUIRE(rank(m) == 6);
  CHECK(nullspace(m).dim() == 0);
}

TEST_CASE("rank plus nullity") {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Index rows = 1 + static_cast<Index>(rng.below(7));
    const Index cols = 1 + static_cast<Index>(rng.below(7));
    const Index inner = 1 + static_cast<Index>(rng.below(6));
    // Low-rank products exercise the rank-deficient path.
    const Mat m = random_matrix(rows, inner, rng) * random_matrix(inner, cols, rng);
    const Subspace<Zp> k = nullspace(m);
    CHECK(rank(m) + k.dim() == cols);
    CHECK(is_zero_matrix(m * k.basis().transpose()));
  }
}

TEST_CASE("subspace canonical form") {
  Rng rng(3);
  const Mat rows = random_matrix(3, 6, rng);
  const Mat mixed = random_invertible(3, rng) * rows;
  const auto a = Subspace<Zp>::span_of_rows(rows);
  const auto b = Subspace<Zp>::span_of_rows(mixed);
  CHECK(a == b);
  CHECK(a.basis() == b.basis());
  const auto& p = a.pivots();
  for (std::size_t i = 1; i < p.size(); ++i) CHECK(p[i - 1] < p[i]);
  CHECK(a.contains(rows.row(1).transpose()));
  const Vec c = a.coordinates(mixed.row(2).transpose());
  CHECK(a.basis().transpose() * c == Vec(mixed.row(2).transpose()));
}

TEST_CASE("intersect") {
  Rng rng(5);
  const auto s = Subspace<Zp>::span_of_rows(random_matrix(3, 7, rng));
  CHECK(intersect(s, Subspace<Zp>::full(7)) == s);
  CHECK(intersect(coordinate_span(4, {0, 1}), coordinate_span(4, {2, 3})).dim() == 0);
  CHECK_THROWS_AS(intersect(coordinate_span(4, {0}), coordinate_span(5, {0})), std::invalid_argument);

  for (int trial = 0; trial < 20; ++trial) {
    std::array<Subspace<Zp>, 3> spaces;
    Index codims = 0;
    for (auto& sp : spaces) {
      sp = Subspace<Zp>::span_of_rows(random_matrix(2 + static_cast<Index>(rng.below(5)), 8, rng));
      codims += sp.codim();
    }
    const auto all = intersect<Zp>(std::span<const Subspace<Zp>>(spaces));
    CHECK(all.codim() <= codims);
    CHECK(intersect(intersect(spaces[0], spaces[1]), spaces[2]) == all);
    CHECK(intersect(spaces[2], intersect(spaces[1], spaces[0])) == all);
    CHECK(intersect(spaces[0], spaces[1]) == intersect(spaces[1], spaces[0]));
  }
}

TEST_CASE("sum and empty blocks") {
  const auto zero = Subspace<Zp>(5);
  const auto e = coordinate_span(5, {1, 3});
  CHECK(sum(zero, e) == e);
  CHECK(sum(zero, zero).dim() == 0);
  CHECK(sum(e, coordinate_span(5, {0, 2, 4})) == Subspace<Zp>::full(5));
  CHECK(inverse(Mat(0, 0)).size() == 0);
}

TEST_CASE("random element") {
  CHECK(is_zero_matrix(random_element(Subspace<Zp>(4), 9)));
  const auto line = Subspace<Zp>::span_of_rows(from_ints({{1, 2, 3}}));
  const Vec v = random_element(line, 9);
  CHECK_FALSE(is_zero_matrix(v));
  CHECK(line.contains(v));
  CHECK(random_element(line, 9) == v);
  CHECK(random_element(line, 10) != v);
}

TEST_CASE("rng determinism") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  Rng c(42);
  for (int i = 0; i < 1000; ++i) CHECK(c.below(17) < 17);
  CHECK(Rng::derive(1, 2) == Rng::derive(1, 2));
  CHECK(Rng::derive(1, 2) != Rng::derive(2, 1));
  Rng d(1);
  CHECK(Rng(1).element() == d.element());
}

TEST_CASE("random borel") {
  const std::vector<int> one{0};
  const Mat m1 = random_borel(1, one, 4);
  CHECK(m1.rows() == 1);
  CHECK_FALSE(m1(0, 0).is_zero());

  const std::vector<int> order{2, 0, 3, 1};
  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const Mat b = random_borel(4, order, rng);
    CHECK(rank(b) == 4);
    // Stabilizes span(e_order[0..l]) for every l.
    for (std::size_t l = 1; l <= order.size(); ++l) {
      Mat basis = Mat::Zero(static_cast<Index>(l), 4);
      for (std::size_t k = 0; k < l; ++k) basis(static_cast<Index>(k), order[k]) = Zp(1);
      const auto step = Subspace<Zp>::span_of_rows(basis);
      for (std::size_t k = 0; k < l; ++k) CHECK(step.contains(b.col(order[k])));
    }
    CHECK(b * inverse(b) == Mat(Mat::Identity(4, 4)));
  }
  CHECK_THROWS_AS(inverse(from_ints({{1, 2}, {2, 4}})), std::domain_error);
}

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

// Products in H*(Gr(r, r + cap)) computed by multiplying Schur
// polynomials in r variables and splitting the result back into Schur
// polynomials, dropping anything wider than cap. Slow, tiny-case only,
// and shares no code with the library's tableau rule.

#include <functional>
#include <map>
#include <vector>

namespace oracle {

using Monomial = std::vector<int>;
using Poly = std::map<Monomial, long long>;
using Shape = std::vector<int>;  // weakly decreasing, length r

inline Poly schur_polynomial(const Shape& shape, int vars) {
  std::vector<std::pair<int, int>> cells;
  for (int row = 0; row < static_cast<int>(shape.size()); ++row) {
    for (int col = 0; col < shape[row]; ++col) cells.emplace_back(row, col);
  }
  std::map<std::pair<int, int>, int> filling;
  Poly out;
  std::function<void(std::size_t)> fill = [&](std::size_t c) {
    if (c == cells.size()) {
      Monomial m(vars, 0);
      for (const auto& [cell, v] : filling) ++m[v - 1];
      ++out[m];
      return;
    }
    const auto [row, col] = cells[c];
    int low = 1;
    if (col > 0) low = std::max(low, filling[{row, col - 1}]);
    if (row > 0) low = std::max(low, filling[{row - 1, col}] + 1);
    for (int v = low; v <= vars; ++v) {
      filling[{row, col}] = v;
      fill(c + 1);
    }
    filling.erase({row, col});
  };
  fill(0);
  return out;
}

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out[m] += ca * cb;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// Schur expansion of a symmetric polynomial: peel off the lex-largest
// monomial, which is always a dominant weight.
inline std::map<Shape, long long> schur_expand(Poly p, int vars) {
  std::map<Shape, long long> out;
  while (!p.empty()) {
    const auto top = std::prev(p.end());
    const Shape shape = top->first;
    const long long c = top->second;
    out[shape] += c;
    for (const auto& [m, k] : schur_polynomial(shape, vars)) {
      auto& slot = p[m];
      slot -= c * k;
      if (slot == 0) p.erase(m);
    }
  }
  return out;
}

// Classes are given in codimension form (weakly decreasing).
inline std::map<Shape, long long> grassmann_product(const std::vector<Shape>& factors, int rows,
                                                    int cap) {
  std::map<Shape, long long> current{{factors.front(), 1}};
  for (std::size_t i = 1; i < factors.size(); ++i) {
    const Poly right = schur_polynomial(factors[i], rows);
    Poly total;
    for (const auto& [shape, c] : current) {
      for (const auto& [m, k] : multiply(schur_polynomial(shape, rows), right)) total[m] += c * k;
    }
    std::map<Shape, long long> next;
    for (const auto& [shape, c] : schur_expand(total, rows)) {
      if (c != 0 && (shape.empty() || shape.front() <= cap)) next[shape] = c;
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace oracle

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

#include "hornkit/field.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace hornkit {
namespace {

thread_local std::uint32_t active_modulus = kDefaultPrime;

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

Zp::Zp(std::int64_t v) {
  std::int64_t m = active_modulus;
  std::int64_t r = v % m;
  if (r < 0) r += m;
  value_ = static_cast<std::uint32_t>(r);
}

std::uint32_t Zp::modulus() { return active_modulus; }

Zp Zp::pow(std::uint64_t e) const {
  Zp base = *this;
  Zp result{1};
  while (e != 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Zp Zp::inverse() const {
  if (value_ == 0) throw std::domain_error("Zp: inverse of zero");
  return pow(modulus() - 2);
}

std::ostream& operator<<(std::ostream& os, Zp x) { return os << x.value(); }

PrimeScope::PrimeScope(std::uint32_t p) : previous_(active_modulus) {
  if (p <= (1u << 20) || !is_prime(p)) {
    throw std::invalid_argument("prime modulus must be a prime above 2^20, got " +
                                std::to_string(p));
  }
  active_modulus = p;
}

PrimeScope::~PrimeScope() { active_modulus = previous_; }

}  // namespace hornkit

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

#include <cstdint>
#include <iosfwd>

#include <Eigen/Core>

namespace hornkit {

inline constexpr std::uint32_t kDefaultPrime = 2147483647u;

bool is_prime(std::uint64_t p);

// Residue class modulo the prime that is active on the calling thread.
// The modulus is configuration-scoped: install a different one with
// PrimeScope. Values never carry their modulus, which lets Eigen treat Zp
// like any other scalar (Zp(0), Zp(1) need no context).
class Zp {
 public:
  constexpr Zp() = default;
  Zp(std::int64_t v);  // NOLINT(google-explicit-constructor)

  static std::uint32_t modulus();

  std::uint32_t value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  Zp inverse() const;
  Zp pow(std::uint64_t e) const;

  Zp& operator+=(Zp o) {
    std::uint64_t s = std::uint64_t{value_} + o.value_;
    if (s >= modulus()) s -= modulus();
    value_ = static_cast<std::uint32_t>(s);
    return *this;
  }
  Zp& operator-=(Zp o) {
    value_ = value_ >= o.value_ ? value_ - o.value_
                                : static_cast<std::uint32_t>(
                                      std::uint64_t{value_} + modulus() - o.value_);
    return *this;
  }
  Zp& operator*=(Zp o) {
    value_ = static_cast<std::uint32_t>(std::uint64_t{value_} * o.value_ %
                                        modulus());
    return *this;
  }
  Zp& operator/=(Zp o) { return *this *= o.inverse(); }

  friend Zp operator+(Zp a, Zp b) { return a += b; }
  friend Zp operator-(Zp a, Zp b) { return a -= b; }
  friend Zp operator*(Zp a, Zp b) { return a *= b; }
  friend Zp operator/(Zp a, Zp b) { return a /= b; }
  friend Zp operator-(Zp a) { return Zp{} - a; }
  friend bool operator==(Zp a, Zp b) { return a.value_ == b.value_; }
  friend bool operator!=(Zp a, Zp b) { return a.value_ != b.value_; }

 private:
  struct Raw {};
  constexpr Zp(std::uint32_t v, Raw) : value_(v) {}
  friend class Rng;

  std::uint32_t value_ = 0;
};

std::ostream& operator<<(std::ostream& os, Zp x);

// Installs `p` as the modulus for Zp arithmetic on this thread until the
// scope ends. Throws std::invalid_argument unless p is a prime in
// (2^20, 2^32).
class PrimeScope {
 public:
  explicit PrimeScope(std::uint32_t p);
  ~PrimeScope();
  PrimeScope(const PrimeScope&) = delete;
  PrimeScope& operator=(const PrimeScope&) = delete;

 private:
  std::uint32_t previous_;
};

inline bool is_zero(Zp x) { return x.is_zero(); }

}  // namespace hornkit

namespace Eigen {

template <>
struct NumTraits<hornkit::Zp> : GenericNumTraits<hornkit::Zp> {
  using Real = hornkit::Zp;
  using NonInteger = hornkit::Zp;
  using Nested = hornkit::Zp;
  using Literal = hornkit::Zp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline int digits10() { return 10; }
};

}  // namespace Eigen

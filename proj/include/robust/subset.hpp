// Copyright 2026 The Authors.
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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "robust/error.hpp"

namespace robust {

/// Maximum ground-set size representable by a Subset.
inline constexpr std::size_t kMaxGroundSize = 32;

/// A subset of a ground set {0, ..., n-1}, n <= 32, stored as a bitmask.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}
  Subset(std::initializer_list<std::size_t> elements) {
    for (std::size_t e : elements) insert(e);
  }

  static Subset from_elements(const std::vector<std::size_t>& elements) {
    Subset s;
    for (std::size_t e : elements) s.insert(e);
    return s;
  }

  /// The full ground set {0, ..., n-1}.
  static Subset full(std::size_t n) {
    if (n > kMaxGroundSize) {
      throw InvalidArgument("ground set larger than 32 elements");
    }
    return Subset(n == kMaxGroundSize ? ~std::uint32_t{0}
                                      : (std::uint32_t{1} << n) - 1);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }

  constexpr bool contains(std::size_t e) const {
    return e < kMaxGroundSize && ((bits_ >> e) & 1U) != 0;
  }

  void insert(std::size_t e) {
    if (e >= kMaxGroundSize) throw InvalidArgument("element index >= 32");
    bits_ |= std::uint32_t{1} << e;
  }
  constexpr void erase(std::size_t e) {
    if (e < kMaxGroundSize) bits_ &= ~(std::uint32_t{1} << e);
  }

  Subset with(std::size_t e) const {
    Subset s = *this;
    s.insert(e);
    return s;
  }
  constexpr Subset without(std::size_t e) const {
    Subset s = *this;
    s.erase(e);
    return s;
  }

  constexpr bool is_subset_of(Subset other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  /// Elements in ascending order.
  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    }
    return out;
  }

  friend constexpr Subset operator|(Subset a, Subset b) {
    return Subset(a.bits_ | b.bits_);
  }
  friend constexpr Subset operator&(Subset a, Subset b) {
    return Subset(a.bits_ & b.bits_);
  }
  /// Set difference.
  friend constexpr Subset operator-(Subset a, Subset b) {
    return Subset(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(Subset a, Subset b) = default;
  friend constexpr auto operator<=>(Subset a, Subset b) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Renders `{u1, u3}` style text; labels are 1-based.
inline std::string to_string(Subset s, const std::string& prefix = "u") {
  std::string out = "{";
  bool first = true;
  for (std::size_t e : s.elements()) {
    if (!first) out += ", ";
    out += prefix + std::to_string(e + 1);
    first = false;
  }
  return out + "}";
}

/// Calls `fn(Subset)` for every subset of `{0..n-1}` in ascending bit order.
template <typename Fn>
void for_each_subset(std::size_t n, Fn&& fn) {
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    fn(Subset(static_cast<std::uint32_t>(bits)));
  }
}

}  // namespace robust

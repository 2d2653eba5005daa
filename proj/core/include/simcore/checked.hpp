// Copyright 2026 The simcore Authors
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

#ifndef SIMCORE_CHECKED_HPP_
#define SIMCORE_CHECKED_HPP_

#include <concepts>
#include <cstdint>

#include "simcore/errors.hpp"

// Overflow-checked integer arithmetic. Every size and hook length in the
// library goes through these helpers.
namespace simcore::checked {

__extension__ typedef __int128 Int128;
__extension__ typedef unsigned __int128 UInt128;

template <std::integral T>
constexpr T Add(T a, T b) {
  T out{};
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in addition");
  }
  return out;
}

template <std::integral T>
constexpr T Sub(T a, T b) {
  T out{};
  if (__builtin_sub_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in subtraction");
  }
  return out;
}

template <std::integral T>
constexpr T Mul(T a, T b) {
  T out{};
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in multiplication");
  }
  return out;
}

// n choose 2.
constexpr std::uint64_t Choose2(std::uint64_t n) {
  if (n < 2) return 0;
  // One of n, n-1 is even; divide it first so the product only overflows
  // when the result does.
  return n % 2 == 0 ? Mul<std::uint64_t>(n / 2, n - 1)
                    : Mul<std::uint64_t>(n, (n - 1) / 2);
}

template <std::integral To, std::integral From>
constexpr To Narrow(From v) {
  To out{};
  if (__builtin_add_overflow(v, From{0}, &out)) {
    throw OverflowError("integer conversion out of range");
  }
  return out;
}

}  // namespace simcore::checked

#endif  // SIMCORE_CHECKED_HPP_

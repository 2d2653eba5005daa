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

#ifndef SIMCORE_RATIONAL_HPP_
#define SIMCORE_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "simcore/checked.hpp"
#include "simcore/errors.hpp"

namespace simcore {

// Exact rational with a positive denominator, kept in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t numerator, std::int64_t denominator = 1)
      : num_(numerator), den_(denominator) {
    if (den_ == 0) throw InvalidArgument("rational with zero denominator");
    if (den_ < 0) {
      num_ = checked::Sub<std::int64_t>(0, num_);
      den_ = checked::Sub<std::int64_t>(0, den_);
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr std::int64_t numerator() const { return num_; }
  constexpr std::int64_t denominator() const { return den_; }

  // Largest integer <= *this.
  constexpr std::int64_t Floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  // *this - Floor(), in [0, 1).
  constexpr Rational FractionalPart() const {
    return Rational(num_ - Floor() * den_, den_);
  }

  friend constexpr bool operator==(const Rational&, const Rational&) = default;
  friend constexpr std::strong_ordering operator<=>(const Rational& a,
                                                    const Rational& b) {
    // Cross-multiplication in 128 bits cannot overflow for 64-bit inputs.
    const checked::Int128 lhs = static_cast<checked::Int128>(a.num_) * b.den_;
    const checked::Int128 rhs = static_cast<checked::Int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  std::string ToString() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.ToString();
}

}  // namespace simcore

#endif  // SIMCORE_RATIONAL_HPP_

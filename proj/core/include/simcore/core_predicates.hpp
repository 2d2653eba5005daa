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

#ifndef SIMCORE_CORE_PREDICATES_HPP_
#define SIMCORE_CORE_PREDICATES_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "simcore/partition.hpp"

namespace simcore {

using Modulus = std::uint64_t;

// Residue-class counts n_1..n_{t-1} of the beta-set of a t-core. Class 0
// is always empty for a t-core, and class i is the run {i, t+i, ...} of
// length n_i, so the profile determines the beta-set.
class ResidueProfile {
 public:
  // Throws InvalidArgument unless t >= 2 and counts.size() == t - 1.
  ResidueProfile(Modulus t, std::vector<std::uint64_t> counts);
  // All-zero profile (the empty partition).
  explicit ResidueProfile(Modulus t);

  Modulus modulus() const { return t_; }
  const std::vector<std::uint64_t>& counts() const { return counts_; }
  // n_i for 1 <= i <= t - 1.
  std::uint64_t count(std::uint64_t residue) const;
  // sum_i n_i, the length of the partition.
  std::uint64_t total() const;

  // union over i of { j*t + i : 0 <= j < n_i }.
  BetaSet ToBetaSet() const;

  friend bool operator==(const ResidueProfile&,
                         const ResidueProfile&) = default;

 private:
  Modulus t_;
  std::vector<std::uint64_t> counts_;
};

// Abacus test: every x >= t in beta(p) has x - t in beta(p). Requires t >= 2.
bool IsTCore(const Partition& p, Modulus t);

// Hook-length definition: no hook length is divisible by t. Quadratic in
// |p|; the abacus test above is the fast path.
bool IsTCoreByHooks(const Partition& p, Modulus t);

bool IsSimultaneousCore(const Partition& p, std::span<const Modulus> moduli);

// Parts strictly decreasing.
bool HasDistinctParts(const Partition& p);

// True when some x, x + 1 both lie in `b`.
bool HasConsecutiveElements(const BetaSet& b);

// Throws InvalidArgument if t < 2 or p is not a t-core.
ResidueProfile ResidueProfileOf(const Partition& p, Modulus t);

// sum_i (i n_i + t C(n_i, 2)) - C(sum_i n_i, 2). Throws OverflowError.
Size SizeFromProfile(const ResidueProfile& profile);

namespace detail {

// Abacus condition for any modulus >= 1. A 1-core is the empty partition
// only; the public predicates reject t = 1 but the (2, 1) family of the
// bijections needs it.
bool SatisfiesAbacus(const BetaSet& b, Modulus modulus);

void ValidateModulus(Modulus t);

}  // namespace detail

}  // namespace simcore

#endif  // SIMCORE_CORE_PREDICATES_HPP_

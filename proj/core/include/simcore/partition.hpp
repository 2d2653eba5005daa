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

#ifndef SIMCORE_PARTITION_HPP_
#define SIMCORE_PARTITION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace simcore {

using Part = std::uint64_t;
using Size = std::uint64_t;

// An integer partition: a weakly decreasing sequence of positive parts.
// The empty sequence is the empty partition of 0.
class Partition {
 public:
  Partition() = default;
  // Throws InvalidArgument unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<Part> parts);
  Partition(std::initializer_list<Part> parts)
      : Partition(std::vector<Part>(parts)) {}

  const std::vector<Part>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  Part operator[](std::size_t i) const { return parts_[i]; }

  // Sum of parts. Throws OverflowError rather than wrapping.
  Size size() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<Part> parts_;
};

// A finite set of distinct nonnegative integers, stored strictly
// decreasing. The beta-set of a partition of length l is
// { parts[i] + l - 1 - i } (0-based i), the first-column hook lengths.
class BetaSet {
 public:
  BetaSet() = default;
  // Accepts the elements in any order; throws InvalidArgument on duplicates.
  explicit BetaSet(std::vector<std::uint64_t> elements);
  BetaSet(std::initializer_list<std::uint64_t> elements)
      : BetaSet(std::vector<std::uint64_t>(elements)) {}

  const std::vector<std::uint64_t>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(std::uint64_t x) const;
  // Largest element; requires !empty().
  std::uint64_t max() const { return elements_.front(); }
  // True when 0 is absent, i.e. the set is the minimal beta-set of some
  // partition with exactly size() parts.
  bool normalized() const { return elements_.empty() || elements_.back() > 0; }

  friend bool operator==(const BetaSet&, const BetaSet&) = default;
  friend auto operator<=>(const BetaSet&, const BetaSet&) = default;

 private:
  std::vector<std::uint64_t> elements_;
};

using HookMatrix = std::vector<std::vector<std::uint64_t>>;

// Row i holds the hook lengths of the boxes in row i of the Young diagram.
HookMatrix HookLengths(const Partition& p);

BetaSet ToBetaSet(const Partition& p);

// Inverse of ToBetaSet. Throws InvalidArgument when `b` contains 0: the
// minimal beta-set never does, and silently dropping the induced zero part
// would change |beta|.
Partition FromBetaSet(const BetaSet& b);

// sum(b) - C(|b|, 2). Requires a normalized set; throws OverflowError.
Size SizeFromBeta(const BetaSet& b);

// Comma-separated integers, whitespace tolerant; "" is the empty list.
std::vector<std::uint64_t> ParseIntegerList(std::string_view text);
std::string FormatIntegerList(std::span<const std::uint64_t> values);

Partition ParsePartition(std::string_view text);
std::string FormatPartition(const Partition& p);
BetaSet ParseBetaSet(std::string_view text);
std::string FormatBetaSet(const BetaSet& b);

std::ostream& operator<<(std::ostream& os, const Partition& p);
std::ostream& operator<<(std::ostream& os, const BetaSet& b);

}  // namespace simcore

#endif  // SIMCORE_PARTITION_HPP_

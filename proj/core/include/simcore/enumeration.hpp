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

#ifndef SIMCORE_ENUMERATION_HPP_
#define SIMCORE_ENUMERATION_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "simcore/bijections.hpp"
#include "simcore/core_predicates.hpp"
#include "simcore/partition.hpp"
#include "simcore/rational.hpp"

namespace simcore {

struct ResourceGuard {
  // Full (a, b)-core enumeration is refused when the family's size,
  // C(a + b, a) / (a + b), exceeds this.
  std::uint64_t max_estimated_count = 100'000'000;
  // Any enumeration is refused when the gap poset has more elements.
  std::uint64_t max_poset_elements = 100'000;
};

// C(a + b, a) / (a + b), saturating at UINT64_MAX. For coprime a, b this
// is exactly the number of (a, b)-cores.
std::uint64_t EstimatedCoreCount(Modulus a, Modulus b);

// Number of positive integers not of the form ia + jb, i.e. (a-1)(b-1)/2.
std::uint64_t GapCount(Modulus a, Modulus b);

// Throws InvalidArgument unless a, b >= 1 and gcd(a, b) = 1.
void ValidateCoprime(Modulus a, Modulus b);

// Every sequence of C^+ or C^- for (t, m), each exactly once, in
// lexicographic order starting from the zero sequence.
class SequenceEnumerator {
 public:
  SequenceEnumerator(Modulus t, std::uint64_t m, Family family);

  std::optional<CoreSequence> Next();

 private:
  bool Advance();

  Modulus t_;
  std::uint64_t m_;
  Family family_;
  std::vector<std::uint64_t> current_;
  bool started_ = false;
  bool done_ = false;
};

// Beta-sets of all (a, b)-cores, or only those with distinct parts.
//
// A beta-set is an (a, b)-core iff it is a down-set of the gaps of the
// numerical semigroup <a, b> ordered by x > x - a, x > x - b. Down-sets
// are grown by appending elements in increasing order, so each one has a
// unique construction path and no visited set is needed. The distinct
// filter prunes a branch as soon as x - 1 is already present, which is
// sound because ascending prefixes of a valid set are valid.
//
// Output is depth-first, children in increasing order of the new element;
// the empty set comes first.
class CoreBetaSetEnumerator {
 public:
  // Throws InvalidArgument for non-coprime input and ResourceLimitExceeded
  // when the guard refuses.
  CoreBetaSetEnumerator(Modulus a, Modulus b, bool distinct_only,
                        const ResourceGuard& guard = {});

  std::optional<BetaSet> Next();

  // Moves to the next down-set; false when exhausted. current() holds its
  // elements in increasing order.
  bool Advance();
  const std::vector<std::uint64_t>& current() const { return chosen_; }

  // ab - a - b for a, b >= 2; no emitted element exceeds it.
  std::uint64_t largest_gap() const { return largest_gap_; }

 private:
  bool CanAppend(std::uint64_t x) const;
  std::uint64_t CandidateLimit() const;

  Modulus a_;
  Modulus b_;
  Modulus step_;  // min(a, b)
  bool distinct_only_;
  std::uint64_t largest_gap_ = 0;
  std::vector<char> is_gap_;
  std::vector<char> in_set_;
  std::vector<std::uint64_t> chosen_;
  // cursor_[d] is the next candidate to try as the (d+1)-th element.
  std::vector<std::uint64_t> cursor_;
  bool started_ = false;
};

// |C^+| or |C^-| by a two-state transfer matrix over positions
// (last entry zero / nonzero). Throws OverflowError.
std::uint64_t CountDistinctCore(Modulus t, std::uint64_t m, Family family);

struct FamilyStats {
  std::uint64_t count = 0;
  Size largest_size = 0;
  std::uint64_t maximizer_count = 0;
  Size total_size = 0;

  Rational average_size() const;

  friend bool operator==(const FamilyStats&, const FamilyStats&) = default;
};

// Exact statistics over all (a, b)-cores, optionally only those with
// distinct parts.
FamilyStats ComputeFamilyStats(Modulus a, Modulus b, bool distinct_only,
                               const ResourceGuard& guard = {});

}  // namespace simcore

#endif  // SIMCORE_ENUMERATION_HPP_

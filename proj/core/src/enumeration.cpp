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

#include "simcore/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "simcore/checked.hpp"
#include "simcore/errors.hpp"

namespace simcore {

std::uint64_t EstimatedCoreCount(Modulus a, Modulus b) {
  using checked::UInt128;
  constexpr UInt128 kCap = static_cast<UInt128>(1) << 100;
  const Modulus n = checked::Add(a, b);
  const Modulus k = std::min(a, b);
  // C(n, i) = C(n, i - 1) * (n - i + 1) / i stays exact at every step.
  UInt128 binom = 1;
  for (Modulus i = 1; i <= k; ++i) {
    binom = binom * (n - i + 1) / i;
    if (binom > kCap) return UINT64_MAX;
  }
  const UInt128 count = binom / n;
  return count > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(count);
}

std::uint64_t GapCount(Modulus a, Modulus b) {
  if (a == 0 || b == 0) return 0;
  return checked::Mul(a - 1, b - 1) / 2;
}

void ValidateCoprime(Modulus a, Modulus b) {
  if (a < 1 || b < 1) throw InvalidArgument("moduli must be positive");
  if (std::gcd(a, b) != 1) {
    throw InvalidArgument("moduli " + std::to_string(a) + " and " +
                          std::to_string(b) +
                          " are not coprime; the core family is infinite");
  }
}

SequenceEnumerator::SequenceEnumerator(Modulus t, std::uint64_t m,
                                       Family family)
    : t_(t), m_(m), family_(family) {
  ValidateFamilyParameters(t, m);
}

bool SequenceEnumerator::Advance() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    current_.assign(t_ - 1, 0);
    return true;
  }
  for (std::size_t i = current_.size(); i-- > 0;) {
    const bool left_free = i == 0 || current_[i - 1] == 0;
    if (left_free && current_[i] < EntryBound(t_, m_, family_, i + 1)) {
      ++current_[i];
      std::fill(current_.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                current_.end(), 0);
      return true;
    }
  }
  done_ = true;
  return false;
}

std::optional<CoreSequence> SequenceEnumerator::Next() {
  if (!Advance()) return std::nullopt;
  return CoreSequence(t_, m_, family_, current_);
}

CoreBetaSetEnumerator::CoreBetaSetEnumerator(Modulus a, Modulus b,
                                             bool distinct_only,
                                             const ResourceGuard& guard)
    : a_(a), b_(b), step_(std::min(a, b)), distinct_only_(distinct_only) {
  ValidateCoprime(a, b);
  if (!distinct_only &&
      EstimatedCoreCount(a, b) > guard.max_estimated_count) {
    throw ResourceLimitExceeded(
        "(" + std::to_string(a) + ", " + std::to_string(b) +
        ")-core enumeration exceeds the estimated-count guard of " +
        std::to_string(guard.max_estimated_count));
  }
  if (GapCount(a, b) > guard.max_poset_elements) {
    throw ResourceLimitExceeded(
        "gap poset of <" + std::to_string(a) + ", " + std::to_string(b) +
        "> exceeds the element guard of " +
        std::to_string(guard.max_poset_elements));
  }
  if (a >= 2 && b >= 2) largest_gap_ = checked::Mul(a, b) - a - b;
  std::vector<char> representable(largest_gap_ + 1, 0);
  representable[0] = 1;
  for (std::uint64_t x = 1; x <= largest_gap_; ++x) {
    representable[x] = (x >= a && representable[x - a]) ||
                       (x >= b && representable[x - b]);
  }
  is_gap_.resize(largest_gap_ + 1);
  for (std::uint64_t x = 0; x <= largest_gap_; ++x) {
    is_gap_[x] = !representable[x];
  }
  in_set_.assign(largest_gap_ + 1, 0);
}

std::uint64_t CoreBetaSetEnumerator::CandidateLimit() const {
  // x - min(a, b) must be in the set (or x < min(a, b) for the first
  // element), so nothing past max + min(a, b) can be appended.
  const std::uint64_t reach =
      chosen_.empty() ? step_ - 1 : chosen_.back() + step_;
  return std::min(reach, largest_gap_);
}

bool CoreBetaSetEnumerator::CanAppend(std::uint64_t x) const {
  if (x == 0 || x > largest_gap_ || !is_gap_[x]) return false;
  if (x > a_ && !in_set_[x - a_]) return false;
  if (x > b_ && !in_set_[x - b_]) return false;
  if (distinct_only_ && in_set_[x - 1]) return false;
  return true;
}

bool CoreBetaSetEnumerator::Advance() {
  if (!started_) {
    started_ = true;
    cursor_.push_back(1);
    return true;
  }
  while (!cursor_.empty()) {
    const std::uint64_t limit = CandidateLimit();
    std::uint64_t x = cursor_.back();
    while (x <= limit && !CanAppend(x)) ++x;
    if (x <= limit) {
      cursor_.back() = x + 1;
      chosen_.push_back(x);
      in_set_[x] = 1;
      cursor_.push_back(x + 1);
      return true;
    }
    cursor_.pop_back();
    if (!chosen_.empty()) {
      in_set_[chosen_.back()] = 0;
      chosen_.pop_back();
    }
  }
  return false;
}

std::optional<BetaSet> CoreBetaSetEnumerator::Next() {
  if (!Advance()) return std::nullopt;
  return BetaSet(chosen_);
}

std::uint64_t CountDistinctCore(Modulus t, std::uint64_t m, Family family) {
  ValidateFamilyParameters(t, m);
  std::uint64_t ends_zero = 1;
  std::uint64_t ends_nonzero = 0;
  for (std::uint64_t position = 1; position < t; ++position) {
    const std::uint64_t bound = EntryBound(t, m, family, position);
    const std::uint64_t next_zero = checked::Add(ends_zero, ends_nonzero);
    ends_nonzero = checked::Mul(ends_zero, bound);
    ends_zero = next_zero;
  }
  return checked::Add(ends_zero, ends_nonzero);
}

Rational FamilyStats::average_size() const {
  if (count == 0) throw InvalidArgument("average of an empty family");
  return Rational(checked::Narrow<std::int64_t>(total_size),
                  checked::Narrow<std::int64_t>(count));
}

FamilyStats ComputeFamilyStats(Modulus a, Modulus b, bool distinct_only,
                               const ResourceGuard& guard) {
  CoreBetaSetEnumerator enumerator(a, b, distinct_only, guard);
  FamilyStats stats;
  while (enumerator.Advance()) {
    const auto& elements = enumerator.current();
    Size sum = 0;
    for (std::uint64_t x : elements) sum = checked::Add(sum, x);
    const Size size = checked::Sub(sum, checked::Choose2(elements.size()));
    stats.count = checked::Add<std::uint64_t>(stats.count, 1);
    stats.total_size = checked::Add(stats.total_size, size);
    if (stats.count == 1 || size > stats.largest_size) {
      stats.largest_size = size;
      stats.maximizer_count = 1;
    } else if (size == stats.largest_size) {
      ++stats.maximizer_count;
    }
  }
  return stats;
}

}  // namespace simcore

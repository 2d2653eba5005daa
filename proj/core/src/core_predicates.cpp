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

#include "simcore/core_predicates.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "simcore/checked.hpp"
#include "simcore/errors.hpp"

namespace simcore {

namespace detail {

void ValidateModulus(Modulus t) {
  if (t < 2) {
    throw InvalidArgument("modulus must be >= 2, got " + std::to_string(t));
  }
}

bool SatisfiesAbacus(const BetaSet& b, Modulus modulus) {
  if (modulus == 0) throw InvalidArgument("modulus must be positive");
  for (std::uint64_t x : b.elements()) {
    if (x >= modulus && !b.contains(x - modulus)) return false;
  }
  return true;
}

}  // namespace detail

ResidueProfile::ResidueProfile(Modulus t, std::vector<std::uint64_t> counts)
    : t_(t), counts_(std::move(counts)) {
  detail::ValidateModulus(t_);
  if (counts_.size() != t_ - 1) {
    throw InvalidArgument("residue profile for modulus " + std::to_string(t_) +
                          " needs " + std::to_string(t_ - 1) + " counts");
  }
}

ResidueProfile::ResidueProfile(Modulus t)
    : ResidueProfile(t, std::vector<std::uint64_t>(t < 2 ? 0 : t - 1, 0)) {}

std::uint64_t ResidueProfile::count(std::uint64_t residue) const {
  if (residue < 1 || residue >= t_) {
    throw InvalidArgument("residue out of range 1..t-1");
  }
  return counts_[residue - 1];
}

std::uint64_t ResidueProfile::total() const {
  std::uint64_t sum = 0;
  for (std::uint64_t n : counts_) sum = checked::Add(sum, n);
  return sum;
}

BetaSet ResidueProfile::ToBetaSet() const {
  std::vector<std::uint64_t> elements;
  elements.reserve(total());
  for (std::uint64_t i = 1; i < t_; ++i) {
    for (std::uint64_t j = 0; j < counts_[i - 1]; ++j) {
      elements.push_back(checked::Add(checked::Mul(j, t_), i));
    }
  }
  return BetaSet(std::move(elements));
}

bool IsTCore(const Partition& p, Modulus t) {
  detail::ValidateModulus(t);
  return detail::SatisfiesAbacus(ToBetaSet(p), t);
}

bool IsTCoreByHooks(const Partition& p, Modulus t) {
  detail::ValidateModulus(t);
  for (const auto& row : HookLengths(p)) {
    for (std::uint64_t h : row) {
      if (h % t == 0) return false;
    }
  }
  return true;
}

bool IsSimultaneousCore(const Partition& p, std::span<const Modulus> moduli) {
  for (Modulus t : moduli) detail::ValidateModulus(t);
  const BetaSet beta = ToBetaSet(p);
  for (Modulus t : moduli) {
    if (!detail::SatisfiesAbacus(beta, t)) return false;
  }
  return true;
}

bool HasDistinctParts(const Partition& p) {
  const auto& parts = p.parts();
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    if (parts[i] == parts[i + 1]) return false;
  }
  return true;
}

bool HasConsecutiveElements(const BetaSet& b) {
  const auto& e = b.elements();
  for (std::size_t i = 0; i + 1 < e.size(); ++i) {
    if (e[i] == e[i + 1] + 1) return true;
  }
  return false;
}

ResidueProfile ResidueProfileOf(const Partition& p, Modulus t) {
  detail::ValidateModulus(t);
  const BetaSet beta = ToBetaSet(p);
  if (!detail::SatisfiesAbacus(beta, t)) {
    throw InvalidArgument("partition is not a " + std::to_string(t) + "-core");
  }
  std::vector<std::uint64_t> counts(t - 1, 0);
  for (std::uint64_t x : beta.elements()) {
    // x % t == 0 would chain down to 0, which a minimal beta-set excludes.
    ++counts[x % t - 1];
  }
  return ResidueProfile(t, std::move(counts));
}

Size SizeFromProfile(const ResidueProfile& profile) {
  const Modulus t = profile.modulus();
  Size positive = 0;
  for (std::uint64_t i = 1; i < t; ++i) {
    const std::uint64_t n = profile.count(i);
    positive = checked::Add(positive, checked::Mul(i, n));
    positive = checked::Add(positive, checked::Mul(t, checked::Choose2(n)));
  }
  return checked::Sub(positive, checked::Choose2(profile.total()));
}

}  // namespace simcore

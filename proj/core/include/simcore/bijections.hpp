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

#ifndef SIMCORE_BIJECTIONS_HPP_
#define SIMCORE_BIJECTIONS_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "simcore/core_predicates.hpp"
#include "simcore/partition.hpp"

namespace simcore {

// kPlus: (t, mt + 1)-cores. kMinus: (t, mt - 1)-cores.
enum class Family { kPlus, kMinus };

std::string_view FamilyName(Family family);  // "plus" / "minus"
Family ParseFamily(std::string_view name);

// The second modulus mt + 1 or mt - 1. Throws OverflowError.
Modulus SecondModulus(Modulus t, std::uint64_t m, Family family);

// Throws InvalidArgument unless t >= 2 and m >= 1.
void ValidateFamilyParameters(Modulus t, std::uint64_t m);

// Largest value allowed at 1-based position i of a sequence in the family:
// m everywhere, except m - 1 at position t - 1 for kMinus.
std::uint64_t EntryBound(Modulus t, std::uint64_t m, Family family,
                         std::uint64_t position);

// A sequence (x_1, ..., x_{t-1}) with bounded entries and no two adjacent
// nonzero entries. These are in bijection with the (t, mt +- 1)-cores
// with distinct parts via residue profiles.
class CoreSequence {
 public:
  // Throws InvalidArgument when the entries violate the family's bounds
  // or adjacency rule.
  CoreSequence(Modulus t, std::uint64_t m, Family family,
               std::vector<std::uint64_t> entries);

  static bool IsValid(Modulus t, std::uint64_t m, Family family,
                      const std::vector<std::uint64_t>& entries);

  Modulus t() const { return t_; }
  std::uint64_t m() const { return m_; }
  Family family() const { return family_; }
  const std::vector<std::uint64_t>& entries() const { return entries_; }

  friend bool operator==(const CoreSequence&, const CoreSequence&) = default;

 private:
  Modulus t_;
  std::uint64_t m_;
  Family family_;
  std::vector<std::uint64_t> entries_;
};

// Membership in S^+ (kPlus) or S^- (kMinus): a (t, mt +- 1)-core with
// distinct parts.
bool InFamily(const Partition& p, Modulus t, std::uint64_t m, Family family);

// psi for kPlus, phi for kMinus: the residue profile mod t. Throws
// InvalidArgument if p is not in the family.
CoreSequence ToSequence(const Partition& p, Modulus t, std::uint64_t m,
                        Family family);
// Inverse map: the partition whose beta-set is
// union_i { k t + i : 0 <= k < x_i }.
Partition FromSequence(const CoreSequence& s);

inline CoreSequence Psi(const Partition& p, Modulus t, std::uint64_t m) {
  return ToSequence(p, t, m, Family::kPlus);
}
inline CoreSequence Phi(const Partition& p, Modulus t, std::uint64_t m) {
  return ToSequence(p, t, m, Family::kMinus);
}
// Throw InvalidArgument if `s` belongs to the other family.
Partition PsiInverse(const CoreSequence& s);
Partition PhiInverse(const CoreSequence& s);

CoreSequence ParseSequence(std::string_view text, Modulus t, std::uint64_t m,
                           Family family);
std::string FormatSequence(const CoreSequence& s);

}  // namespace simcore

#endif  // SIMCORE_BIJECTIONS_HPP_

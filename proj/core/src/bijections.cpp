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

#include "simcore/bijections.hpp"

#include <utility>

#include "simcore/checked.hpp"
#include "simcore/errors.hpp"

namespace simcore {

std::string_view FamilyName(Family family) {
  return family == Family::kPlus ? "plus" : "minus";
}

Family ParseFamily(std::string_view name) {
  if (name == "plus") return Family::kPlus;
  if (name == "minus") return Family::kMinus;
  throw ParseError("family must be 'plus' or 'minus', got '" +
                   std::string(name) + "'");
}

void ValidateFamilyParameters(Modulus t, std::uint64_t m) {
  detail::ValidateModulus(t);
  if (m < 1) throw InvalidArgument("multiplier m must be >= 1");
}

Modulus SecondModulus(Modulus t, std::uint64_t m, Family family) {
  const Modulus mt = checked::Mul(m, t);
  return family == Family::kPlus ? checked::Add<Modulus>(mt, 1) : mt - 1;
}

std::uint64_t EntryBound(Modulus t, std::uint64_t m, Family family,
                         std::uint64_t position) {
  return (family == Family::kMinus && position == t - 1) ? m - 1 : m;
}

bool CoreSequence::IsValid(Modulus t, std::uint64_t m, Family family,
                           const std::vector<std::uint64_t>& entries) {
  if (t < 2 || m < 1 || entries.size() != t - 1) return false;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] > EntryBound(t, m, family, i + 1)) return false;
    if (i + 1 < entries.size() && entries[i] != 0 && entries[i + 1] != 0) {
      return false;
    }
  }
  return true;
}

CoreSequence::CoreSequence(Modulus t, std::uint64_t m, Family family,
                           std::vector<std::uint64_t> entries)
    : t_(t), m_(m), family_(family), entries_(std::move(entries)) {
  ValidateFamilyParameters(t_, m_);
  if (!IsValid(t_, m_, family_, entries_)) {
    throw InvalidArgument("sequence " + FormatIntegerList(entries_) +
                          " is not in C" +
                          (family_ == Family::kPlus ? "+" : "-") + " for t=" +
                          std::to_string(t_) + ", m=" + std::to_string(m_));
  }
}

bool InFamily(const Partition& p, Modulus t, std::uint64_t m, Family family) {
  ValidateFamilyParameters(t, m);
  if (!HasDistinctParts(p)) return false;
  const BetaSet beta = ToBetaSet(p);
  return detail::SatisfiesAbacus(beta, t) &&
         detail::SatisfiesAbacus(beta, SecondModulus(t, m, family));
}

CoreSequence ToSequence(const Partition& p, Modulus t, std::uint64_t m,
                        Family family) {
  if (!InFamily(p, t, m, family)) {
    throw InvalidArgument("partition " + FormatPartition(p) +
                          " is not a (" + std::to_string(t) + ", " +
                          std::to_string(SecondModulus(t, m, family)) +
                          ")-core with distinct parts");
  }
  return CoreSequence(t, m, family, ResidueProfileOf(p, t).counts());
}

Partition FromSequence(const CoreSequence& s) {
  return FromBetaSet(ResidueProfile(s.t(), s.entries()).ToBetaSet());
}

Partition PsiInverse(const CoreSequence& s) {
  if (s.family() != Family::kPlus) {
    throw InvalidArgument("psi inverse needs a C+ sequence");
  }
  return FromSequence(s);
}

Partition PhiInverse(const CoreSequence& s) {
  if (s.family() != Family::kMinus) {
    throw InvalidArgument("phi inverse needs a C- sequence");
  }
  return FromSequence(s);
}

CoreSequence ParseSequence(std::string_view text, Modulus t, std::uint64_t m,
                           Family family) {
  return CoreSequence(t, m, family, ParseIntegerList(text));
}

std::string FormatSequence(const CoreSequence& s) {
  return FormatIntegerList(s.entries());
}

}  // namespace simcore

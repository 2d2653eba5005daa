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

#ifndef SIMCORE_EXTREMAL_HPP_
#define SIMCORE_EXTREMAL_HPP_

#include <cstdint>
#include <vector>

#include "simcore/bijections.hpp"
#include "simcore/partition.hpp"
#include "simcore/rational.hpp"

// Closed forms for the largest size of a (t, mt +- 1)-core partition with
// distinct parts, and the partitions attaining it.
//
// Every maximizer has a residue profile mod t in which each nonzero class
// count is saturated (m, or m - 1 in class t - 1 for the minus family) and
// the nonzero classes form an arithmetic progression of step 2 ending at
// t - 1 (the lambda^r candidates) or, for the minus family only, at t - 2
// (the mu^s candidates). Their sizes are concave quadratics in the index
// whose vertices sit at alpha(m, t, x) for x = 1 (plus), 3 and -1 (minus).
// All dispatch is done on exact rationals.
namespace simcore {

// (mt + t + x) / (2(m + 2)).
Rational Alpha(std::uint64_t m, Modulus t, std::int64_t x);

// |lambda^r| for 1 <= r <= floor(t/2). For kMinus this is F(r).
std::int64_t SizeLambdaR(std::uint64_t m, Modulus t, std::uint64_t r,
                         Family family);
// |mu^s| = G(s) for 1 <= s <= floor((t-1)/2).
std::int64_t SizeMuS(std::uint64_t m, Modulus t, std::uint64_t s);

// lambda^r: n_i = m for i = t + 1 - 2j, 1 <= j <= r (kPlus), or
// n_{t-1} = m - 1 and n_i = m for i = t + 1 - 2j, 2 <= j <= r (kMinus).
CoreSequence LambdaRSequence(std::uint64_t m, Modulus t, std::uint64_t r,
                             Family family);
// mu^s: n_i = m for i = t - 2j, 1 <= j <= s.
CoreSequence MuSSequence(std::uint64_t m, Modulus t, std::uint64_t s);

Partition BuildLambdaR(std::uint64_t m, Modulus t, std::uint64_t r,
                       Family family);
Partition BuildMuS(std::uint64_t m, Modulus t, std::uint64_t s);

struct ExtremalReport {
  Modulus t = 0;
  std::uint64_t m = 0;
  Family family = Family::kPlus;
  Size largest_size = 0;
  std::uint64_t maximizer_count = 0;
  // lambda^r witnesses by increasing r, then mu^s by increasing s.
  std::vector<Partition> maximizers;

  Modulus b() const { return SecondModulus(t, m, family); }

  friend bool operator==(const ExtremalReport&,
                         const ExtremalReport&) = default;
};

// Largest size and maximizers of (t, mt + 1)-cores with distinct parts.
// There are two maximizers exactly when {alpha(m, t, 1)} = 1/2.
ExtremalReport ExtremalPlus(Modulus t, std::uint64_t m);

// Largest size and maximizers of (t, mt - 1)-cores with distinct parts.
// For m >= 2 the answer is max(F(r), G(s)) with r and s read off
// alpha(m, t, 3) and alpha(m, t, -1), except that for small t (odd
// t <= m + 1, even t <= 2m + 3) s is pinned to floor((t - 1)/2).
// m = 1 is the (t - 1, t) case of ExtremalPlus.
ExtremalReport ExtremalMinus(Modulus t, std::uint64_t m);

ExtremalReport Extremal(Modulus t, std::uint64_t m, Family family);

// (t, t + 1)-cores with distinct parts: floor(t(t+1)/6), with two
// maximizers iff t = 1 mod 3.
ExtremalReport LargestTTPlus1(Modulus t);

}  // namespace simcore

#endif  // SIMCORE_EXTREMAL_HPP_

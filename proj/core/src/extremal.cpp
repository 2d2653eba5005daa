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

#include "simcore/extremal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "simcore/checked.hpp"
#include "simcore/errors.hpp"

namespace simcore {

namespace {

using checked::Add;
using checked::Mul;
using checked::Sub;

const Rational kHalf(1, 2);

// (linear * x - (m^2 + 2m) * x^2) / 2 + constant, for any integer x.
std::int64_t SizeQuadratic(std::int64_t m, std::int64_t x,
                           std::int64_t linear, std::int64_t constant) {
  const std::int64_t curvature = Add(Mul(m, m), Mul<std::int64_t>(2, m));
  const std::int64_t twice =
      Sub(Mul(linear, x), Mul(curvature, Mul(x, x)));
  if (twice % 2 != 0) {
    throw std::logic_error("size polynomial is not integral");
  }
  return Add(twice / 2, constant);
}

// m^2 t + m t + c m.
std::int64_t LinearCoefficient(std::int64_t m, std::int64_t t, std::int64_t c) {
  return Add(Add(Mul(Mul(m, m), t), Mul(m, t)), Mul(c, m));
}

std::int64_t PlusPolynomial(std::int64_t m, std::int64_t t, std::int64_t r) {
  return SizeQuadratic(m, r, LinearCoefficient(m, t, 1), 0);
}

std::int64_t FPolynomial(std::int64_t m, std::int64_t t, std::int64_t r) {
  return SizeQuadratic(m, r, LinearCoefficient(m, t, 3),
                       Sub<std::int64_t>(0, Mul(m, t)));
}

std::int64_t GPolynomial(std::int64_t m, std::int64_t t, std::int64_t s) {
  return SizeQuadratic(m, s, LinearCoefficient(m, t, -1), 0);
}

// floor(alpha) when {alpha} <= 1/2, else floor(alpha) + 1.
std::int64_t RoundHalfDown(const Rational& alpha) {
  return alpha.FractionalPart() <= kHalf ? alpha.Floor() : alpha.Floor() + 1;
}

// The integer maximizers of a strictly concave quadratic with vertex at
// `vertex`, restricted to [lo, hi], lie in this set.
std::vector<std::int64_t> VertexCandidates(const Rational& vertex,
                                           std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  if (lo > hi) return out;
  for (std::int64_t x : {vertex.Floor(), vertex.Floor() + 1}) {
    const std::int64_t c = std::clamp(x, lo, hi);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t ToSigned(std::uint64_t v) {
  return checked::Narrow<std::int64_t>(v);
}

void ValidateIndex(std::uint64_t index, std::uint64_t hi, const char* what) {
  if (index < 1 || index > hi) {
    throw InvalidArgument(std::string(what) + " index " +
                          std::to_string(index) + " outside 1.." +
                          std::to_string(hi));
  }
}

ExtremalReport EmptyPartitionReport(Modulus t, std::uint64_t m,
                                    Family family) {
  ExtremalReport report;
  report.t = t;
  report.m = m;
  report.family = family;
  report.largest_size = 0;
  report.maximizer_count = 1;
  report.maximizers = {Partition()};
  return report;
}

}  // namespace

Rational Alpha(std::uint64_t m, Modulus t, std::int64_t x) {
  ValidateFamilyParameters(t, m);
  const std::int64_t sm = ToSigned(m);
  const std::int64_t st = ToSigned(t);
  const std::int64_t numerator = Add(Add(Mul(sm, st), st), x);
  return Rational(numerator, Mul<std::int64_t>(2, Add<std::int64_t>(sm, 2)));
}

std::int64_t SizeLambdaR(std::uint64_t m, Modulus t, std::uint64_t r,
                         Family family) {
  ValidateFamilyParameters(t, m);
  ValidateIndex(r, t / 2, "lambda^r");
  return family == Family::kPlus
             ? PlusPolynomial(ToSigned(m), ToSigned(t), ToSigned(r))
             : FPolynomial(ToSigned(m), ToSigned(t), ToSigned(r));
}

std::int64_t SizeMuS(std::uint64_t m, Modulus t, std::uint64_t s) {
  ValidateFamilyParameters(t, m);
  ValidateIndex(s, (t - 1) / 2, "mu^s");
  return GPolynomial(ToSigned(m), ToSigned(t), ToSigned(s));
}

CoreSequence LambdaRSequence(std::uint64_t m, Modulus t, std::uint64_t r,
                             Family family) {
  ValidateFamilyParameters(t, m);
  ValidateIndex(r, t / 2, "lambda^r");
  // entries[i - 1] = n_i; residue t + 1 - 2j sits at index t - 2j.
  std::vector<std::uint64_t> entries(t - 1, 0);
  for (std::uint64_t j = 1; j <= r; ++j) entries[t - 2 * j] = m;
  if (family == Family::kMinus) entries[t - 2] = m - 1;
  return CoreSequence(t, m, family, std::move(entries));
}

CoreSequence MuSSequence(std::uint64_t m, Modulus t, std::uint64_t s) {
  ValidateFamilyParameters(t, m);
  ValidateIndex(s, (t - 1) / 2, "mu^s");
  std::vector<std::uint64_t> entries(t - 1, 0);
  for (std::uint64_t j = 1; j <= s; ++j) entries[t - 2 * j - 1] = m;
  return CoreSequence(t, m, Family::kMinus, std::move(entries));
}

Partition BuildLambdaR(std::uint64_t m, Modulus t, std::uint64_t r,
                       Family family) {
  return FromSequence(LambdaRSequence(m, t, r, family));
}

Partition BuildMuS(std::uint64_t m, Modulus t, std::uint64_t s) {
  return FromSequence(MuSSequence(m, t, s));
}

ExtremalReport ExtremalPlus(Modulus t, std::uint64_t m) {
  ValidateFamilyParameters(t, m);
  const std::int64_t sm = ToSigned(m);
  const std::int64_t st = ToSigned(t);
  const Rational alpha = Alpha(m, t, 1);

  const std::int64_t largest = PlusPolynomial(sm, st, RoundHalfDown(alpha));
  const std::uint64_t expected_count =
      alpha.FractionalPart() == kHalf ? 2 : 1;

  ExtremalReport report;
  report.t = t;
  report.m = m;
  report.family = Family::kPlus;
  report.largest_size = checked::Narrow<Size>(largest);
  for (std::int64_t r : VertexCandidates(alpha, 1, st / 2)) {
    const std::int64_t size = PlusPolynomial(sm, st, r);
    if (size > largest) {
      throw std::logic_error("lambda^" + std::to_string(r) +
                             " exceeds the closed-form largest size");
    }
    if (size == largest) {
      report.maximizers.push_back(
          BuildLambdaR(m, t, static_cast<std::uint64_t>(r), Family::kPlus));
    }
  }
  report.maximizer_count = report.maximizers.size();
  if (report.maximizer_count != expected_count) {
    throw std::logic_error("maximizer count disagrees with {alpha} test");
  }
  return report;
}

ExtremalReport ExtremalMinus(Modulus t, std::uint64_t m) {
  ValidateFamilyParameters(t, m);
  if (m == 1) {
    // (t, t - 1)-cores are (t - 1, t)-cores.
    if (t == 2) return EmptyPartitionReport(t, m, Family::kMinus);
    ExtremalReport report = ExtremalPlus(t - 1, 1);
    report.t = t;
    report.m = m;
    report.family = Family::kMinus;
    return report;
  }

  const std::int64_t sm = ToSigned(m);
  const std::int64_t st = ToSigned(t);
  const Rational alpha_f = Alpha(m, t, 3);
  const Rational alpha_g = Alpha(m, t, -1);

  const bool vertex_inside = (t % 2 == 1 && t > m + 1) ||
                             (t % 2 == 0 && t > Add<std::uint64_t>(Mul<std::uint64_t>(2, m), 3));
  const std::int64_t r_star = RoundHalfDown(alpha_f);
  const std::int64_t s_star =
      vertex_inside ? RoundHalfDown(alpha_g) : (st - 1) / 2;
  const std::int64_t largest =
      std::max(FPolynomial(sm, st, r_star), GPolynomial(sm, st, s_star));

  ExtremalReport report;
  report.t = t;
  report.m = m;
  report.family = Family::kMinus;
  report.largest_size = checked::Narrow<Size>(largest);

  for (std::int64_t r : VertexCandidates(alpha_f, 1, st / 2)) {
    const std::int64_t size = FPolynomial(sm, st, r);
    if (size > largest) {
      throw std::logic_error("lambda^" + std::to_string(r) +
                             " exceeds the closed-form largest size");
    }
    if (size == largest) {
      report.maximizers.push_back(
          BuildLambdaR(m, t, static_cast<std::uint64_t>(r), Family::kMinus));
    }
  }
  for (std::int64_t s : VertexCandidates(alpha_g, 1, (st - 1) / 2)) {
    const std::int64_t size = GPolynomial(sm, st, s);
    if (size > largest) {
      throw std::logic_error("mu^" + std::to_string(s) +
                             " exceeds the closed-form largest size");
    }
    if (size == largest) {
      report.maximizers.push_back(
          BuildMuS(m, t, static_cast<std::uint64_t>(s)));
    }
  }
  report.maximizer_count = report.maximizers.size();
  if (report.maximizer_count < 1 || report.maximizer_count > 2) {
    throw std::logic_error("closed form yields " +
                           std::to_string(report.maximizer_count) +
                           " maximizers; expected 1 or 2");
  }
  return report;
}

ExtremalReport Extremal(Modulus t, std::uint64_t m, Family family) {
  return family == Family::kPlus ? ExtremalPlus(t, m) : ExtremalMinus(t, m);
}

ExtremalReport LargestTTPlus1(Modulus t) {
  detail::ValidateModulus(t);
  ExtremalReport report;
  report.t = t;
  report.m = 1;
  report.family = Family::kPlus;
  report.largest_size = Mul<Size>(t, Add<Size>(t, 1)) / 6;
  const std::uint64_t expected_count = t % 3 == 1 ? 2 : 1;
  const std::int64_t target = checked::Narrow<std::int64_t>(report.largest_size);
  for (std::uint64_t r = 1; r <= t / 2; ++r) {
    if (SizeLambdaR(1, t, r, Family::kPlus) == target) {
      report.maximizers.push_back(BuildLambdaR(1, t, r, Family::kPlus));
    }
  }
  report.maximizer_count = report.maximizers.size();
  if (report.maximizer_count != expected_count) {
    throw std::logic_error("lambda^r scan disagrees with the t mod 3 count");
  }
  return report;
}

}  // namespace simcore

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

#include "support/oracles.hpp"

#include <algorithm>
#include <functional>

namespace simcore::testing {

Partition Conjugate(const Partition& p) {
  std::vector<Part> out(p.empty() ? 0 : p[0], 0);
  for (Part row : p.parts()) {
    for (Part j = 0; j < row; ++j) ++out[j];
  }
  return Partition(std::move(out));
}

Partition RandomPartition(std::mt19937_64& rng, std::uint64_t max_part,
                          std::uint64_t max_length) {
  std::uniform_int_distribution<std::uint64_t> length_dist(0, max_length);
  std::uniform_int_distribution<std::uint64_t> part_dist(1, max_part);
  std::vector<Part> parts(length_dist(rng));
  for (Part& x : parts) x = part_dist(rng);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition RandomDistinctPartition(std::mt19937_64& rng,
                                  std::uint64_t max_part) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Part> parts;
  for (Part x = max_part; x >= 1; --x) {
    if (coin(rng)) parts.push_back(x);
  }
  return Partition(std::move(parts));
}

void ForEachPartitionWithinHook(
    std::uint64_t max_hook, const std::function<void(const Partition&)>& visit) {
  // Build rows top-down; a partition with first part f and length l has
  // first hook f + l - 1.
  std::vector<Part> rows;
  std::function<void(Part)> extend = [&](Part cap) {
    visit(Partition(rows));
    for (Part x = 1; x <= cap; ++x) {
      const std::uint64_t first = rows.empty() ? x : rows.front();
      if (first + rows.size() > max_hook) continue;  // hook after appending
      rows.push_back(x);
      extend(x);
      rows.pop_back();
    }
  };
  extend(max_hook);
}

namespace {

bool HookCore(const Partition& p, std::uint64_t a, std::uint64_t b) {
  // Straight from the definition of hook length.
  const Partition conj = Conjugate(p);
  for (std::size_t i = 0; i < p.length(); ++i) {
    for (std::size_t j = 0; j < p[i]; ++j) {
      const std::uint64_t h = (p[i] - j - 1) + (conj[j] - i - 1) + 1;
      if (h % a == 0 || h % b == 0) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Partition> HookBruteForceCores(std::uint64_t a, std::uint64_t b,
                                           bool distinct_only) {
  std::vector<Partition> out;
  const std::uint64_t bound = a * b > a + b ? a * b - a - b : 0;
  ForEachPartitionWithinHook(bound, [&](const Partition& p) {
    if (distinct_only) {
      for (std::size_t i = 0; i + 1 < p.length(); ++i) {
        if (p[i] == p[i + 1]) return;
      }
    }
    if (HookCore(p, a, b)) out.push_back(p);
  });
  return out;
}

std::vector<std::vector<std::uint64_t>> BoxFilteredSequences(
    std::uint64_t t, std::uint64_t m, Family family) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> x(t - 1, 0);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < x.size() && ok; ++i) {
      const bool last = i + 1 == x.size();
      const std::uint64_t bound =
          (family == Family::kMinus && last) ? m - 1 : m;
      if (x[i] > bound) ok = false;
      if (!last && x[i] * x[i + 1] != 0) ok = false;
    }
    if (ok) out.push_back(x);
    std::size_t i = 0;
    while (i < x.size() && x[i] == m) x[i++] = 0;
    if (i == x.size()) break;
    ++x[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t ProfileSizeByListing(std::uint64_t t,
                                  const std::vector<std::uint64_t>& counts) {
  std::vector<std::int64_t> beta;
  for (std::uint64_t i = 1; i < t; ++i) {
    for (std::uint64_t j = 0; j < counts[i - 1]; ++j) {
      beta.push_back(static_cast<std::int64_t>(j * t + i));
    }
  }
  std::sort(beta.begin(), beta.end(), std::greater<>());
  // Part i is beta_i - (len - 1 - i); sum the parts themselves.
  const auto len = static_cast<std::int64_t>(beta.size());
  std::int64_t total = 0;
  for (std::int64_t i = 0; i < len; ++i) total += beta[i] - (len - 1 - i);
  return total;
}

std::uint64_t Fibonacci(unsigned n) {
  std::uint64_t prev = 0;
  std::uint64_t cur = 1;
  for (unsigned i = 1; i < n; ++i) {
    const std::uint64_t next = prev + cur;
    prev = cur;
    cur = next;
  }
  return n == 0 ? 0 : cur;
}

}  // namespace simcore::testing

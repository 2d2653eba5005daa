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

#include "simcore/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <utility>

#include "simcore/checked.hpp"
#include "simcore/errors.hpp"

namespace simcore {

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) {
      throw InvalidArgument("partition parts must be positive");
    }
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
      throw InvalidArgument("partition parts must be weakly decreasing");
    }
  }
}

Size Partition::size() const {
  Size total = 0;
  for (Part x : parts_) total = checked::Add(total, x);
  return total;
}

BetaSet::BetaSet(std::vector<std::uint64_t> elements)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end(), std::greater<>());
  if (std::adjacent_find(elements_.begin(), elements_.end()) !=
      elements_.end()) {
    throw InvalidArgument("beta-set elements must be distinct");
  }
}

bool BetaSet::contains(std::uint64_t x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x,
                            std::greater<>());
}

HookMatrix HookLengths(const Partition& p) {
  const auto& parts = p.parts();
  // column_length[j] = #{k : parts[k] > j}, 0-based columns.
  std::vector<std::uint64_t> column_length(parts.empty() ? 0 : parts.front(),
                                           0);
  for (Part row : parts) {
    for (Part j = 0; j < row; ++j) ++column_length[j];
  }
  HookMatrix hooks;
  hooks.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<std::uint64_t> row(parts[i]);
    for (Part j = 0; j < parts[i]; ++j) {
      const std::uint64_t arm = parts[i] - j - 1;
      const std::uint64_t leg = column_length[j] - i - 1;
      row[j] = checked::Add<std::uint64_t>(checked::Add(arm, leg), 1);
    }
    hooks.push_back(std::move(row));
  }
  return hooks;
}

BetaSet ToBetaSet(const Partition& p) {
  const std::size_t len = p.length();
  std::vector<std::uint64_t> elements(len);
  for (std::size_t i = 0; i < len; ++i) {
    elements[i] = checked::Add<std::uint64_t>(p[i], len - 1 - i);
  }
  return BetaSet(std::move(elements));
}

Partition FromBetaSet(const BetaSet& b) {
  if (!b.normalized()) {
    throw InvalidArgument("beta-set contains 0 and is not a minimal beta-set");
  }
  const auto& elements = b.elements();
  const std::size_t len = elements.size();
  std::vector<Part> parts(len);
  for (std::size_t i = 0; i < len; ++i) {
    // Strictly decreasing with minimum >= 1 gives elements[i] >= len - i.
    parts[i] = elements[i] - (len - 1 - i);
  }
  return Partition(std::move(parts));
}

Size SizeFromBeta(const BetaSet& b) {
  if (!b.normalized()) {
    throw InvalidArgument("beta-set contains 0 and is not a minimal beta-set");
  }
  Size total = 0;
  for (std::uint64_t x : b.elements()) total = checked::Add(total, x);
  return checked::Sub(total, checked::Choose2(b.size()));
}

namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<std::uint64_t> ParseIntegerList(std::string_view text) {
  std::vector<std::uint64_t> values;
  text = Trim(text);
  if (text.empty()) return values;
  while (true) {
    const std::size_t comma = text.find(',');
    const std::string_view token = Trim(text.substr(0, comma));
    if (token.empty()) {
      throw ParseError("empty entry in integer list");
    }
    std::uint64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range) {
      throw ParseError("integer out of range: " + std::string(token));
    }
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("not a nonnegative integer: " + std::string(token));
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return values;
}

std::string FormatIntegerList(std::span<const std::uint64_t> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

Partition ParsePartition(std::string_view text) {
  try {
    return Partition(ParseIntegerList(text));
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

std::string FormatPartition(const Partition& p) {
  return FormatIntegerList(p.parts());
}

BetaSet ParseBetaSet(std::string_view text) {
  try {
    return BetaSet(ParseIntegerList(text));
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

std::string FormatBetaSet(const BetaSet& b) {
  return FormatIntegerList(b.elements());
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << '(' << FormatPartition(p) << ')';
}

std::ostream& operator<<(std::ostream& os, const BetaSet& b) {
  return os << '{' << FormatBetaSet(b) << '}';
}

}  // namespace simcore

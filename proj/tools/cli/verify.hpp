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

#ifndef SIMCORE_TOOLS_CLI_VERIFY_HPP_
#define SIMCORE_TOOLS_CLI_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "simcore/bijections.hpp"
#include "simcore/enumeration.hpp"

namespace simcore::cli {

struct InclusiveRange {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

// "A..B" (inclusive) or a single "A". Throws ParseError; empty ranges
// (A > B) are rejected.
InclusiveRange ParseRange(std::string_view text);

struct VerifySuiteConfig {
  std::string suite;  // thm-plus, thm-minus, bijections, classical
  InclusiveRange t_range{2, 12};
  InclusiveRange m_range{1, 5};
  unsigned parallelism = 1;
  bool fail_fast = false;
  ResourceGuard guard;
};

struct Discrepancy {
  std::string suite;
  std::string cell;   // e.g. "t=7 m=3 family=plus" or "a=3 b=4"
  std::string check;  // which comparison failed
  std::string expected;
  std::string actual;
};

struct VerifyResult {
  std::string suite;
  std::uint64_t cells = 0;
  // Cells whose governing {alpha} is exactly 1/2.
  std::uint64_t knife_edge_cells = 0;
  std::vector<Discrepancy> discrepancies;
  double seconds = 0;

  bool passed() const { return discrepancies.empty(); }
};

nlohmann::json ToJson(const VerifyResult& result);

// Names accepted by RunVerifySuite.
const std::vector<std::string>& VerifySuiteNames();

// Runs every cell of the suite on a pool of config.parallelism workers.
// Per-cell progress goes to `progress` when non-null. Throws
// InvalidArgument for an unknown suite or out-of-domain ranges, and
// ResourceLimitExceeded when a cell would exceed the guard.
VerifyResult RunVerifySuite(const VerifySuiteConfig& config,
                            std::ostream* progress);

}  // namespace simcore::cli

#endif  // SIMCORE_TOOLS_CLI_VERIFY_HPP_

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

#ifndef SIMCORE_JSON_IO_HPP_
#define SIMCORE_JSON_IO_HPP_

#include <nlohmann/json.hpp>

#include "simcore/enumeration.hpp"
#include "simcore/extremal.hpp"
#include "simcore/partition.hpp"

namespace simcore {

nlohmann::json ToJson(const Partition& p);
Partition PartitionFromJson(const nlohmann::json& j);

// {"t", "m", "b", "family": "plus"|"minus", "largest_size",
//  "maximizer_count", "maximizers": [[parts...], ...]}
nlohmann::json ToJson(const ExtremalReport& report);
// Throws ParseError on schema violations.
ExtremalReport ExtremalReportFromJson(const nlohmann::json& j);

struct FamilyStatsRecord {
  Modulus a = 0;
  Modulus b = 0;
  bool distinct_only = false;
  FamilyStats stats;

  friend bool operator==(const FamilyStatsRecord&,
                         const FamilyStatsRecord&) = default;
};

// {"a", "b", "distinct_only", "count", "largest_size", "maximizer_count",
//  "total_size", "average_size": "p/q"}
nlohmann::json ToJson(const FamilyStatsRecord& record);
FamilyStatsRecord FamilyStatsRecordFromJson(const nlohmann::json& j);

}  // namespace simcore

#endif  // SIMCORE_JSON_IO_HPP_

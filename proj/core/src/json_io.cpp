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

#include "simcore/json_io.hpp"

#include <string>
#include <vector>

#include "simcore/errors.hpp"

namespace simcore {

namespace {

using nlohmann::json;

const json& Field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::uint64_t UnsignedField(const json& j, const char* key) {
  const json& v = Field(j, key);
  if (!v.is_number_unsigned()) {
    throw ParseError(std::string("field '") + key +
                     "' must be a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

Rational ParseRational(const std::string& text) {
  const std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)),
                    std::stoll(text.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw ParseError("not a rational: " + text);
  }
}

}  // namespace

json ToJson(const Partition& p) { return json(p.parts()); }

Partition PartitionFromJson(const json& j) {
  if (!j.is_array()) throw ParseError("partition must be a JSON array");
  std::vector<Part> parts;
  for (const json& v : j) {
    if (!v.is_number_unsigned()) {
      throw ParseError("partition parts must be nonnegative integers");
    }
    parts.push_back(v.get<Part>());
  }
  try {
    return Partition(std::move(parts));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

json ToJson(const ExtremalReport& report) {
  json maximizers = json::array();
  for (const Partition& p : report.maximizers) maximizers.push_back(ToJson(p));
  return json{{"t", report.t},
              {"m", report.m},
              {"b", report.b()},
              {"family", std::string(FamilyName(report.family))},
              {"largest_size", report.largest_size},
              {"maximizer_count", report.maximizer_count},
              {"maximizers", std::move(maximizers)}};
}

ExtremalReport ExtremalReportFromJson(const json& j) {
  ExtremalReport report;
  report.t = UnsignedField(j, "t");
  const json& family = Field(j, "family");
  if (!family.is_string()) throw ParseError("field 'family' must be a string");
  report.family = ParseFamily(family.get<std::string>());
  const std::uint64_t b = UnsignedField(j, "b");
  if (report.t < 2) throw ParseError("field 't' must be >= 2");
  // m is recoverable from b; when both are present they must agree.
  const std::uint64_t mt = report.family == Family::kPlus ? b - 1 : b + 1;
  if (b == 0 || mt % report.t != 0) {
    throw ParseError("field 'b' is not m*t +- 1 for the given t and family");
  }
  report.m = mt / report.t;
  if (j.contains("m") && UnsignedField(j, "m") != report.m) {
    throw ParseError("fields 'm' and 'b' disagree");
  }
  report.largest_size = UnsignedField(j, "largest_size");
  report.maximizer_count = UnsignedField(j, "maximizer_count");
  const json& maximizers = Field(j, "maximizers");
  if (!maximizers.is_array()) throw ParseError("'maximizers' must be an array");
  for (const json& p : maximizers) {
    report.maximizers.push_back(PartitionFromJson(p));
  }
  if (report.maximizers.size() != report.maximizer_count) {
    throw ParseError("'maximizer_count' disagrees with 'maximizers'");
  }
  return report;
}

json ToJson(const FamilyStatsRecord& record) {
  const FamilyStats& s = record.stats;
  return json{{"a", record.a},
              {"b", record.b},
              {"distinct_only", record.distinct_only},
              {"count", s.count},
              {"largest_size", s.largest_size},
              {"maximizer_count", s.maximizer_count},
              {"total_size", s.total_size},
              {"average_size", s.average_size().ToString()}};
}

FamilyStatsRecord FamilyStatsRecordFromJson(const json& j) {
  FamilyStatsRecord record;
  record.a = UnsignedField(j, "a");
  record.b = UnsignedField(j, "b");
  const json& distinct = Field(j, "distinct_only");
  if (!distinct.is_boolean()) {
    throw ParseError("field 'distinct_only' must be a boolean");
  }
  record.distinct_only = distinct.get<bool>();
  record.stats.count = UnsignedField(j, "count");
  record.stats.largest_size = UnsignedField(j, "largest_size");
  record.stats.maximizer_count = UnsignedField(j, "maximizer_count");
  record.stats.total_size = UnsignedField(j, "total_size");
  const json& average = Field(j, "average_size");
  if (!average.is_string()) {
    throw ParseError("field 'average_size' must be a \"p/q\" string");
  }
  if (ParseRational(average.get<std::string>()) !=
      record.stats.average_size()) {
    throw ParseError("'average_size' disagrees with total_size / count");
  }
  return record;
}

}  // namespace simcore

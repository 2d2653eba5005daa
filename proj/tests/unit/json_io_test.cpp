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

#include <sstream>

#include "gtest/gtest.h"
#include "simcore/errors.hpp"
#include "simcore/stream_writer.hpp"

namespace simcore {
namespace {

using nlohmann::json;

TEST(ExtremalJsonTest, DocumentedSchema) {
  const json j = ToJson(ExtremalPlus(10, 1));
  EXPECT_EQ(j, json::parse(R"({"t":10,"m":1,"b":11,"family":"plus",
      "largest_size":18,"maximizer_count":2,
      "maximizers":[[7,6,5],[6,5,4,3]]})"));
  EXPECT_EQ(ToJson(ExtremalMinus(2, 1))["maximizers"], json::parse("[[]]"));
}

TEST(ExtremalJsonTest, RoundTripsAcrossGrid) {
  for (Modulus t = 2; t <= 20; ++t) {
    for (std::uint64_t m = 1; m <= 6; ++m) {
      for (Family family : {Family::kPlus, Family::kMinus}) {
        const ExtremalReport report = Extremal(t, m, family);
        const json dumped = json::parse(ToJson(report).dump());
        ASSERT_EQ(ExtremalReportFromJson(dumped), report);
      }
    }
  }
}

TEST(ExtremalJsonTest, ReaderRejectsSchemaViolations) {
  json j = ToJson(ExtremalPlus(7, 3));
  json missing = j;
  missing.erase("largest_size");
  EXPECT_THROW(ExtremalReportFromJson(missing), ParseError);
  json bad_count = j;
  bad_count["maximizer_count"] = 2;
  EXPECT_THROW(ExtremalReportFromJson(bad_count), ParseError);
  json bad_b = j;
  bad_b["b"] = 23;
  EXPECT_THROW(ExtremalReportFromJson(bad_b), ParseError);
  json bad_family = j;
  bad_family["family"] = "both";
  EXPECT_THROW(ExtremalReportFromJson(bad_family), ParseError);
  json bad_partition = j;
  bad_partition["maximizers"] = json::parse("[[1,2]]");
  bad_partition["maximizer_count"] = 1;
  EXPECT_THROW(ExtremalReportFromJson(bad_partition), ParseError);
  json no_m = j;
  no_m.erase("m");
  EXPECT_EQ(ExtremalReportFromJson(no_m), ExtremalPlus(7, 3));
}

TEST(FamilyStatsJsonTest, RoundTrip) {
  const FamilyStatsRecord record{3, 4, false, ComputeFamilyStats(3, 4, false)};
  const json j = ToJson(record);
  EXPECT_EQ(j["average_size"], "2");
  EXPECT_EQ(j["count"], 5);
  EXPECT_EQ(FamilyStatsRecordFromJson(j), record);

  const FamilyStatsRecord distinct{5, 7, true, ComputeFamilyStats(5, 7, true)};
  EXPECT_EQ(FamilyStatsRecordFromJson(json::parse(ToJson(distinct).dump())),
            distinct);

  json wrong = j;
  wrong["average_size"] = "7/3";
  EXPECT_THROW(FamilyStatsRecordFromJson(wrong), ParseError);
}

TEST(RecordWriterTest, TextJsonCsv) {
  std::ostringstream text;
  RecordWriter tw(text, StreamFormat::kText, RecordKind::kPartition);
  tw.Write(Partition());
  tw.Write(Partition({1}));
  EXPECT_EQ(text.str(), "\n1\n");

  std::ostringstream js;
  RecordWriter jw(js, StreamFormat::kJson, RecordKind::kBetaSet);
  jw.Write(BetaSet({9, 3, 2}));
  EXPECT_EQ(js.str(), "{\"beta\":[9,3,2],\"size\":11}\n");

  std::ostringstream csv;
  RecordWriter cw(csv, StreamFormat::kCsv, RecordKind::kSequence);
  cw.Write(CoreSequence(7, 2, Family::kMinus, {0, 0, 2, 0, 2, 0}));
  EXPECT_EQ(csv.str(), "size,sequence,parts\n24,\"0,0,2,0,2,0\",\"9,8,4,3\"\n");

  EXPECT_EQ(ParseStreamFormat("csv"), StreamFormat::kCsv);
  EXPECT_THROW(ParseStreamFormat("xml"), ParseError);
}

}  // namespace
}  // namespace simcore

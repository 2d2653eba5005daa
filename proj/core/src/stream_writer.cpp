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

#include "simcore/stream_writer.hpp"

#include <string>

#include <nlohmann/json.hpp>

#include "simcore/errors.hpp"

namespace simcore {

StreamFormat ParseStreamFormat(std::string_view name) {
  if (name == "text") return StreamFormat::kText;
  if (name == "json") return StreamFormat::kJson;
  if (name == "csv") return StreamFormat::kCsv;
  throw ParseError("format must be text, json or csv; got '" +
                   std::string(name) + "'");
}

RecordWriter::RecordWriter(std::ostream& out, StreamFormat format,
                           RecordKind kind)
    : out_(out), format_(format), kind_(kind) {}

void RecordWriter::WriteHeaderOnce() {
  if (format_ != StreamFormat::kCsv || header_written_) return;
  header_written_ = true;
  switch (kind_) {
    case RecordKind::kPartition:
      out_ << "size,parts\n";
      break;
    case RecordKind::kBetaSet:
      out_ << "size,beta\n";
      break;
    case RecordKind::kSequence:
      out_ << "size,sequence,parts\n";
      break;
  }
}

void RecordWriter::Write(const Partition& p) {
  WriteHeaderOnce();
  switch (format_) {
    case StreamFormat::kText:
      out_ << FormatPartition(p) << '\n';
      break;
    case StreamFormat::kJson:
      out_ << nlohmann::json{{"partition", p.parts()}, {"size", p.size()}}
                  .dump()
           << '\n';
      break;
    case StreamFormat::kCsv:
      out_ << p.size() << ",\"" << FormatPartition(p) << "\"\n";
      break;
  }
}

void RecordWriter::Write(const BetaSet& b) {
  WriteHeaderOnce();
  switch (format_) {
    case StreamFormat::kText:
      out_ << FormatBetaSet(b) << '\n';
      break;
    case StreamFormat::kJson:
      out_ << nlohmann::json{{"beta", b.elements()}, {"size", SizeFromBeta(b)}}
                  .dump()
           << '\n';
      break;
    case StreamFormat::kCsv:
      out_ << SizeFromBeta(b) << ",\"" << FormatBetaSet(b) << "\"\n";
      break;
  }
}

void RecordWriter::Write(const CoreSequence& s) {
  WriteHeaderOnce();
  const Partition p = FromSequence(s);
  switch (format_) {
    case StreamFormat::kText:
      out_ << FormatSequence(s) << '\n';
      break;
    case StreamFormat::kJson:
      out_ << nlohmann::json{{"sequence", s.entries()},
                             {"partition", p.parts()},
                             {"size", p.size()}}
                  .dump()
           << '\n';
      break;
    case StreamFormat::kCsv:
      out_ << p.size() << ",\"" << FormatSequence(s) << "\",\""
           << FormatPartition(p) << "\"\n";
      break;
  }
}

}  // namespace simcore

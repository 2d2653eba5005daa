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

#ifndef SIMCORE_STREAM_WRITER_HPP_
#define SIMCORE_STREAM_WRITER_HPP_

#include <ostream>
#include <string_view>

#include "simcore/bijections.hpp"
#include "simcore/partition.hpp"

namespace simcore {

enum class StreamFormat { kText, kJson, kCsv };

StreamFormat ParseStreamFormat(std::string_view name);

enum class RecordKind { kPartition, kBetaSet, kSequence };

// One record per line.
//
//   text: the comma-separated entries ("" for the empty partition)
//   json: {"partition": [...], "size": n}, {"beta": [...], "size": n} or
//         {"sequence": [...], "partition": [...], "size": n}
//   csv:  a header row, then size and the quoted comma-separated entries
class RecordWriter {
 public:
  RecordWriter(std::ostream& out, StreamFormat format, RecordKind kind);

  void Write(const Partition& p);
  void Write(const BetaSet& b);
  void Write(const CoreSequence& s);

 private:
  void WriteHeaderOnce();

  std::ostream& out_;
  StreamFormat format_;
  RecordKind kind_;
  bool header_written_ = false;
};

}  // namespace simcore

#endif  // SIMCORE_STREAM_WRITER_HPP_

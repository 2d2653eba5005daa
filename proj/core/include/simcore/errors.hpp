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

#ifndef SIMCORE_ERRORS_HPP_
#define SIMCORE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace simcore {

// Malformed input or a parameter outside an operation's domain.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text that does not parse as a partition, beta-set or sequence.
class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// A checked 64-bit operation would have wrapped.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// An enumeration was refused because its estimated size exceeds the
// configured guard.
class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace simcore

#endif  // SIMCORE_ERRORS_HPP_

// Copyright 2026 The incmon Authors
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

#ifndef INCMON_ERRORS_H_
#define INCMON_ERRORS_H_

#include <stdexcept>
#include <string>

namespace incmon {

// Invalid input to a well-formed request: a bad poset, a non-antichain, an
// out-of-range parameter. Maps to CLI exit code 1.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration would exceed its configured limit. Maps to exit code 2.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// File could not be read or parsed. Maps to exit code 3.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace incmon

#endif  // INCMON_ERRORS_H_

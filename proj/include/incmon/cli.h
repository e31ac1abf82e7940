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

#ifndef INCMON_CLI_H_
#define INCMON_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace incmon {

// Exit codes of the incmon binary.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;  // bad poset, bad flags, failed verify
inline constexpr int kExitCapExceeded = 2;
inline constexpr int kExitIoError = 3;

// Runs one command. `args` excludes the program name. Results go to `out`,
// diagnostics to `err`; output depends only on `args` and the input file.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace incmon

#endif  // INCMON_CLI_H_

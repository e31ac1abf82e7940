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

#ifndef INCMON_VERIFY_H_
#define INCMON_VERIFY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "incmon/poset.h"
#include "json.hpp"

namespace incmon {

inline constexpr int kMaxVerifySize = 7;

struct SuiteResult {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  // JSON of the first failing poset in generation order.
  std::optional<std::string> first_counterexample;
};

struct VerifySummary {
  int n_max = 0;
  std::uint64_t posets_checked = 0;
  std::vector<SuiteResult> suites;

  bool ok() const;
};

// Names of the invariant suites, in report order.
const std::vector<std::string>& verify_suite_names();

// Runs a single poset through every suite; returns the names that fail.
std::vector<std::string> failing_suites(const Poset& p);

// Checks every naturally labeled poset on 1..n_max elements. Throws
// DomainError for n_max < 0 and CapExceeded for n_max > 7. Posets are
// spread over `threads` workers (0 picks the hardware concurrency); the
// summary does not depend on the thread count.
VerifySummary verify(int n_max, unsigned threads = 0);

std::string verify_to_text(const VerifySummary& summary);
nlohmann::json verify_to_json(const VerifySummary& summary);

}  // namespace incmon

#endif  // INCMON_VERIFY_H_

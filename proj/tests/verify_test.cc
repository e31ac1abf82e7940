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

#include "incmon/verify.h"

#include "gtest/gtest.h"
#include "incmon/errors.h"
#include "oracles.h"

namespace incmon {
namespace {

TEST(VerifyTest, Vacuous) {
  const VerifySummary s = verify(0);
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.posets_checked, 0u);
  EXPECT_EQ(s.suites.size(), verify_suite_names().size());
}

TEST(VerifyTest, UpToTwo) {
  // One poset on one element; the antichain and the chain on two.
  const VerifySummary s = verify(2);
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.posets_checked, 3u);
}

TEST(VerifyTest, UpToFive) {
  const VerifySummary s = verify(5);
  EXPECT_TRUE(s.ok()) << verify_to_text(s);
  std::uint64_t expected = 0;
  for (int n = 1; n <= 5; ++n) expected += testing::BruteNaturalPosetCount(n);
  EXPECT_EQ(s.posets_checked, expected);
  EXPECT_EQ(s.posets_checked, 407u);
  for (const SuiteResult& suite : s.suites) {
    EXPECT_EQ(suite.passed, 407u) << suite.name;
    EXPECT_FALSE(suite.first_counterexample.has_value());
  }
}

TEST(VerifyTest, IndependentOfThreadCount) {
  EXPECT_EQ(verify_to_text(verify(5, 1)), verify_to_text(verify(5, 3)));
}

TEST(VerifyTest, Limits) {
  EXPECT_THROW(verify(8), CapExceeded);
  EXPECT_THROW(verify(-1), DomainError);
}

TEST(VerifyTest, FiguresPassEverySuite) {
  EXPECT_TRUE(failing_suites(testing::CrownOverPoint()).empty());
  EXPECT_TRUE(failing_suites(testing::DoubleCrown()).empty());
}

TEST(VerifyTest, Reports) {
  const VerifySummary s = verify(2);
  const std::string text = verify_to_text(s);
  EXPECT_EQ(text.substr(0, text.find('\n')), "n_max=2 posets=3 status=pass");
  const nlohmann::json j = verify_to_json(s);
  EXPECT_EQ(j["ok"], true);
  EXPECT_EQ(j["suites"][0]["name"], "mobius-inversion");
  EXPECT_TRUE(j["suites"][0]["first_counterexample"].is_null());
}

}  // namespace
}  // namespace incmon

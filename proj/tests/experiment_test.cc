// Copyright 2026 The AroQdr Authors
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

#include "aroqdr/experiment.h"

#include "gtest/gtest.h"

namespace aroqdr {
namespace {

ExperimentConfig SmallConfig() {
  ExperimentConfig config;
  config.N_values = {2};
  config.instances_per_N = 3;
  return config;
}

TEST(ExperimentTest, CsvIsByteIdenticalWithoutTiming) {
  absl::StatusOr<ExperimentResult> a = RunExperiment(SmallConfig());
  absl::StatusOr<ExperimentResult> b = RunExperiment(SmallConfig());
  ASSERT_TRUE(a.ok() && b.ok());
  EXPECT_EQ(FormatCsv(a->records, false), FormatCsv(b->records, false));
  EXPECT_EQ(FormatSummary(a->summary, false), FormatSummary(b->summary, false));
}

TEST(ExperimentTest, ParallelRunMatchesSerial) {
  ExperimentConfig parallel = SmallConfig();
  parallel.jobs = 3;
  absl::StatusOr<ExperimentResult> a = RunExperiment(SmallConfig());
  absl::StatusOr<ExperimentResult> b = RunExperiment(parallel);
  ASSERT_TRUE(a.ok() && b.ok());
  EXPECT_EQ(FormatCsv(a->records, false), FormatCsv(b->records, false));
}

TEST(ExperimentTest, RecordsAreOrderedAndComplete) {
  absl::StatusOr<ExperimentResult> result = RunExperiment(SmallConfig());
  ASSERT_TRUE(result.ok());
  ASSERT_EQ(result->records.size(), 9u);
  EXPECT_EQ(result->records[0].seed, 1u);
  EXPECT_EQ(result->records[0].method, Method::kAdrSocp);
  EXPECT_EQ(result->records[8].seed, 3u);
  for (const InstanceRecord& r : result->records) {
    EXPECT_TRUE(r.ok()) << r.status;
    EXPECT_LE(r.max_violation, kVerifyTolerance);
    EXPECT_GE(r.realized, r.td - 1e-6);
  }
  ASSERT_EQ(result->summary.size(), 3u);
  EXPECT_EQ(result->summary[1].solved, 3);
  const std::string csv = FormatCsv(result->records);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "N,method,theta,seed,value,td,wc,m1,m2,solve_ms,status");
}

TEST(ExperimentTest, InvalidConfigIsRejected) {
  ExperimentConfig config = SmallConfig();
  config.instances_per_N = 0;
  EXPECT_FALSE(ValidateConfig(config).ok());
  config = SmallConfig();
  config.N_values = {1};
  EXPECT_FALSE(ValidateConfig(config).ok());
  config = SmallConfig();
  config.theta = 1.5;
  EXPECT_FALSE(RunExperiment(config).ok());
}

}  // namespace
}  // namespace aroqdr

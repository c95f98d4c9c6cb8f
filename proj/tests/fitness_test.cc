// Copyright 2026 The Evorest Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "evorest/fitness.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "evorest/error.h"
#include "evorest/log.h"
#include "evorest/rng.h"
#include "evorest/sim_sut.h"

namespace evorest {
namespace {

// Distances spread over many magnitudes, with exact integers and zero mixed in.
double RandomDistance(Rng& rng) {
  switch (rng.Index(5)) {
    case 0: return 0.0;
    case 1: return static_cast<double>(rng.UniformInt(0, 1000));
    case 2: return std::exp(rng.UniformReal(-40.0, 40.0));
    default: return std::exp(rng.UniformReal(-700.0, 700.0));
  }
}

TEST(NormalizeDistanceTest, Examples) {
  EXPECT_EQ(NormalizeDistance(0), 0.0);
  EXPECT_DOUBLE_EQ(NormalizeDistance(1), 1.0 / 2.0);
  EXPECT_DOUBLE_EQ(NormalizeDistance(9), 9.0 / 10.0);
}

TEST(NormalizeDistanceTest, RejectsInvalid) {
  EXPECT_THROW(NormalizeDistance(-1e-9), ContractError);
  EXPECT_THROW(NormalizeDistance(std::numeric_limits<double>::infinity()), ContractError);
  EXPECT_THROW(NormalizeDistance(std::nan("")), ContractError);
  EXPECT_THROW(BranchHeuristic(-3), ContractError);
}

TEST(NormalizeDistanceTest, MonotoneAndBoundedOverMillionDraws) {
  Rng rng(20260101);
  for (int i = 0; i < 1000000; ++i) {
    double a = RandomDistance(rng);
    double b = RandomDistance(rng);
    if (a > b) std::swap(a, b);
    const double na = NormalizeDistance(a);
    const double nb = NormalizeDistance(b);
    ASSERT_GE(na, 0.0);
    ASSERT_LT(na, 1.0);
    ASSERT_LE(na, nb) << a << " " << b;
    ASSERT_EQ(na == 0.0, a == 0.0);
    // Strictly increasing wherever doubles can tell the images apart.
    if (a < b && b < 1e6) ASSERT_LT(na, nb) << a << " " << b;
  }
}

TEST(BranchHeuristicTest, Examples) {
  EXPECT_EQ(BranchHeuristic(0), 1.0);
  EXPECT_NEAR(BranchHeuristic(42), 1.0 - 42.0 / 43.0, 1e-15);
  EXPECT_NEAR(BranchHeuristic(42), 0.02326, 1e-5);
  EXPECT_NEAR(BranchHeuristic(5), 1.0 - 5.0 / 6.0, 1e-15);
}

TEST(BranchHeuristicTest, StrictlyDecreasingTowardZero) {
  Rng rng(7);
  for (int i = 0; i < 100000; ++i) {
    double a = RandomDistance(rng);
    double b = RandomDistance(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    ASSERT_GE(BranchHeuristic(a), BranchHeuristic(b)) << a << " " << b;
    if (a > 1e-6 && b < 1e6) ASSERT_GT(BranchHeuristic(a), BranchHeuristic(b)) << a << " " << b;
    ASSERT_GT(BranchHeuristic(b), 0.0);
    ASSERT_LE(BranchHeuristic(a), 1.0);
    ASSERT_EQ(BranchHeuristic(a) == 1.0, a == 0.0);
  }
  EXPECT_LT(BranchHeuristic(1e12), 1e-11);
  EXPECT_GT(BranchHeuristic(std::numeric_limits<double>::max()), 0.0);
  EXPECT_LT(BranchHeuristic(1e-300), 1.0);
  EXPECT_LT(NormalizeDistance(1e300), 1.0);
  EXPECT_GT(NormalizeDistance(std::numeric_limits<double>::denorm_min()), 0.0);
}

class StatusTargetsTest : public ::testing::Test {
 protected:
  StatusTargetsTest() : schema_(ParseSchema(GenerateSwagger(CannedSpec("crud-chain")))) {}

  Individual Single(HttpVerb verb, const std::string& path) {
    Individual ind;
    ind.actions.push_back({*schema_.Find(verb, path), {}, std::nullopt});
    return ind;
  }

  ApiSchema schema_;
};

TEST_F(StatusTargetsTest, ServerErrorOnPost) {
  ExecutionResult r;
  r.status = 500;
  const FitnessValue f =
      StatusTargets({r}, Single(HttpVerb::kPost, "/api/v1/activities"), schema_);
  EXPECT_EQ(f.Get({TargetKind::kHttpStatus, "STATUS:5xx:POST:/api/v1/activities"}), 1.0);
  EXPECT_EQ(f.Get({TargetKind::kHttpStatus, "STATUS:2xx:POST:/api/v1/activities"}), 0.0);
}

TEST_F(StatusTargetsTest, NoContentOnDelete) {
  ExecutionResult r;
  r.status = 204;
  const FitnessValue f =
      StatusTargets({r}, Single(HttpVerb::kDelete, "/api/v1/activities/{id}"), schema_);
  EXPECT_EQ(f.Get({TargetKind::kHttpStatus, "STATUS:2xx:DELETE:/api/v1/activities/{id}"}), 1.0);
}

TEST_F(StatusTargetsTest, NothingExecutedAllZero) {
  const FitnessValue f = StatusTargets({}, Single(HttpVerb::kGet, "/api/v1/activities"), schema_);
  EXPECT_EQ(f.scores.size(), 3 * schema_.templates.size());
  for (const auto& [id, h] : f.scores) EXPECT_EQ(h, 0.0) << ToString(id);
}

TEST_F(StatusTargetsTest, TimedOutCallScoresNothing) {
  ExecutionResult r;
  r.timed_out = true;
  const FitnessValue f = StatusTargets({r}, Single(HttpVerb::kGet, "/api/v1/activities"), schema_);
  for (const auto& [id, h] : f.scores) EXPECT_EQ(h, 0.0);
}

TEST(MergeTest, EmptyReportEmptyScores) {
  EXPECT_TRUE(Merge({}, {}).scores.empty());
}

TEST(MergeTest, StatementAndBranch) {
  CoverageReport report;
  report.targets.push_back({"Stmt_7", CoverageKind::kStatement, true, std::nullopt});
  report.targets.push_back({"Branch_3_true", CoverageKind::kBranch, false, 5.0});
  report.targets.push_back({"Stmt_8", CoverageKind::kStatement, false, std::nullopt});
  const FitnessValue f = Merge(report, {});
  EXPECT_EQ(f.Get({TargetKind::kStatement, "Stmt_7"}), 1.0);
  EXPECT_NEAR(f.Get({TargetKind::kBranch, "Branch_3_true"}), 1.0 - 5.0 / 6.0, 1e-15);
  EXPECT_EQ(f.Get({TargetKind::kStatement, "Stmt_8"}), 0.0);
  EXPECT_EQ(f.Get({TargetKind::kStatement, "absent"}), 0.0);
}

TEST(MergeTest, DuplicateLastWinsWithWarning) {
  CoverageReport report;
  report.targets.push_back({"b", CoverageKind::kBranch, false, 1.0});
  report.targets.push_back({"b", CoverageKind::kBranch, false, 3.0});
  ScopedLogCapture capture;
  const FitnessValue f = Merge(report, {});
  EXPECT_DOUBLE_EQ(f.Get({TargetKind::kBranch, "b"}), 0.25);
  ASSERT_EQ(capture.messages().size(), 1u);
}

TEST(MergeTest, ContradictoryKindsIsProtocolError) {
  CoverageReport report;
  report.targets.push_back({"x", CoverageKind::kBranch, true, std::nullopt});
  report.targets.push_back({"x", CoverageKind::kStatement, true, std::nullopt});
  EXPECT_THROW(Merge(report, {}), ProtocolError);
}

TEST(MergeTest, ScoresStayInUnitIntervalOnRandomReports) {
  Rng rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    CoverageReport report;
    const size_t n = rng.Index(20);
    for (size_t i = 0; i < n; ++i) {
      const std::string id = "t" + std::to_string(rng.Index(8));
      if (rng.Bernoulli(0.5)) {
        report.targets.push_back({"s" + id, CoverageKind::kStatement, rng.Bernoulli(0.5),
                                  std::nullopt});
      } else if (rng.Bernoulli(0.3)) {
        report.targets.push_back({"b" + id, CoverageKind::kBranch, true, std::nullopt});
      } else {
        report.targets.push_back({"b" + id, CoverageKind::kBranch, false, RandomDistance(rng)});
      }
    }
    FitnessValue status;
    status.scores[{TargetKind::kHttpStatus, "STATUS:2xx:GET:/"}] = rng.Bernoulli(0.5) ? 1.0 : 0.0;
    ScopedLogCapture quiet;
    for (const auto& [id, h] : Merge(report, status).scores) {
      ASSERT_GE(h, 0.0);
      ASSERT_LE(h, 1.0);
    }
  }
}

}  // namespace
}  // namespace evorest

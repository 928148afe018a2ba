// Copyright 2026 The projstark Authors.
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

#include "projstark/dynamics.h"

#include <algorithm>
#include <limits>
#include <random>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "projstark/worked_example.h"
#include "test_support.h"

namespace projstark {
namespace {

using ::testing::ElementsAre;
using testing_support::CodeOf;
using testing_support::RandomSystem;

SystemSpec Scalar(int64_t a, int64_t lower, int64_t upper, int64_t init) {
  return {{{a}}, {upper}, {lower}, {init}, 3};
}

TEST(StepProjectTest, ReferenceSystem) {
  const SystemSpec s = worked_example::System();
  EXPECT_THAT(StepProject(s, {3, 100}), ElementsAre(3, 97));
  EXPECT_THAT(StepProject(s, {3, 43}), ElementsAre(3, 40));
  EXPECT_THAT(StepProject(s, {3, 40}), ElementsAre(3, 40));
}

TEST(StepProjectTest, IdentityKeepsState) {
  const SystemSpec s{{{1, 0}, {0, 1}}, {10, 10}, {-10, -10}, {0, 0}, 1};
  EXPECT_THAT(StepProject(s, {-7, 9}), ElementsAre(-7, 9));
}

TEST(StepProjectTest, DimensionMismatch) {
  const SystemSpec s = worked_example::System();
  EXPECT_EQ(CodeOf([&] { StepProject(s, {1, 2, 3}); }), ErrorCode::kDimensionMismatch);
}

TEST(StepSlackTest, InsideBounds) {
  const SystemSpec s = worked_example::System();
  const StepRecord r = StepSlack(s, {3, 43});
  EXPECT_THAT(r.alpha_up, ElementsAre(1, 1));
  EXPECT_THAT(r.alpha_lo, ElementsAre(1, 1));
  EXPECT_THAT(r.delta, ElementsAre(100, 60));
  EXPECT_THAT(r.z_next, ElementsAre(3, 40));
}

TEST(StepSlackTest, BelowLowerBound) {
  const SystemSpec s = worked_example::System();
  const StepRecord r = StepSlack(s, {3, 40});
  EXPECT_EQ(r.alpha_up[1], 1);
  EXPECT_EQ(r.alpha_lo[1], 0);
  EXPECT_EQ(r.delta[1], 63);
  EXPECT_EQ(r.z_next[1], 40);
}

TEST(StepSlackTest, AboveUpperBound) {
  const SystemSpec s = Scalar(1, 40, 100, 100);
  // A_hat z = 101 by evaluating a state one above the bound.
  const StepRecord r = StepSlack(s, {101});
  EXPECT_THAT(r.alpha_up, ElementsAre(0));
  EXPECT_THAT(r.alpha_lo, ElementsAre(1));
  EXPECT_THAT(r.delta, ElementsAre(61));
  EXPECT_THAT(r.z_next, ElementsAre(100));
}

TEST(OnlineCheckTest, HonestFirstStep) {
  const SystemSpec s = worked_example::System();
  EXPECT_TRUE(OnlineCheck(s, {{3, 97}, {1, 1}, {1, 1}, {100, 60}}).accepted());
}

TEST(OnlineCheckTest, DeltaTooSmall) {
  const SystemSpec s = worked_example::System();
  const OnlineVerdict v = OnlineCheck(s, {{3, 97}, {1, 1}, {1, 1}, {100, 59}});
  EXPECT_EQ(v.reason, OnlineRejectReason::kDeltaTooSmall);
  EXPECT_EQ(v.coordinate, 1u);
}

TEST(OnlineCheckTest, OutOfBounds) {
  const SystemSpec s = worked_example::System();
  const OnlineVerdict v = OnlineCheck(s, {{3, 101}, {1, 1}, {1, 1}, {100, 60}});
  EXPECT_EQ(v.reason, OnlineRejectReason::kOutOfBounds);
  EXPECT_EQ(v.coordinate, 1u);
}

TEST(OnlineCheckTest, ShapeMismatch) {
  const SystemSpec s = worked_example::System();
  EXPECT_EQ(OnlineCheck(s, {{3}, {1, 1}, {1, 1}, {100, 60}}).reason, OnlineRejectReason::kShape);
}

TEST(SimulateTest, ReferenceTrajectory) {
  const ExecutionTrace t = Simulate(worked_example::System());
  ASSERT_EQ(t.z_rows.size(), 30u);
  ASSERT_EQ(t.num_steps(), 29u);
  for (size_t k = 0; k <= 29; ++k) {
    EXPECT_EQ(t.z_rows[k][0], 3);
    EXPECT_EQ(t.z_rows[k][1], k <= 20 ? 100 - 3 * static_cast<int64_t>(k) : 40) << k;
  }
  for (size_t k = 0; k < 29; ++k) {
    EXPECT_THAT(t.alpha_up_rows[k], ElementsAre(1, 1));
    EXPECT_EQ(t.alpha_lo_rows[k][1], k < 20 ? 1 : 0);
    EXPECT_EQ(t.delta_rows[k][1], k < 20 ? 60 : 63);
  }
}

TEST(SimulateTest, SingleStep) {
  const SystemSpec s{{{2}}, {5}, {-5}, {3}, 1};
  const ExecutionTrace t = Simulate(s);
  ASSERT_EQ(t.z_rows.size(), 2u);
  EXPECT_THAT(t.z_rows[1], ElementsAre(5));
}

TEST(SystemSpecTest, Validation) {
  SystemSpec s = worked_example::System();
  s.num_steps = 0;
  EXPECT_EQ(CodeOf([&] { s.Validate(); }), ErrorCode::kInvalidConfig);
  s = worked_example::System();
  s.z_init = {3, 101};
  EXPECT_EQ(CodeOf([&] { s.Validate(); }), ErrorCode::kInvalidConfig);
  s = worked_example::System();
  s.z_lower = {100, 40};
  EXPECT_EQ(CodeOf([&] { s.Validate(); }), ErrorCode::kInvalidConfig);
  s = worked_example::System();
  s.a_hat = {{1, 0}};
  EXPECT_EQ(CodeOf([&] { s.Validate(); }), ErrorCode::kDimensionMismatch);
}

TEST(ExecutionTraceTest, CheckShape) {
  ExecutionTrace t = Simulate(worked_example::System());
  EXPECT_NO_THROW(t.CheckShape());
  t.delta_rows.pop_back();
  EXPECT_EQ(CodeOf([&] { t.CheckShape(); }), ErrorCode::kDimensionMismatch);
}

TEST(EnumerateSlackTest, Cases) {
  // Strictly inside, below, above.
  EXPECT_THAT(EnumerateSlackAssignments(97, 100, 40),
              ElementsAre(SlackAssignment{1, 1, 60, 97}));
  EXPECT_THAT(EnumerateSlackAssignments(37, 100, 40),
              ElementsAre(SlackAssignment{1, 0, 63, 40}));
  EXPECT_THAT(EnumerateSlackAssignments(101, 100, 40),
              ElementsAre(SlackAssignment{0, 1, 61, 100}));
}

TEST(EnumerateSlackTest, TiesAdmitTwoAssignments) {
  EXPECT_THAT(EnumerateSlackAssignments(40, 100, 40),
              ElementsAre(SlackAssignment{1, 1, 60, 40}, SlackAssignment{1, 0, 60, 40}));
  EXPECT_THAT(EnumerateSlackAssignments(100, 100, 40),
              ElementsAre(SlackAssignment{1, 1, 60, 100}, SlackAssignment{0, 1, 60, 100}));
}

TEST(SolveSlackTest, Examples) {
  EXPECT_EQ(SolveSlackCoordinate(37, 100, 40), (SlackAssignment{1, 0, 63, 40}));
  EXPECT_EQ(SolveSlackCoordinate(97, 100, 40), (SlackAssignment{1, 1, 60, 97}));
  EXPECT_EQ(SolveSlackCoordinate(40, 100, 40), (SlackAssignment{1, 1, 60, 40}));
}

// The inclusive rule: alpha_up = [A z <= upper], alpha_lo = [A z >= lower].
TEST(SolveSlackTest, AgreesWithStepSlackOnRandomStates) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 2000; ++t) {
    const int64_t lo = static_cast<int64_t>(rng() % 200) - 100;
    const int64_t hi = lo + 1 + static_cast<int64_t>(rng() % 100);
    const int64_t az = lo + static_cast<int64_t>(rng() % 300) - 100;
    const SlackAssignment a = SolveSlackCoordinate(az, hi, lo);
    EXPECT_EQ(a.alpha_up, az <= hi ? 1 : 0);
    EXPECT_EQ(a.alpha_lo, az >= lo ? 1 : 0);
    EXPECT_EQ(a.z_next, std::clamp(az, lo, hi));
    const SystemSpec s = Scalar(1, lo, hi, lo);
    const StepRecord r = StepSlack(s, {az});
    EXPECT_EQ(r.alpha_up[0], a.alpha_up);
    EXPECT_EQ(r.alpha_lo[0], a.alpha_lo);
    EXPECT_EQ(r.delta[0], a.delta);
  }
}

TEST(DynamicsPropertyTest, RandomSystems) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 150; ++t) {
    const SystemSpec s = RandomSystem(rng).spec;
    const ExecutionTrace trace = Simulate(s);
    IntVector z = s.z_init;
    for (size_t k = 0; k < s.num_steps; ++k) {
      z = StepProject(s, z);
      EXPECT_EQ(trace.z_rows[k + 1], z);
      EXPECT_TRUE(OnlineCheck(s, trace.step(k)).accepted());
      for (size_t i = 0; i < s.dimension(); ++i) {
        EXPECT_GE(trace.z_rows[k + 1][i], s.z_lower[i]);
        EXPECT_LE(trace.z_rows[k + 1][i], s.z_upper[i]);
        EXPECT_GE(trace.delta_rows[k][i], s.z_upper[i] - s.z_lower[i]);
      }
    }
  }
}

TEST(ApplyTransitionTest, OverflowDetected) {
  const int64_t big = std::numeric_limits<int64_t>::max();
  const SystemSpec s{{{2}}, {big}, {0}, {1}, 1};
  EXPECT_EQ(CodeOf([&] { ApplyTransition(s, {big}); }), ErrorCode::kOverflow);
}

}  // namespace
}  // namespace projstark

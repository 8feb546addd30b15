#include "ardlboot/error.hpp"
#include "ardlboot/thresholds.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace ardlboot;

TEST(Thresholds, BuiltinSets) {
  const auto asy = BoundThresholdTable::builtin(ThresholdSet::Asymptotic);
  const auto f3 = asy.find(DeterministicCase::III, TestKind::Fov, 2, 0.05);
  ASSERT_TRUE(f3);
  EXPECT_DOUBLE_EQ(f3->i0, 3.79);
  EXPECT_DOUBLE_EQ(f3->i1, 4.85);
  EXPECT_DOUBLE_EQ(asy.find(DeterministicCase::II, TestKind::Fov, 2, 0.05)->i1, 3.87);
  EXPECT_DOUBLE_EQ(asy.find(DeterministicCase::III, TestKind::Find, 2, 0.05)->i1, 5.42);
  EXPECT_FALSE(asy.find(DeterministicCase::II, TestKind::T, 2, 0.05));
  EXPECT_FALSE(asy.find(DeterministicCase::III, TestKind::Fov, 3, 0.05));
  EXPECT_FALSE(asy.find(DeterministicCase::III, TestKind::Fov, 2, 0.10));

  const auto small = BoundThresholdTable::builtin(ThresholdSet::SmallSample);
  EXPECT_DOUBLE_EQ(small.find(DeterministicCase::II, TestKind::Fov, 2, 0.05)->i0, 3.435);
  EXPECT_DOUBLE_EQ(small.find(DeterministicCase::III, TestKind::Fov, 2, 0.05)->i1, 5.26);
  EXPECT_DOUBLE_EQ(small.find(DeterministicCase::III, TestKind::Find, 2, 0.05)->i0, 3.22);

  for (const auto& table : {asy, small}) {
    for (const auto& e : table.entries()) {
      if (e.test == TestKind::T) EXPECT_GT(e.i0, e.i1);
      else EXPECT_LT(e.i0, e.i1);
    }
  }
}

TEST(Thresholds, OverrideFile) {
  std::istringstream in(
      "case,test,k,alpha,i0,i1\n"
      "III,F_ov,2,0.05,4.0,5.0\n"
      "II,t,3,0.1,-2.5,-3.2\n");
  auto table = BoundThresholdTable::builtin(ThresholdSet::Asymptotic);
  table.merge(BoundThresholdTable::from_csv(in));
  EXPECT_DOUBLE_EQ(table.find(DeterministicCase::III, TestKind::Fov, 2, 0.05)->i0, 4.0);
  EXPECT_DOUBLE_EQ(table.find(DeterministicCase::II, TestKind::T, 3, 0.1)->i1, -3.2);
  EXPECT_EQ(table.entries().size(), 5u);

  std::istringstream swapped("case,test,k,alpha,i0,i1\nIII,F_ov,2,0.05,5.0,4.0\n");
  EXPECT_THROW(BoundThresholdTable::from_csv(swapped), Error);
  std::istringstream missing("case,test,k,alpha,i0\nIII,F_ov,2,0.05,5.0\n");
  EXPECT_THROW(BoundThresholdTable::from_csv(missing), Error);
  std::istringstream unknown("case,test,k,alpha,i0,i1\nIV,F_ov,2,0.05,4,5\n");
  EXPECT_THROW(BoundThresholdTable::from_csv(unknown), Error);
}

TEST(BoundVerdict, PublishedInconclusiveCase) {
  EXPECT_EQ(bound_verdict(5.132, 4.07, 5.19, TestKind::Fov), BoundVerdict::Inconclusive);
  EXPECT_EQ(bound_verdict(10.751, 3.79, 4.85, TestKind::Fov), BoundVerdict::Reject);
  EXPECT_EQ(bound_verdict(2.0, 3.79, 4.85, TestKind::Fov), BoundVerdict::Accept);
  EXPECT_EQ(bound_verdict(-5.608, -2.86, -3.53, TestKind::T), BoundVerdict::Reject);
  EXPECT_EQ(bound_verdict(-3.0, -2.86, -3.53, TestKind::T), BoundVerdict::Inconclusive);
  EXPECT_EQ(bound_verdict(-1.0, -2.86, -3.53, TestKind::T), BoundVerdict::Accept);
}

TEST(BoundVerdict, InconclusiveExactlyStrictlyBetween) {
  const double i0 = 3.0, i1 = 5.0;
  for (double s = 2.0; s <= 6.0; s += 0.25) {
    const bool between = s > i0 && s < i1;
    EXPECT_EQ(bound_verdict(s, i0, i1, TestKind::Find) == BoundVerdict::Inconclusive, between);
    EXPECT_EQ(bound_verdict(-s, -i0, -i1, TestKind::T) == BoundVerdict::Inconclusive, between);
  }
  for (auto v : {BoundVerdict::Reject, BoundVerdict::Accept, BoundVerdict::Inconclusive,
                 BoundVerdict::NotAvailable}) {
    EXPECT_EQ(bound_verdict_from_string(to_string(v)), v);
  }
}

#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "gwcb/gw.hpp"
#include "gwcb/quantum.hpp"
#include "gwcb/verify.hpp"

using gwcb::Box;
using gwcb::Integer;
using gwcb::Partition;
using gwcb::PartitionTuple;

TEST(GwInvariant, Examples) {
  const PartitionTuple tuple{{2, 2}, {2, 1}, {1}, {1}};
  EXPECT_EQ(gwcb::gw_invariant_d1(tuple, Box(2, 2)), 1);
  const PartitionTuple short_tuple{{2, 2}, {2, 2}, {1}, {}};
  EXPECT_EQ(gwcb::gw_invariant_d1(short_tuple, Box(2, 2)), 0);
  const PartitionTuple wrong{{1}, {1}, {1}, {1}};
  EXPECT_THROW(gwcb::gw_invariant_d1(wrong, Box(2, 2)), std::invalid_argument);
}

TEST(GwInvariant, ThreePointsMatchRimHooks) {
  for (const auto& [rows, cols] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    const Box box(rows, cols);
    const auto all = gwcb::partitions_in_box(rows, cols);
    for (const auto& a : all) {
      for (const auto& b : all) {
        for (const auto& c : all) {
          if (a.weight() + b.weight() + c.weight() != box.area() + rows + cols) continue;
          const PartitionTuple tuple{a, b, c};
          EXPECT_EQ(gwcb::gw_invariant_d1(tuple, box), gwcb::three_point_gw(a, b, c, 1, box));
        }
      }
    }
  }
}

TEST(GwInvariant, EmptyInsertionKillsDegreeOneInvariants) {
  // An empty class puts no condition on its line, so the line classes have
  // codimension one more than the flag variety's dimension.
  const Box box(2, 2);
  const PartitionTuple padded{{2, 2}, {2, 1}, {2}, {}};
  EXPECT_EQ(gwcb::gw_invariant_d1(padded, box), 0);
}

TEST(GwDegree, Examples) {
  const PartitionTuple tuple{{2, 2}, {2, 1}, {1}, {1}};
  EXPECT_EQ(gwcb::gw_divisor_degree_m04(tuple, Box(2, 2)), 1);
  for (int r = 1; r <= 4; ++r) {
    for (int l = 1; l <= 4; ++l) {
      const auto family = gwcb::degree_one_family(r, l);
      EXPECT_EQ(gwcb::gw_divisor_degree_m04(family, Box(r, l)), 1) << r << "," << l;
    }
  }
  const PartitionTuple off{{2, 2}, {2, 1}, {1}, {}};
  EXPECT_THROW(gwcb::gw_divisor_degree_m04(off, Box(2, 2)), std::invalid_argument);
}

TEST(GwColumnFactorization, Examples) {
  const PartitionTuple tuple{{2, 2}, {2, 1}, {1}, {1}};
  const auto sides = gwcb::gw_column_factorization(tuple, Box(2, 2));
  EXPECT_EQ(sides.lhs, 1);
  EXPECT_EQ(sides.rhs, 1);
  const PartitionTuple below{{2, 2}, {2, 2}, {1}, {}};
  const auto zero = gwcb::gw_column_factorization(below, Box(2, 2));
  EXPECT_EQ(zero.lhs, 0);
  EXPECT_EQ(zero.rhs, 0);
  const PartitionTuple boxes{{1}, {1}, {1}, {1}};
  const auto small = gwcb::gw_column_factorization(boxes, Box(1, 1));
  EXPECT_EQ(small.lhs, 1);
  EXPECT_EQ(small.rhs, 1);
}

class GwBoxes : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(GwBoxes, ColumnFactorizationOnColumnConditionTuples) {
  const auto [r, l] = GetParam();
  const Box box(r, l);
  for (const auto& tuple : gwcb::critical_tuples(box, 4, true)) {
    if (gwcb::total_rows(tuple) > 2 * (r + 1)) continue;
    const auto sides = gwcb::gw_column_factorization(tuple, box);
    EXPECT_TRUE(sides.holds()) << gwcb::to_string(tuple) << " " << sides.lhs << " vs " << sides.rhs;
  }
}

TEST_P(GwBoxes, SymmetricAndNonnegative) {
  const auto [r, l] = GetParam();
  const Box box(r, l);
  for (const auto& tuple : gwcb::critical_tuples(box, 4, true)) {
    const Integer degree = gwcb::gw_divisor_degree_m04(tuple, box);
    EXPECT_GE(degree, 0);
    PartitionTuple shuffled{tuple[2], tuple[0], tuple[3], tuple[1]};
    EXPECT_EQ(gwcb::gw_divisor_degree_m04(shuffled, box), degree);
    PartitionTuple flipped;
    for (const auto& p : tuple) flipped.push_back(gwcb::transpose(p));
    EXPECT_EQ(gwcb::gw_divisor_degree_m04(flipped, Box(l, r)), degree) << gwcb::to_string(tuple);
  }
}

INSTANTIATE_TEST_SUITE_P(Boxes, GwBoxes,
                         ::testing::Values(std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 2},
                                           std::pair{1, 3}, std::pair{2, 3}, std::pair{3, 2},
                                           std::pair{3, 3}));

TEST(GwFCurve, FourPointsRecoverTheDegree) {
  const Box box(2, 2);
  const auto curve = gwcb::enumerate_fcurves(4).front();
  for (const auto& tuple : gwcb::critical_tuples(box, 4, true)) {
    EXPECT_EQ(gwcb::gw_dot_fcurve(tuple, box, curve), gwcb::gw_divisor_degree_m04(tuple, box));
  }
}

TEST(GwFCurve, FivePointExample) {
  const PartitionTuple tuple{{2, 2}, {2, 1}, {1}, {}, {1}};
  const auto curve = gwcb::parse_fcurve("{1|2|3|4,5}");
  EXPECT_EQ(gwcb::gw_dot_fcurve(tuple, Box(2, 2), curve), 1);
}

TEST(GwFCurve, OverfullBlockGivesZero) {
  const PartitionTuple tuple{{2, 2}, {2, 2}, {1}, {}, {}};
  EXPECT_EQ(gwcb::gw_dot_fcurve(tuple, Box(2, 2), gwcb::parse_fcurve("{1,2|3|4|5}")), 0);
  EXPECT_TRUE(gwcb::gw_fcurve_summands(tuple, Box(2, 2), gwcb::parse_fcurve("{1,2|3|4|5}")).empty());
}

TEST(GwFCurve, BlockClasses) {
  const PartitionTuple tuple{{2, 2}, {2, 1}, {1}, {}, {1}};
  EXPECT_EQ(gwcb::block_classes(tuple, {4, 5}), (PartitionTuple{{}, {1}}));
}

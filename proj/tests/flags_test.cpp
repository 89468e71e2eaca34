#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <vector>

#include "gwcb/flags.hpp"
#include "gwcb/schur.hpp"

using gwcb::FlagShape;
using gwcb::Integer;
using gwcb::PairOfPartitions;
using gwcb::Partition;
using gwcb::Permutation;

namespace {

std::vector<FlagShape> shapes_up_to(int max_m) {
  std::vector<FlagShape> out;
  for (int m = 1; m <= max_m; ++m) {
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b <= m; ++b) out.emplace_back(a, b, m);
    }
  }
  return out;
}

// Calls f on every multiset of `size` classes, as nondecreasing index lists.
void for_each_multiset(std::size_t pool, std::size_t size,
                       const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(size, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
    if (pos == size) {
      f(idx);
      return;
    }
    for (std::size_t i = from; i < pool; ++i) {
      idx[pos] = i;
      rec(pos + 1, i);
    }
  };
  rec(0, 0);
}

}  // namespace

TEST(Permutation, Basics) {
  const Permutation w({2, 4, 1, 3});
  EXPECT_EQ(w.inversions(), 3);
  EXPECT_EQ(w.descents(), std::vector<int>{2});
  EXPECT_EQ(w(5), 5);
  EXPECT_EQ(w.inverse(), Permutation({3, 1, 4, 2}));
  EXPECT_TRUE(w.compose(w.inverse()).is_identity());
  EXPECT_EQ(w.extended(5), Permutation({2, 4, 1, 3, 5}));
  EXPECT_THROW(Permutation({1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 1}), std::invalid_argument);
  EXPECT_EQ(gwcb::parse_permutation("[2,4,1,3]"), w);
  EXPECT_EQ(gwcb::to_string(w), "[2,4,1,3]");
}

TEST(Flags, GrassmannPermExamples) {
  EXPECT_EQ(gwcb::grassmann_perm({2, 1}, 2, 4), Permutation({2, 4, 1, 3}));
  EXPECT_TRUE(gwcb::grassmann_perm({}, 2, 4).is_identity());
  EXPECT_EQ(gwcb::grassmann_perm({2, 2}, 2, 4), Permutation({3, 4, 1, 2}));
  EXPECT_EQ(gwcb::grassmann_perm({3, 3}, 2, 5), Permutation({4, 5, 1, 2, 3}));
  for (const auto& lambda : gwcb::partitions_in_box(3, 3)) {
    const auto w = gwcb::grassmann_perm(lambda, 3, 6);
    EXPECT_EQ(w.inversions(), lambda.weight());
    EXPECT_EQ(gwcb::grassmann_partition(w, 3), lambda);
  }
}

TEST(Flags, LevelPermExamples) {
  EXPECT_EQ(gwcb::level_d_perm({2, 1}, 2, 4, 1), Permutation({2, 1, 4, 3}));
  EXPECT_TRUE(gwcb::level_d_perm({}, 2, 4, 1).is_identity());
  EXPECT_EQ(gwcb::level_d_perm({2, 2}, 2, 4, 1), Permutation({3, 1, 4, 2}));
}

TEST(Flags, PairFactorizationExamples) {
  const FlagShape shape(1, 3, 4);
  const auto pair = gwcb::pair_factorization(Permutation({2, 1, 4, 3}), shape);
  EXPECT_EQ(pair.alpha, Partition{1});
  EXPECT_EQ(pair.beta, Partition{1});
  const auto id = gwcb::pair_factorization(Permutation::identity(4), shape);
  EXPECT_TRUE(id.alpha.empty() && id.beta.empty());
  const Permutation grassmann({1, 2, 4, 3});
  const auto g = gwcb::pair_factorization(grassmann, shape);
  EXPECT_TRUE(g.alpha.empty());
  EXPECT_EQ(g.beta, gwcb::grassmann_partition(grassmann, 3));
  EXPECT_THROW(gwcb::pair_factorization(Permutation({1, 3, 2, 4}), shape), std::invalid_argument);
  EXPECT_THROW(FlagShape(2, 2, 4), std::invalid_argument);
}

TEST(Flags, RoundTripAndCodimension) {
  for (const auto& shape : shapes_up_to(7)) {
    const auto classes = gwcb::flag_schubert_classes(shape);
    for (const auto& w : classes) {
      const auto pair = gwcb::pair_factorization(w, shape);
      EXPECT_EQ(gwcb::perm_from_pair(pair), w) << gwcb::to_string(w);
      EXPECT_EQ(pair.alpha.weight() + pair.beta.weight(), w.inversions());
      EXPECT_LE(pair.alpha.length(), shape.a);
      EXPECT_LE(pair.alpha.width(), shape.b - shape.a);
    }
    const auto point = shape.point_class();
    EXPECT_EQ(point.inversions(), shape.dimension());
    EXPECT_TRUE(point.descents_within(shape.a, shape.b));
  }
}

TEST(Flags, IntersectionExamples) {
  const FlagShape shape(1, 3, 4);
  const std::vector<Permutation> point{shape.point_class()};
  EXPECT_EQ(gwcb::flag_intersection(point, shape), 1);
  std::vector<Permutation> lines;
  for (const Partition& lambda : std::vector<Partition>{{2, 2}, {2, 1}, {1}, {1}}) {
    lines.push_back(gwcb::level_d_perm(lambda, 2, 4, 1));
  }
  EXPECT_EQ(gwcb::flag_intersection(lines, shape), 1);
  // Every line meets a hyperplane, so sigma_(1) lifts to the unit class.
  EXPECT_TRUE(lines.back().is_identity());
  lines.erase(lines.begin() + 1);
  EXPECT_EQ(gwcb::flag_intersection(lines, shape), 0);
}

TEST(Flags, FactorizedExamples) {
  const FlagShape shape(1, 3, 4);
  const std::vector<PairOfPartitions> full{{{1}, {1, 1}, shape}, {{1}, {1}, shape},
                                           {{}, {}, shape}, {{}, {}, shape}};
  EXPECT_EQ(gwcb::factorized_intersection(full), 1);
  const std::vector<PairOfPartitions> short_alpha{{{1}, {1, 1}, shape}, {{}, {1}, shape},
                                                  {{}, {1}, shape}};
  EXPECT_EQ(gwcb::factorized_intersection(short_alpha), 0);
  const std::vector<PairOfPartitions> empty{{{}, {}, shape}};
  EXPECT_EQ(gwcb::factorized_intersection(empty), 0);
  const std::vector<PairOfPartitions> heavy{{{2}, {1}, shape}, {{1}, {}, shape}};
  EXPECT_THROW(gwcb::factorized_intersection(heavy), std::invalid_argument);
}

TEST(Flags, PointPairingIsDuality) {
  for (const auto& shape : {FlagShape(1, 3, 4), FlagShape(1, 2, 4), FlagShape(2, 4, 5)}) {
    const auto classes = gwcb::flag_schubert_classes(shape);
    for (const auto& u : classes) {
      int partners = 0;
      for (const auto& v : classes) {
        if (u.inversions() + v.inversions() != shape.dimension()) continue;
        const std::vector<Permutation> pair{u, v};
        const Integer value = gwcb::flag_intersection(pair, shape);
        EXPECT_TRUE(value == 0 || value == 1);
        partners += value == 1;
      }
      EXPECT_EQ(partners, 1) << gwcb::to_string(u);
    }
  }
}

TEST(Flags, FullFlagMonk) {
  // s_{s_i} * s_w in S_4 by Monk's rule: sum of w t_{jk} over j <= i < k with
  // length going up by one.
  std::vector<int> images{1, 2, 3, 4};
  std::vector<Permutation> all;
  do {
    all.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  for (int i = 1; i <= 3; ++i) {
    std::vector<int> simple{1, 2, 3, 4};
    std::swap(simple[i - 1], simple[i]);
    const Permutation s(simple);
    for (const auto& w : all) {
      gwcb::FlagExpansion expected;
      for (int j = 1; j <= i; ++j) {
        for (int k = i + 1; k <= 4; ++k) {
          auto v = w.images();
          std::swap(v[j - 1], v[k - 1]);
          const Permutation wt(v);
          if (wt.inversions() == w.inversions() + 1) expected[wt] += 1;
        }
      }
      const std::vector<Permutation> pair{s, w};
      EXPECT_EQ(gwcb::flag_multiply(pair, 4), expected) << gwcb::to_string(w) << " i=" << i;
    }
  }
}

class FlagTriangularity : public ::testing::TestWithParam<FlagShape> {};

TEST_P(FlagTriangularity, TopTermIsThePairClass) {
  const FlagShape shape = GetParam();
  const int gr_a_rows = shape.a;
  const int gr_a_cols = shape.b - shape.a;
  for (const auto& w : gwcb::flag_schubert_classes(shape)) {
    const auto pair = gwcb::pair_factorization(w, shape);
    const Permutation left = gwcb::perm_from_pair({pair.alpha, Partition{}, shape});
    const Permutation right = gwcb::perm_from_pair({Partition{}, pair.beta, shape});
    const std::vector<Permutation> factors{left, right};
    const auto expansion = gwcb::flag_multiply(factors, shape.m);
    ASSERT_TRUE(expansion.contains(w)) << gwcb::to_string(w);
    EXPECT_EQ(expansion.at(w), 1);
    for (const auto& [v, c] : expansion) {
      EXPECT_GT(c, 0);
      if (v == w) continue;
      EXPECT_TRUE(v.descents_within(shape.a, shape.b));
      const auto other = gwcb::pair_factorization(v, shape);
      EXPECT_LT(other.alpha.weight(), pair.alpha.weight()) << gwcb::to_string(v);
      EXPECT_LE(other.alpha.length(), gr_a_rows);
      EXPECT_LE(other.alpha.width(), gr_a_cols);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Shapes, FlagTriangularity,
                         ::testing::Values(FlagShape(1, 3, 4), FlagShape(2, 4, 6)));

class FlagComparison : public ::testing::TestWithParam<FlagShape> {};

TEST_P(FlagComparison, FactorizedRouteAgrees) {
  const FlagShape shape = GetParam();
  const auto classes = gwcb::flag_schubert_classes(shape);
  std::vector<PairOfPartitions> pairs;
  for (const auto& w : classes) pairs.push_back(gwcb::pair_factorization(w, shape));
  const int alpha_top = shape.a * (shape.b - shape.a);
  std::size_t checked = 0;
  for (std::size_t size = 1; size <= 4; ++size) {
    for_each_multiset(classes.size(), size, [&](const std::vector<std::size_t>& idx) {
      int codim = 0;
      int alpha = 0;
      for (auto i : idx) {
        codim += classes[i].inversions();
        alpha += pairs[i].alpha.weight();
      }
      if (codim != shape.dimension() || alpha > alpha_top) return;
      std::vector<Permutation> perms;
      std::vector<PairOfPartitions> chosen;
      for (auto i : idx) {
        perms.push_back(classes[i]);
        chosen.push_back(pairs[i]);
      }
      EXPECT_EQ(gwcb::flag_intersection(perms, shape), gwcb::factorized_intersection(chosen));
      ++checked;
    });
  }
  EXPECT_GT(checked, 0u);
}

INSTANTIATE_TEST_SUITE_P(Shapes, FlagComparison,
                         ::testing::Values(FlagShape(1, 3, 4), FlagShape(1, 3, 5)));

TEST(Flags, GrassmannianEndMatchesSchur) {
  // With a = 0 the flag variety is Gr(b, m).
  const FlagShape shape(0, 2, 5);
  const gwcb::Box box(2, 3);
  const auto all = gwcb::partitions_in_box(2, 3);
  for (const auto& x : all) {
    for (const auto& y : all) {
      for (const auto& z : all) {
        if (x.weight() + y.weight() + z.weight() != box.area()) continue;
        const std::vector<Partition> parts{x, y, z};
        const std::vector<Permutation> perms{gwcb::grassmann_perm(x, 2, 5),
                                             gwcb::grassmann_perm(y, 2, 5),
                                             gwcb::grassmann_perm(z, 2, 5)};
        EXPECT_EQ(gwcb::flag_intersection(perms, shape),
                  gwcb::grassmannian_intersection(parts, box));
      }
    }
  }
}

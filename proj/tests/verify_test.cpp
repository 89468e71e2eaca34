#include <gtest/gtest.h>

#include <map>
#include <mutex>
#include <set>

#include "gwcb/verify.hpp"

using gwcb::Box;
using gwcb::Integer;
using gwcb::Partition;
using gwcb::PartitionTuple;

namespace {

class MapStore : public gwcb::DegreeStore {
 public:
  std::optional<Integer> lookup(std::string_view kind, const std::string& key) override {
    std::lock_guard lock(mutex_);
    ++lookups;
    auto it = values.find(std::string(kind) + "/" + key);
    if (it == values.end()) return std::nullopt;
    ++hits;
    return it->second;
  }
  void store(std::string_view kind, const std::string& key, const Integer& value) override {
    std::lock_guard lock(mutex_);
    values[std::string(kind) + "/" + key] = value;
  }

  std::map<std::string, Integer> values;
  std::size_t lookups = 0;
  std::size_t hits = 0;

 private:
  std::mutex mutex_;
};

}  // namespace

TEST(CriticalTuples, Counts) {
  const auto tuples = gwcb::critical_tuples(Box(1, 1), 4, true);
  ASSERT_EQ(tuples.size(), 1u);
  EXPECT_EQ(tuples[0], (PartitionTuple{{1}, {1}, {1}, {1}}));
  EXPECT_EQ(gwcb::critical_tuples(Box(1, 1), 4, false).size(), 1u);

  const auto sorted = gwcb::critical_tuples(Box(2, 2), 4, true);
  const auto ordered = gwcb::critical_tuples(Box(2, 2), 4, false);
  std::set<PartitionTuple> canonical;
  for (const auto& t : ordered) {
    EXPECT_EQ(gwcb::total_weight(t), 9);
    canonical.insert(gwcb::canonical_tuple(t));
  }
  EXPECT_EQ(canonical.size(), sorted.size());
  for (const auto& t : sorted) EXPECT_EQ(gwcb::canonical_tuple(t), t);
}

TEST(Sweep, SmallBoxesVerify) {
  for (const auto& [r, l] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}, std::pair{2, 2}}) {
    const auto report = gwcb::sweep_conjecture(Box(r, l), 4);
    EXPECT_TRUE(report.verified()) << r << "," << l;
    EXPECT_EQ(report.tuples_checked, gwcb::critical_tuples(Box(r, l), 4, true).size());
  }
}

TEST(Sweep, ResultsIndependentOfJobs) {
  gwcb::SweepOptions serial;
  gwcb::SweepOptions parallel;
  parallel.jobs = 3;
  const auto a = gwcb::sweep_conjecture(Box(2, 2), 5, serial);
  const auto b = gwcb::sweep_conjecture(Box(2, 2), 5, parallel);
  EXPECT_EQ(a.tuples_checked, b.tuples_checked);
  EXPECT_EQ(a.comparisons, b.comparisons);
  EXPECT_EQ(a.mismatches, b.mismatches);
  EXPECT_TRUE(a.verified());
  EXPECT_EQ(a.comparisons, a.tuples_checked * 10);
}

TEST(Sweep, StoreIsFilledAndReused) {
  MapStore store;
  gwcb::SweepOptions options;
  options.store = &store;
  const auto first = gwcb::sweep_conjecture(Box(1, 2), 4, options);
  EXPECT_TRUE(first.verified());
  EXPECT_FALSE(store.values.empty());
  const auto hits_before = store.hits;
  const auto second = gwcb::sweep_conjecture(Box(1, 2), 4, options);
  EXPECT_TRUE(second.verified());
  EXPECT_GT(store.hits, hits_before);
}

TEST(Sweep, StoredValuesAreTrusted) {
  // A poisoned store value must surface as a mismatch, proving it is read.
  MapStore store;
  gwcb::SweepOptions options;
  options.store = &store;
  gwcb::sweep_conjecture(Box(1, 1), 4, options);
  ASSERT_FALSE(store.values.empty());
  for (auto& [key, value] : store.values) {
    if (key.rfind("gw_deg4/", 0) == 0) value += 7;
  }
  const auto report = gwcb::sweep_conjecture(Box(1, 1), 4, options);
  EXPECT_FALSE(report.verified());
}

TEST(ReductionConsistency, TwoByTwoFivePoints) {
  const auto report = gwcb::reduction_consistency(Box(2, 2), 5);
  EXPECT_TRUE(report.verified());
  EXPECT_GT(report.tuples_checked, 0u);
}

TEST(Certificates, BoxesOnP1) {
  const PartitionTuple tuple{{1}, {1}, {1}, {1}};
  const auto search = gwcb::nonvanishing_certificate(tuple, Box(1, 1));
  ASSERT_TRUE(search.certificate.has_value());
  for (const auto& mu : search.certificate->mu) EXPECT_EQ(mu, Partition{1});
  EXPECT_TRUE(gwcb::certificate_conditions_hold(tuple, Box(1, 1), *search.certificate));
}

TEST(Certificates, RectangleFamily) {
  const PartitionTuple tuple{{2, 2}, {2, 2}, {2, 2}, {2, 2}};
  const Box box(3, 3);
  const auto search = gwcb::nonvanishing_certificate(tuple, box);
  ASSERT_TRUE(search.certificate.has_value());
  EXPECT_TRUE(gwcb::certificate_conditions_hold(tuple, box, *search.certificate));
  EXPECT_GT(gwcb::gw_dot_fcurve(tuple, box, search.certificate->curve), 0);
}

TEST(Certificates, SoundOnSmallBoxes) {
  for (const auto& [r, l] : {std::pair{1, 2}, std::pair{2, 2}}) {
    const Box box(r, l);
    for (const auto& tuple : gwcb::critical_tuples(box, 4, true)) {
      const auto search = gwcb::nonvanishing_certificate(tuple, box);
      const Integer degree = gwcb::gw_divisor_degree_m04(tuple, box);
      if (search.certificate) {
        EXPECT_GT(degree, 0) << gwcb::to_string(tuple);
        EXPECT_GT(gwcb::cb_c1_degree_m04({r, l, tuple}), 0);
      }
      if (degree == 0) EXPECT_FALSE(search.certificate.has_value());
    }
  }
}

TEST(Certificates, BudgetExhaustionIsReported) {
  const PartitionTuple tuple{{2, 2}, {2, 2}, {2, 2}, {2, 2}};
  const auto search = gwcb::nonvanishing_certificate(tuple, Box(3, 3), 0);
  EXPECT_FALSE(search.certificate.has_value());
  EXPECT_TRUE(search.budget_exhausted);
}

TEST(Family, DegreeOne) {
  EXPECT_EQ(gwcb::degree_one_family(2, 3), (PartitionTuple{{1}, {1}, {3, 1}, {3, 3}}));
  EXPECT_EQ(gwcb::family_degree_one(1, 1), 1);
  EXPECT_EQ(gwcb::family_degree_one(3, 2), 1);
  EXPECT_EQ(gwcb::family_degree_one(4, 5), 1);
}

TEST(AddRow, Examples) {
  const PartitionTuple tuple{{3, 2}, {2, 1}, {2, 2}, {2, 2}};
  EXPECT_TRUE(gwcb::addrow_identity(tuple, 3, 3).holds());
  const PartitionTuple small{{2, 2}, {2, 1}, {1}, {1}};
  EXPECT_EQ(gwcb::addrow_weights(small, 2),
            (PartitionTuple{{2, 2, 2}, {2, 1, 1}, {1}, {1}}));
  const auto sides = gwcb::addrow_identity(small, 2, 2);
  EXPECT_TRUE(sides.holds());
  EXPECT_EQ(sides.lhs, 1);
  const PartitionTuple unordered{{1}, {2, 1}, {2, 2}, {1}};
  EXPECT_THROW(gwcb::addrow_identity(unordered, 2, 2), std::invalid_argument);
}

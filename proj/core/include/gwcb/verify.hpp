#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gwcb/cb.hpp"
#include "gwcb/gw.hpp"
#include "gwcb/integer.hpp"
#include "gwcb/moduli.hpp"
#include "gwcb/partition.hpp"

namespace gwcb {

/// Optional persistent store for expensive degrees. Implementations must be
/// safe to call from several sweep workers at once.
class DegreeStore {
 public:
  virtual ~DegreeStore() = default;
  virtual std::optional<Integer> lookup(std::string_view kind, const std::string& key) = 0;
  virtual void store(std::string_view kind, const std::string& key, const Integer& value) = 0;
};

/// Store key for a degree: the canonical tuple and the box, as "[2,1];[1]|2x2".
std::string degree_key(std::span<const Partition> tuple, const Box& box);

/// A disagreement found by a sweep. `curve` is empty for M_{0,4} comparisons;
/// `what` names the quantity that differed.
struct Mismatch {
  PartitionTuple tuple;
  std::string curve;
  std::string what;
  Integer gw;
  Integer cb;

  bool operator==(const Mismatch&) const = default;
};

struct SweepReport {
  Box box{1, 1};
  int n = 4;
  std::size_t tuples_checked = 0;
  std::size_t comparisons = 0;
  std::vector<Mismatch> mismatches;
  std::chrono::duration<double> elapsed{0};

  bool verified() const { return mismatches.empty(); }
};

struct SweepOptions {
  bool up_to_symmetry = true;
  unsigned jobs = 1;
  DegreeStore* store = nullptr;
};

/// n-tuples of partitions in the box with total weight (r+1)(l+1). With
/// `up_to_symmetry` each multiset appears once, sorted descending.
std::vector<PartitionTuple> critical_tuples(const Box& box, int n, bool up_to_symmetry);

/// Compares the Gromov-Witten and conformal blocks divisors on every critical
/// tuple: directly on M_{0,4}, and on every F-curve for n >= 5. All
/// mismatches are collected.
SweepReport sweep_conjecture(const Box& box, int n, const SweepOptions& options = {});

/// For every critical n-tuple and F-curve, matches the nonzero summands of the
/// two F-curve pairings term by term and checks that each block factor on the
/// Grassmannian side equals the rank with the star dual inserted.
SweepReport reduction_consistency(const Box& box, int n, const SweepOptions& options = {});

/// A decomposition of the markings and node classes witnessing that the
/// divisors are nonzero on that F-curve.
struct Certificate {
  FCurve curve;
  std::array<Partition, 4> mu;
};

struct CertificateSearch {
  std::optional<Certificate> certificate;
  bool budget_exhausted = false;
  std::size_t examined = 0;
};

/// True when mu^j occurs in the block products, the heights of mu add up to
/// 2r+2 and the first-column remainders multiply to a nonzero class on
/// Gr(r+1, r+l).
bool certificate_conditions_hold(std::span<const Partition> classes, const Box& box,
                                 const Certificate& certificate);

/// Searches F-curves in canonical order and node classes from the block
/// product supports. The budget bounds the number of candidate mu examined.
CertificateSearch nonvanishing_certificate(std::span<const Partition> classes, const Box& box,
                                           std::size_t budget = 1'000'000);

/// The weights (1), (1), (l, 1^{r-1}), (l^r).
PartitionTuple degree_one_family(int r, int l);

/// Both degrees of the family above; throws std::runtime_error naming the two
/// values unless both are 1.
Integer family_degree_one(int r, int l);

/// The M_{0,4} conformal blocks degree of the weights against the degree for
/// sl_{r+2} after adding a full row to the first weight and a box to the first
/// column of the second. Weights must be ordered by decreasing height and
/// satisfy the column condition.
IdentitySides addrow_identity(std::span<const Partition> weights, int r, int l);

/// The sl_{r+2} weights used on the right side of addrow_identity.
PartitionTuple addrow_weights(std::span<const Partition> weights, int l);

}  // namespace gwcb

#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gwcb/integer.hpp"
#include "gwcb/partition.hpp"

namespace gwcb {

/// A permutation of {1..m} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int m);

  int size() const { return static_cast<int>(images_.size()); }
  /// w(i) for one-based i; points past the end are fixed.
  int operator()(int i) const { return i <= size() ? images_[i - 1] : i; }
  const std::vector<int>& images() const { return images_; }

  int inversions() const;
  /// One-based positions i with w(i) > w(i+1).
  std::vector<int> descents() const;
  bool descents_within(int a, int b) const;
  bool is_identity() const;

  Permutation inverse() const;
  /// (*this)(other(i)).
  Permutation compose(const Permutation& other) const;
  /// The same permutation viewed in S_m, m >= size().
  Permutation extended(int m) const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

std::string to_string(const Permutation& w);
Permutation parse_permutation(std::string_view text);

/// Fl(a,b;m): flags V_a in V_b in C^m. The ends a = 0 and b = m are allowed
/// and give Grassmannians.
struct FlagShape {
  int a;
  int b;
  int m;

  FlagShape(int a, int b, int m);
  int dimension() const { return a * (b - a) + b * (m - b); }
  /// The longest permutation with descents in {a, b}; its class is the point.
  Permutation point_class() const;

  bool operator==(const FlagShape&) const = default;
};

/// A Schubert class on Fl(a,b;m) written as alpha in a x (b-a) (a class on
/// Gr(a,b)) and beta in b x (m-b) (a class on Gr(b,m)).
struct PairOfPartitions {
  Partition alpha;
  Partition beta;
  FlagShape shape;

  bool operator==(const PairOfPartitions&) const = default;
};

using FlagExpansion = std::map<Permutation, Integer>;

/// w(i) = lambda_{r-i+1} + i for i <= r, the remaining values increasing.
Permutation grassmann_perm(const Partition& lambda, int r, int m);

/// The partition of a permutation whose only descent is at r.
Partition grassmann_partition(const Permutation& w, int r);

/// grassmann_perm with positions r-d+1 .. r+d sorted, indexing the class on
/// Fl(r-d, r+d; m) of d-dimensional spaces meeting X_lambda.
Permutation level_d_perm(const Partition& lambda, int r, int m, int d);

/// Writes w = w2 w1 with w1 Grassmannian at a inside S_b and w2 Grassmannian
/// at b, and reads the two partitions off those factors.
PairOfPartitions pair_factorization(const Permutation& w, const FlagShape& shape);
Permutation perm_from_pair(const PairOfPartitions& pair);

/// All permutations of S_m with descents in {a, b}.
std::vector<Permutation> flag_schubert_classes(const FlagShape& shape);

/// Coefficient of the point class in the product of the given classes.
Integer flag_intersection(std::span<const Permutation> classes, const FlagShape& shape);

/// Product of the Gr(a,b) and Gr(b,m) intersection numbers of the two halves
/// of the pairs. Throws when the alpha weights exceed a(b-a); returns 0 when
/// they fall short.
Integer factorized_intersection(std::span<const PairOfPartitions> pairs);

/// Schubert expansion of the product in H*(Fl_m). Terms indexed by
/// permutations outside S_m vanish there and are dropped.
FlagExpansion flag_multiply(std::span<const Permutation> classes, int m);

std::size_t schubert_cache_size();

}  // namespace gwcb

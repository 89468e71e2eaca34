#pragma once

#include <climits>
#include <map>
#include <span>

#include "gwcb/integer.hpp"
#include "gwcb/partition.hpp"

namespace gwcb {

/// Element of the ring of symmetric functions in the Schur basis. Only
/// nonzero coefficients are stored.
using SchurExpansion = std::map<Partition, Integer>;

/// Discards every term with more than `rows` rows or wider than `cols`. Terms
/// outside a rectangle span an ideal, so truncating after every pairwise
/// product gives the same answer as truncating once at the end.
struct Bound {
  int rows = INT_MAX;
  int cols = INT_MAX;

  static Bound none() { return {}; }
  static Bound of(const Box& box) { return {box.rows(), box.cols()}; }
  static Bound around(const Partition& nu) { return {nu.length(), nu.width()}; }

  bool admits(const Partition& lambda) const {
    return lambda.length() <= rows && lambda.width() <= cols;
  }
  bool operator==(const Bound&) const = default;
};

/// c^nu_{lambda,mu}.
Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// s_lambda * s_mu, truncated to the bound.
SchurExpansion multiply_pair(const Partition& lambda, const Partition& mu,
                             Bound bound = Bound::none());

/// Full expansion of s_{lambda^1} ... s_{lambda^n}; the empty product is s_().
SchurExpansion multiply_schur(std::span<const Partition> factors,
                              Bound bound = Bound::none());

/// Coefficient of s_nu in the product of the factors.
Integer generalized_lr(std::span<const Partition> factors, const Partition& nu);

/// The intersection number of the Schubert classes on Gr(rows, rows+cols).
Integer grassmannian_intersection(std::span<const Partition> factors, const Box& box);

/// Like grassmannian_intersection but allows a zero side. Gr(0,n) and Gr(n,n)
/// are points, so the answer is 1 when every factor is empty and 0 otherwise.
/// Factors outside the rectangle give 0 instead of throwing.
Integer rectangle_intersection(std::span<const Partition> factors, int rows, int cols);

/// Drops zero coefficients and adds `scale * term` into `into`.
void accumulate(SchurExpansion& into, const Partition& term, const Integer& scale);

/// Number of cached pairwise products; exposed for benchmarks and tests.
std::size_t schur_cache_size();
void clear_schur_cache();

}  // namespace gwcb

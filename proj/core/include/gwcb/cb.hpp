#pragma once

#include <span>
#include <vector>

#include "gwcb/integer.hpp"
#include "gwcb/moduli.hpp"
#include "gwcb/partition.hpp"
#include "gwcb/quantum.hpp"

namespace gwcb {

/// The conformal blocks bundle V(sl_{r+1}, weights, level) on M_{0,n}. Each
/// weight is a partition in the r x level box.
struct CbBundle {
  int r = 1;
  int level = 1;
  std::vector<Partition> weights;

  int n() const { return static_cast<int>(weights.size()); }
};

/// Delta_lambda = c(lambda) / (2(l + r + 1)) with the Casimir normalized so that
/// the trivial weight has Delta = 0.
struct ConformalWeight {
  Rational value;
  auto operator<=>(const ConformalWeight&) const = default;
};

/// -1 + sum |lambda^i| / (r+1).
Rational critical_level(std::span<const Partition> weights, int r);
bool is_critical(std::span<const Partition> weights, int r, int level);
bool is_above_critical(std::span<const Partition> weights, int r, int level);

/// Rank by the cohomological form of Witten's dictionary: a classical
/// coefficient on Gr(r+1, r+1+l+s) when the slack s is <= 0, otherwise the
/// q^s coefficient in QH*Gr(r+1, r+1+l).
Integer cb_rank(const CbBundle& bundle);

/// The two branches of the dictionary, valid when total weight is
/// (r+1)(level+s) with s <= 0 and s >= 0 respectively. At s = 0 they must agree.
Integer cb_rank_classical(const CbBundle& bundle);
Integer cb_rank_quantum(const CbBundle& bundle);

ConformalWeight conformal_weight(const Partition& lambda, int r, int level);

/// Index of the dual representation: complement in the (r+1) x lambda_1
/// rectangle, rows reversed.
Partition dual_weight(const Partition& lambda, int r);

/// Degree of c_1 on M_{0,4}: rank times the sum of the four conformal weights,
/// minus the three boundary corrections summed over the node weights. Throws
/// std::logic_error if the result is not a nonnegative integer.
Integer cb_c1_degree_m04(const CbBundle& bundle);

/// Terms of the F-curve pairing of c_1 on M_{0,n} at the critical level.
std::vector<FCurveSummand> cb_fcurve_summands(const CbBundle& bundle, const FCurve& curve);
Integer cb_dot_fcurve(const CbBundle& bundle, const FCurve& curve);

/// Rank at the critical level under the column condition with equality, as
/// the classical coefficient of (l^{r+1}, 1^{r+1}).
Integer newwitten_rank(std::span<const Partition> weights, int r, int level);

/// c_1 degree against the product of the level one degree of the first
/// columns and the level l-1 rank of the remainders.
IdentitySides critical_identity(std::span<const Partition> weights, int r, int level);

/// Degree for (sl_{r+1}, weights, l) against (sl_{l+1}, transposed weights, r).
IdentitySides transpose_symmetry_check(std::span<const Partition> weights, int r, int level);

}  // namespace gwcb

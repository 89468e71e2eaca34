#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>

#include "gwcb/integer.hpp"
#include "gwcb/partition.hpp"
#include "gwcb/schur.hpp"

namespace gwcb {

/// Element of QH*Gr(k,m): coefficient of q^d sigma_nu keyed by (d, nu).
using QExpansion = std::map<std::pair<int, Partition>, Integer>;

/// Result of removing m-rim-hooks until the shape fits the k x (m-k) box.
struct RimHookReduction {
  int sign = 1;
  int degree = 0;
  Partition shape;

  bool operator==(const RimHookReduction&) const = default;
};

/// Reduces a Schur function to its image in QH*Gr(k,m). Shapes wider than m-k
/// vanish; taller shapes lose m-rim-hooks column-wise. The whole reduction is
/// read off an abacus with m runners, so the result does not depend on the
/// order in which hooks are removed. std::nullopt is the zero class.
std::optional<RimHookReduction> rim_hook_reduce(const Partition& lambda, int k, int m);

/// sigma_{lambda^1} * ... * sigma_{lambda^n} in QH*Gr(k,m).
QExpansion quantum_multiply(std::span<const Partition> factors, int k, int m);

/// The same product computed as one classical product followed by a single
/// reduction pass. Kept as an independent route for cross-checks.
QExpansion quantum_multiply_direct(std::span<const Partition> factors, int k, int m);

/// Coefficient of q^d sigma_nu in the quantum product.
Integer quantum_lr_coefficient(std::span<const Partition> factors, int d, const Partition& nu,
                               int k, int m);

/// I_d(sigma_1, sigma_2, sigma_3) on Gr(rows, rows+cols). Throws unless the
/// weights add up to rows*cols + (rows+cols)*d.
Integer three_point_gw(const Partition& first, const Partition& second, const Partition& third,
                       int d, const Box& box);

struct IdentitySides {
  Integer lhs;
  Integer rhs;
  bool holds() const { return lhs == rhs; }
};

/// Degree one coefficient of q sigma_{(l^{r+1})} in sigma_{lambda^.} * sigma_{(l)}
/// on Gr(r+1, r+1+l) against the classical coefficient of
/// (l^{r+1}, 1^{r+1}). Requires total weight (r+1)(l+1) and total height
/// 2(r+1).
IdentitySides quantum_classical_identity(std::span<const Partition> factors, int r, int l);

std::size_t quantum_cache_size();
void clear_quantum_cache();

}  // namespace gwcb

#pragma once

#include <array>
#include <span>
#include <vector>

#include "gwcb/integer.hpp"
#include "gwcb/moduli.hpp"
#include "gwcb/partition.hpp"
#include "gwcb/quantum.hpp"

namespace gwcb {

/// n-point degree one invariant of Gr(r, r+l), computed as an intersection
/// of the line classes on Fl(r-1, r+1; r+l). Throws unless
/// sum |lambda^i| = rl + r + l + n - 3.
Integer gw_invariant_d1(std::span<const Partition> classes, const Box& box);

/// Degree of the Gromov-Witten divisor on M_{0,4}. Requires total weight
/// (r+1)(l+1).
Integer gw_divisor_degree_m04(std::span<const Partition> classes, const Box& box);

/// The degree against the product of the intersection numbers of the first
/// column pieces on Gr(r-1, r+1) and the remainders on Gr(r+1, r+l).
IdentitySides gw_column_factorization(std::span<const Partition> classes, const Box& box);

/// Every mu with a nonzero block factor for all four blocks, in lexicographic
/// order of mu. Summands with zero degree are kept so callers can compare
/// term by term.
std::vector<FCurveSummand> gw_fcurve_summands(std::span<const Partition> classes,
                                              const Box& box, const FCurve& curve);

/// Intersection of the Gromov-Witten divisor on M_{0,n} with an F-curve.
Integer gw_dot_fcurve(std::span<const Partition> classes, const Box& box, const FCurve& curve);

/// The classes attached to the markings in one block of an F-curve.
std::vector<Partition> block_classes(std::span<const Partition> classes,
                                     const FCurve::Block& block);

}  // namespace gwcb

#pragma once

#include <array>
#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gwcb/integer.hpp"
#include "gwcb/partition.hpp"

namespace gwcb {

/// An F-curve on M_{0,n}: a partition of the markings {1..n} into four
/// nonempty blocks. Blocks are stored sorted, ordered by their minima.
class FCurve {
 public:
  using Block = std::vector<int>;

  explicit FCurve(std::vector<Block> blocks);

  int n() const { return n_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& block(std::size_t j) const { return blocks_[j]; }

  auto operator<=>(const FCurve&) const = default;
  bool operator==(const FCurve&) const = default;

 private:
  std::vector<Block> blocks_;
  int n_ = 0;
};

/// `{1,2|3|4|5,6}`.
std::string to_string(const FCurve& curve);
FCurve parse_fcurve(std::string_view text);

/// All F-curves of M_{0,n} in canonical order; there are S(n,4) of them.
std::vector<FCurve> enumerate_fcurves(int n);

/// The numerical class of a divisor, recorded as its degree on every F-curve.
struct DivisorVector {
  int n = 0;
  std::vector<std::pair<FCurve, Integer>> values;

  bool is_zero() const;
  bool operator==(const DivisorVector&) const = default;
};

/// One term of a divisor's pairing with an F-curve: the classes mu^1..mu^4
/// glued at the nodes, the M_{0,4} degree at mu, and the four block factors.
struct FCurveSummand {
  std::array<Partition, 4> mu;
  Integer degree;
  std::array<Integer, 4> block_factors;

  Integer value() const {
    return degree * block_factors[0] * block_factors[1] * block_factors[2] * block_factors[3];
  }
};

DivisorVector divisor_vector(const std::function<Integer(const FCurve&)>& eval, int n);

}  // namespace gwcb

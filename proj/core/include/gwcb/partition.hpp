#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gwcb {

class Box;

/// A weakly decreasing sequence of nonnegative integers. Trailing zeros are
/// dropped on construction, so (2,1,0) and (2,1) are the same value.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// (cols^rows); empty when either side is zero.
  static Partition rectangle(int rows, int cols);
  /// (1^height).
  static Partition column(int height) { return rectangle(height, 1); }

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }

  /// Zero-based row access; rows past the end read as 0.
  int operator[](std::size_t row) const {
    return row < parts_.size() ? parts_[row] : 0;
  }

  int length() const { return static_cast<int>(parts_.size()); }
  int width() const { return parts_.empty() ? 0 : parts_.front(); }
  int weight() const;
  bool empty() const { return parts_.empty(); }

  /// True when the diagram of `inner` sits inside this one.
  bool contains(const Partition& inner) const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// The rows x cols rectangle (cols^rows) indexing Schubert classes of
/// Gr(rows, rows + cols).
class Box {
 public:
  Box(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int area() const { return rows_ * cols_; }
  bool contains(const Partition& lambda) const;
  Partition full() const { return Partition::rectangle(rows_, cols_); }

  bool operator==(const Box&) const = default;

 private:
  int rows_;
  int cols_;
};

using PartitionTuple = std::vector<Partition>;

int weight(const Partition& lambda);
int num_rows(const Partition& lambda);
Partition transpose(const Partition& lambda);

/// Complement of lambda in the box, read bottom to top.
Partition dual_in_box(const Partition& lambda, const Box& box);

/// Complement of nu in the (r+1) x nu_1 rectangle, read bottom to top. The
/// empty partition is its own star dual.
Partition star_dual(const Partition& nu, int r);

struct FirstColumnSplit {
  Partition alpha;   // (1^{#lambda - 1})
  Partition beta;    // lambda with its first column removed
  Partition column;  // (1^{#lambda})
};
FirstColumnSplit split_first_column(const Partition& lambda);

/// lambda with its first column removed.
Partition remove_first_column(const Partition& lambda);

enum class ColumnCondition { holds_strictly_below, holds_with_equality, fails };

/// Sum of weights must equal (r+1)(l+1); the sum of first-column heights is
/// then compared against 2(r+1).
ColumnCondition column_condition(std::span<const Partition> tuple, const Box& box);

std::string to_string(ColumnCondition condition);

int total_weight(std::span<const Partition> tuple);
int total_rows(std::span<const Partition> tuple);

/// Text form `[4,4,2,1]`; `[]` is the empty partition.
std::string to_string(const Partition& lambda);
Partition parse_partition(std::string_view text);

/// Semicolon separated list of partitions, `[2,2];[2,1];[1];[1]`.
PartitionTuple parse_partition_tuple(std::string_view text);
std::string to_string(std::span<const Partition> tuple);

/// The tuple sorted descending lexicographically; symmetric quantities are
/// keyed by this form.
PartitionTuple canonical_tuple(std::span<const Partition> tuple);

/// All partitions inside rows x cols, in increasing lexicographic order.
std::vector<Partition> partitions_in_box(int rows, int cols);
std::vector<Partition> partitions_in_box(int rows, int cols, int weight);

struct PartitionHash {
  std::size_t operator()(const Partition& lambda) const noexcept;
};

}  // namespace gwcb

template <>
struct std::hash<gwcb::Partition> {
  std::size_t operator()(const gwcb::Partition& lambda) const noexcept {
    return gwcb::PartitionHash{}(lambda);
  }
};

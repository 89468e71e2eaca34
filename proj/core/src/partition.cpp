#include "gwcb/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "gwcb/memo.hpp"

namespace gwcb {

namespace {

void normalize(std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw std::invalid_argument("partition has a negative part");
    if (i > 0 && parts[i] > parts[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

std::string_view trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

void enumerate_rows(int rows, int cols, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out, int remaining_weight) {
  // remaining_weight < 0 means no weight constraint.
  if (static_cast<int>(prefix.size()) == rows) {
    if (remaining_weight <= 0) out.emplace_back(prefix);
    return;
  }
  const int left = rows - static_cast<int>(prefix.size());
  int hi = max_part;
  int lo = 0;
  if (remaining_weight >= 0) {
    hi = std::min(hi, remaining_weight);
    // The remaining rows must be able to absorb what is left.
    lo = std::max(0, remaining_weight - (left - 1) * std::min(max_part, cols));
    if (lo > hi) return;
  }
  for (int part = lo; part <= hi; ++part) {
    prefix.push_back(part);
    enumerate_rows(rows, cols, part, prefix, out,
                   remaining_weight >= 0 ? remaining_weight - part : -1);
    prefix.pop_back();
  }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) {
  normalize(parts_);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  normalize(parts_);
}

Partition Partition::rectangle(int rows, int cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative rectangle side");
  if (rows == 0 || cols == 0) return {};
  return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 0; i < inner.length(); ++i) {
    if (inner.parts_[i] > parts_[i]) return false;
  }
  return true;
}

Box::Box(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("box sides must be positive");
}

bool Box::contains(const Partition& lambda) const {
  return lambda.length() <= rows_ && lambda.width() <= cols_;
}

int weight(const Partition& lambda) { return lambda.weight(); }

int num_rows(const Partition& lambda) { return lambda.length(); }

Partition transpose(const Partition& lambda) {
  std::vector<int> out(static_cast<std::size_t>(lambda.width()), 0);
  for (int part : lambda.parts()) {
    for (int j = 0; j < part; ++j) ++out[j];
  }
  return Partition(std::move(out));
}

Partition dual_in_box(const Partition& lambda, const Box& box) {
  if (!box.contains(lambda)) {
    throw std::invalid_argument("partition " + to_string(lambda) + " does not fit the " +
                                std::to_string(box.rows()) + "x" +
                                std::to_string(box.cols()) + " box");
  }
  std::vector<int> out(static_cast<std::size_t>(box.rows()));
  for (int i = 0; i < box.rows(); ++i) out[i] = box.cols() - lambda[box.rows() - 1 - i];
  return Partition(std::move(out));
}

Partition star_dual(const Partition& nu, int r) {
  if (nu.length() > r + 1) {
    throw std::invalid_argument("star dual needs at most r+1 rows, got " + to_string(nu));
  }
  if (nu.empty()) return {};
  std::vector<int> out(static_cast<std::size_t>(r + 1));
  for (int i = 0; i <= r; ++i) out[i] = nu.width() - nu[r - i];
  return Partition(std::move(out));
}

Partition remove_first_column(const Partition& lambda) {
  std::vector<int> out;
  out.reserve(lambda.parts().size());
  for (int part : lambda.parts()) out.push_back(part - 1);
  return Partition(std::move(out));
}

FirstColumnSplit split_first_column(const Partition& lambda) {
  const int height = lambda.length();
  return {Partition::column(std::max(height - 1, 0)), remove_first_column(lambda),
          Partition::column(height)};
}

int total_weight(std::span<const Partition> tuple) {
  int sum = 0;
  for (const auto& p : tuple) sum += p.weight();
  return sum;
}

int total_rows(std::span<const Partition> tuple) {
  int sum = 0;
  for (const auto& p : tuple) sum += p.length();
  return sum;
}

ColumnCondition column_condition(std::span<const Partition> tuple, const Box& box) {
  const int r = box.rows();
  const int l = box.cols();
  if (total_weight(tuple) != (r + 1) * (l + 1)) return ColumnCondition::fails;
  const int heights = total_rows(tuple);
  if (heights < 2 * (r + 1)) return ColumnCondition::holds_strictly_below;
  if (heights == 2 * (r + 1)) return ColumnCondition::holds_with_equality;
  return ColumnCondition::fails;
}

std::string to_string(ColumnCondition condition) {
  switch (condition) {
    case ColumnCondition::holds_strictly_below: return "holds_strictly_below";
    case ColumnCondition::holds_with_equality: return "holds_with_equality";
    case ColumnCondition::fails: return "fails";
  }
  return "fails";
}

std::string to_string(const Partition& lambda) {
  std::string out = "[";
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(lambda.parts()[i]);
  }
  out += ']';
  return out;
}

Partition parse_partition(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw std::invalid_argument("expected a bracketed partition like [2,1], got '" +
                                std::string(text) + "'");
  }
  std::string_view body = trim(text.substr(1, text.size() - 2));
  std::vector<int> parts;
  while (!body.empty()) {
    const auto comma = body.find(',');
    std::string_view token = trim(body.substr(0, comma));
    int value = 0;
    const char* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (token.empty() || ec != std::errc{} || ptr != end) {
      throw std::invalid_argument("bad partition part '" + std::string(token) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
    if (trim(body).empty()) throw std::invalid_argument("trailing comma in partition");
  }
  return Partition(std::move(parts));
}

PartitionTuple parse_partition_tuple(std::string_view text) {
  PartitionTuple out;
  text = trim(text);
  if (text.empty()) return out;
  while (true) {
    const auto semi = text.find(';');
    out.push_back(parse_partition(text.substr(0, semi)));
    if (semi == std::string_view::npos) break;
    text = text.substr(semi + 1);
  }
  return out;
}

std::string to_string(std::span<const Partition> tuple) {
  std::string out;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ';';
    out += to_string(tuple[i]);
  }
  return out;
}

PartitionTuple canonical_tuple(std::span<const Partition> tuple) {
  PartitionTuple out(tuple.begin(), tuple.end());
  std::sort(out.begin(), out.end(), std::greater<>{});
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_rows(rows, cols, cols, prefix, out, -1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols, int weight) {
  std::vector<Partition> out;
  if (weight < 0 || weight > rows * cols) return out;
  std::vector<int> prefix;
  if (weight == 0) return {Partition{}};
  enumerate_rows(rows, cols, cols, prefix, out, weight);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t PartitionHash::operator()(const Partition& lambda) const noexcept {
  std::size_t seed = lambda.parts().size();
  for (int part : lambda.parts()) hash_combine(seed, static_cast<std::size_t>(part));
  return seed;
}

}  // namespace gwcb

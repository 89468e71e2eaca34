#include "gwcb/schur.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gwcb/memo.hpp"

namespace gwcb {

namespace {

struct ProductKey {
  Partition outer;
  Partition content;
  Bound bound;
  bool operator==(const ProductKey&) const = default;
};

struct ProductKeyHash {
  std::size_t operator()(const ProductKey& key) const noexcept {
    std::size_t seed = PartitionHash{}(key.outer);
    hash_combine(seed, PartitionHash{}(key.content));
    hash_combine(seed, static_cast<std::size_t>(key.bound.rows));
    hash_combine(seed, static_cast<std::size_t>(key.bound.cols));
    return seed;
  }
};

ConcurrentMemo<ProductKey, SchurExpansion, ProductKeyHash>& product_cache() {
  static ConcurrentMemo<ProductKey, SchurExpansion, ProductKeyHash> cache;
  return cache;
}

// A partially filled LR tableau: the current outer shape and how many boxes
// carry the most recent label in each row.
using TableauState = std::pair<std::vector<int>, std::vector<int>>;

class StripPlacer {
 public:
  StripPlacer(const TableauState& from, int amount, bool first_label, Bound bound,
              const Integer& weight, std::map<TableauState, Integer>& out)
      : old_(from.first),
        previous_(from.second),
        amount_(amount),
        first_label_(first_label),
        bound_(bound),
        weight_(weight),
        out_(out) {
    old_.push_back(0);
    shape_ = old_;
    placed_.assign(shape_.size(), 0);
    previous_.resize(shape_.size(), 0);
  }

  void run() { place(0, amount_, 0, 0); }

 private:
  // `mine` counts this label in rows < row; `theirs` counts the previous label
  // in rows < row. The lattice condition caps this label in rows <= row by the
  // previous label in rows <= row - 1.
  void place(std::size_t row, int remaining, int mine, int theirs) {
    if (remaining == 0) {
      emit();
      return;
    }
    if (row >= shape_.size()) return;
    if (static_cast<int>(row) >= bound_.rows) return;

    int room = remaining;
    if (row > 0) room = std::min(room, old_[row - 1] - old_[row]);
    room = std::min(room, bound_.cols - old_[row]);
    if (!first_label_) room = std::min(room, theirs - mine);
    const int next_theirs = theirs + (row < previous_.size() ? previous_[row] : 0);

    for (int x = std::max(room, 0); x >= 0; --x) {
      shape_[row] = old_[row] + x;
      placed_[row] = x;
      place(row + 1, remaining - x, mine + x, next_theirs);
    }
    shape_[row] = old_[row];
    placed_[row] = 0;
  }

  void emit() {
    std::vector<int> shape = shape_;
    while (!shape.empty() && shape.back() == 0) shape.pop_back();
    std::vector<int> placed = placed_;
    while (!placed.empty() && placed.back() == 0) placed.pop_back();
    out_[{std::move(shape), std::move(placed)}] += weight_;
  }

  std::vector<int> old_;
  std::vector<int> previous_;
  std::vector<int> shape_;
  std::vector<int> placed_;
  int amount_;
  bool first_label_;
  Bound bound_;
  const Integer& weight_;
  std::map<TableauState, Integer>& out_;
};

// Adds labelled horizontal strips of sizes content_1, content_2, ... to
// `outer` subject to the lattice word condition, merging tableaux that reach
// the same (shape, last strip) state.
SchurExpansion lr_strips(const Partition& outer, const Partition& content, Bound bound) {
  SchurExpansion result;
  if (!bound.admits(outer) || !bound.admits(content)) return result;

  std::map<TableauState, Integer> states;
  states[{outer.vec(), {}}] = 1;
  bool first = true;
  for (int amount : content.parts()) {
    std::map<TableauState, Integer> next;
    for (const auto& [state, weight] : states) {
      StripPlacer(state, amount, first, bound, weight, next).run();
    }
    states = std::move(next);
    first = false;
  }
  for (const auto& [state, weight] : states) {
    result[Partition(state.first)] += weight;
  }
  return result;
}

}  // namespace

void accumulate(SchurExpansion& into, const Partition& term, const Integer& scale) {
  if (scale == 0) return;
  auto [it, inserted] = into.try_emplace(term, scale);
  if (!inserted) {
    it->second += scale;
    if (it->second == 0) into.erase(it);
  }
}

SchurExpansion multiply_pair(const Partition& lambda, const Partition& mu, Bound bound) {
  if (!bound.admits(lambda) || !bound.admits(mu)) return {};
  if (lambda.empty()) return {{mu, 1}};
  if (mu.empty()) return {{lambda, 1}};

  // Filling with the lighter factor keeps the state space small.
  const bool swap = mu.weight() > lambda.weight() ||
                    (mu.weight() == lambda.weight() && mu > lambda);
  const Partition& outer = swap ? mu : lambda;
  const Partition& content = swap ? lambda : mu;
  ProductKey key{outer, content, bound};
  return *product_cache().get_or_compute(key,
                                         [&] { return lr_strips(outer, content, bound); });
}

Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.weight() + mu.weight() != nu.weight()) return 0;
  if (!nu.contains(lambda) || !nu.contains(mu)) return 0;
  const auto product = multiply_pair(lambda, mu, Bound::around(nu));
  const auto it = product.find(nu);
  return it == product.end() ? Integer(0) : it->second;
}

SchurExpansion multiply_schur(std::span<const Partition> factors, Bound bound) {
  std::vector<Partition> ordered(factors.begin(), factors.end());
  // Heavy factors first keeps intermediate expansions narrow for longer.
  std::sort(ordered.begin(), ordered.end(), [](const Partition& x, const Partition& y) {
    return x.weight() != y.weight() ? x.weight() > y.weight() : x > y;
  });

  SchurExpansion acc{{Partition{}, 1}};
  if (!bound.admits(Partition{})) return {};
  for (const auto& factor : ordered) {
    if (!bound.admits(factor)) return {};
    SchurExpansion next;
    for (const auto& [term, coeff] : acc) {
      for (const auto& [nu, c] : multiply_pair(term, factor, bound)) {
        accumulate(next, nu, coeff * c);
      }
    }
    acc = std::move(next);
    if (acc.empty()) break;
  }
  return acc;
}

Integer generalized_lr(std::span<const Partition> factors, const Partition& nu) {
  if (total_weight(factors) != nu.weight()) return 0;
  for (const auto& f : factors) {
    if (!nu.contains(f)) return 0;
  }
  const auto product = multiply_schur(factors, Bound::around(nu));
  const auto it = product.find(nu);
  return it == product.end() ? Integer(0) : it->second;
}

Integer grassmannian_intersection(std::span<const Partition> factors, const Box& box) {
  for (const auto& f : factors) {
    if (!box.contains(f)) {
      throw std::invalid_argument("class " + to_string(f) + " is outside the " +
                                  std::to_string(box.rows()) + "x" +
                                  std::to_string(box.cols()) + " box");
    }
  }
  return generalized_lr(factors, box.full());
}

Integer rectangle_intersection(std::span<const Partition> factors, int rows, int cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative rectangle side");
  for (const auto& f : factors) {
    if (f.length() > rows || f.width() > cols) return 0;
  }
  if (rows == 0 || cols == 0) return 1;
  return generalized_lr(factors, Partition::rectangle(rows, cols));
}

std::size_t schur_cache_size() { return product_cache().size(); }

void clear_schur_cache() { product_cache().clear(); }

}  // namespace gwcb

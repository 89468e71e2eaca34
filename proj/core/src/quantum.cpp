#include "gwcb/quantum.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <vector>

#include "gwcb/memo.hpp"

namespace gwcb {

namespace {

void check_grassmannian(int k, int m) {
  if (k < 1 || m <= k) {
    throw std::invalid_argument("need m > k >= 1 for Gr(k,m), got k=" + std::to_string(k) +
                                ", m=" + std::to_string(m));
  }
}

void check_in_box(std::span<const Partition> factors, int k, int m) {
  const Box box(k, m - k);
  for (const auto& f : factors) {
    if (!box.contains(f)) {
      throw std::invalid_argument("class " + to_string(f) + " does not index a Schubert class of Gr(" +
                                  std::to_string(k) + "," + std::to_string(m) + ")");
    }
  }
}

void add_term(QExpansion& into, int degree, const Partition& shape, const Integer& value) {
  if (value == 0) return;
  auto [it, inserted] = into.try_emplace({degree, shape}, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) into.erase(it);
  }
}

void reduce_into(QExpansion& into, int base_degree, const SchurExpansion& classical,
                 const Integer& scale, int k, int m) {
  for (const auto& [shape, coeff] : classical) {
    const auto reduced = rim_hook_reduce(shape, k, m);
    if (!reduced) continue;
    add_term(into, base_degree + reduced->degree, reduced->shape,
             scale * coeff * reduced->sign);
  }
}

struct QuantumKey {
  Partition left;
  Partition right;
  int k;
  int m;
  bool operator==(const QuantumKey&) const = default;
};

struct QuantumKeyHash {
  std::size_t operator()(const QuantumKey& key) const noexcept {
    std::size_t seed = PartitionHash{}(key.left);
    hash_combine(seed, PartitionHash{}(key.right));
    hash_combine(seed, static_cast<std::size_t>(key.k));
    hash_combine(seed, static_cast<std::size_t>(key.m));
    return seed;
  }
};

ConcurrentMemo<QuantumKey, QExpansion, QuantumKeyHash>& quantum_cache() {
  static ConcurrentMemo<QuantumKey, QExpansion, QuantumKeyHash> cache;
  return cache;
}

// sigma_a * sigma_b for two Schubert classes of Gr(k,m).
const QExpansion& quantum_pair(const Partition& a, const Partition& b, int k, int m) {
  QuantumKey key = a < b ? QuantumKey{a, b, k, m} : QuantumKey{b, a, k, m};
  return *quantum_cache().get_or_compute(key, [&] {
    QExpansion out;
    reduce_into(out, 0, multiply_pair(key.left, key.right, Bound{INT_MAX, m - k}), 1, k, m);
    return out;
  });
}

}  // namespace

std::optional<RimHookReduction> rim_hook_reduce(const Partition& lambda, int k, int m) {
  check_grassmannian(k, m);
  const int cols = m - k;
  if (lambda.width() > cols) return std::nullopt;
  if (lambda.length() <= k) return RimHookReduction{1, 0, lambda};

  // Work with the transpose, which has at most `cols` rows; its beta-numbers
  // are the bead positions on an m-runner abacus.
  const Partition conj = transpose(lambda);
  std::vector<int> beads(static_cast<std::size_t>(cols));
  for (int i = 0; i < cols; ++i) beads[i] = conj[i] + cols - 1 - i;

  std::vector<int> residues(beads.size());
  int degree = 0;
  for (std::size_t i = 0; i < beads.size(); ++i) {
    residues[i] = beads[i] % m;
    degree += beads[i] / m;
  }
  {
    std::vector<int> sorted = residues;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  }

  // Each hook has height one more than the number of beads it jumps over.
  // Summed over all hooks that is d(cols-1) plus the parity of the permutation
  // that re-sorts the residues.
  int inversions = 0;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    for (std::size_t j = i + 1; j < residues.size(); ++j) {
      if (residues[i] < residues[j]) ++inversions;
    }
  }
  const int parity = (degree * (cols - 1) + inversions) % 2;

  std::sort(residues.begin(), residues.end(), std::greater<>{});
  std::vector<int> conj_parts(residues.size());
  for (int i = 0; i < cols; ++i) conj_parts[i] = residues[i] - (cols - 1 - i);
  return RimHookReduction{parity ? -1 : 1, degree, transpose(Partition(std::move(conj_parts)))};
}

QExpansion quantum_multiply(std::span<const Partition> factors, int k, int m) {
  check_grassmannian(k, m);
  check_in_box(factors, k, m);
  QExpansion acc{{{0, Partition{}}, 1}};
  for (const auto& factor : factors) {
    QExpansion next;
    for (const auto& [key, coeff] : acc) {
      for (const auto& [term, c] : quantum_pair(key.second, factor, k, m)) {
        add_term(next, key.first + term.first, term.second, coeff * c);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

QExpansion quantum_multiply_direct(std::span<const Partition> factors, int k, int m) {
  check_grassmannian(k, m);
  check_in_box(factors, k, m);
  QExpansion out;
  reduce_into(out, 0, multiply_schur(factors, Bound{INT_MAX, m - k}), 1, k, m);
  return out;
}

Integer quantum_lr_coefficient(std::span<const Partition> factors, int d, const Partition& nu,
                               int k, int m) {
  check_grassmannian(k, m);
  check_in_box(factors, k, m);
  if (d < 0 || total_weight(factors) != nu.weight() + m * d) return 0;
  if (!Box(k, m - k).contains(nu)) return 0;
  const auto product = quantum_multiply(factors, k, m);
  const auto it = product.find({d, nu});
  return it == product.end() ? Integer(0) : it->second;
}

Integer three_point_gw(const Partition& first, const Partition& second, const Partition& third,
                       int d, const Box& box) {
  const int k = box.rows();
  const int m = box.rows() + box.cols();
  const int total = first.weight() + second.weight() + third.weight();
  if (d < 0 || total != box.area() + m * d) {
    throw std::invalid_argument("three-point invariant of degree " + std::to_string(d) +
                                " needs total codimension " +
                                std::to_string(box.area() + m * d) + ", got " +
                                std::to_string(total));
  }
  const std::vector<Partition> pair{first, second};
  return quantum_lr_coefficient(pair, d, dual_in_box(third, box), k, m);
}

IdentitySides quantum_classical_identity(std::span<const Partition> factors, int r, int l) {
  if (r < 1 || l < 1) throw std::invalid_argument("need r, l >= 1");
  const Box box(r, l);
  for (const auto& f : factors) {
    if (!box.contains(f)) throw std::invalid_argument(to_string(f) + " is outside the r x l box");
  }
  if (total_weight(factors) != (r + 1) * (l + 1)) {
    throw std::invalid_argument("total weight must be (r+1)(l+1)");
  }
  if (total_rows(factors) != 2 * (r + 1)) {
    throw std::invalid_argument("total number of rows must be 2(r+1)");
  }
  std::vector<Partition> with_row(factors.begin(), factors.end());
  with_row.push_back(Partition{l});
  IdentitySides sides;
  sides.lhs = quantum_lr_coefficient(with_row, 1, Partition::rectangle(r + 1, l), r + 1, r + 1 + l);

  std::vector<int> target(static_cast<std::size_t>(2 * (r + 1)), 1);
  std::fill(target.begin(), target.begin() + (r + 1), l);
  sides.rhs = generalized_lr(factors, Partition(std::move(target)));
  return sides;
}

std::size_t quantum_cache_size() { return quantum_cache().size(); }
void clear_quantum_cache() { quantum_cache().clear(); }

}  // namespace gwcb

#include "gwcb/cb.hpp"

#include <stdexcept>
#include <string>

#include "gwcb/gw.hpp"
#include "gwcb/memo.hpp"
#include "gwcb/schur.hpp"

namespace gwcb {

namespace {

void check_bundle(const CbBundle& bundle) {
  if (bundle.r < 1) throw std::invalid_argument("sl_{r+1} needs r >= 1");
  if (bundle.level < 0) throw std::invalid_argument("level must be nonnegative");
  for (const auto& w : bundle.weights) {
    if (w.length() > bundle.r || w.width() > bundle.level) {
      throw std::invalid_argument("weight " + to_string(w) + " is not dominant of level " +
                                  std::to_string(bundle.level) + " for sl_" +
                                  std::to_string(bundle.r + 1));
    }
  }
}

std::string bundle_key(const CbBundle& bundle) {
  return to_string(canonical_tuple(bundle.weights)) + "@" + std::to_string(bundle.r) + "," +
         std::to_string(bundle.level);
}

ConcurrentMemo<std::string, Integer>& rank_cache() {
  static ConcurrentMemo<std::string, Integer> cache;
  return cache;
}

ConcurrentMemo<std::string, Integer>& degree_cache() {
  static ConcurrentMemo<std::string, Integer> cache;
  return cache;
}

void check_critical(const CbBundle& bundle) {
  const int expected = (bundle.r + 1) * (bundle.level + 1);
  if (total_weight(bundle.weights) != expected) {
    throw std::invalid_argument("not at the critical level: total weight " +
                                std::to_string(total_weight(bundle.weights)) + " != (r+1)(l+1) = " +
                                std::to_string(expected));
  }
}

Integer compute_degree(const CbBundle& bundle) {
  const int r = bundle.r;
  const int l = bundle.level;
  const auto& w = bundle.weights;
  const Integer rank = cb_rank(bundle);
  // Factorization writes the rank as a sum of products of three-point ranks
  // for every pairing, so a zero bundle has every correction term zero too.
  if (rank == 0) return 0;

  Rational degree = 0;
  for (const auto& lambda : w) degree += conformal_weight(lambda, r, l).value;
  degree *= rank;

  static constexpr int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  const auto node_weights = partitions_in_box(r, l);
  for (const auto& p : pairings) {
    const Partition& a = w[p[0]];
    const Partition& b = w[p[1]];
    const Partition& c = w[p[2]];
    const Partition& d = w[p[3]];
    for (const auto& mu : node_weights) {
      if ((a.weight() + b.weight() + mu.weight()) % (r + 1) != 0) continue;
      const Integer left = cb_rank({r, l, {a, b, mu}});
      if (left == 0) continue;
      const Integer right = cb_rank({r, l, {c, d, dual_weight(mu, r)}});
      if (right == 0) continue;
      degree -= conformal_weight(mu, r, l).value * Rational(left * right);
    }
  }
  if (boost::multiprecision::denominator(degree) != 1 || degree < 0) {
    throw std::logic_error("c_1 degree of V(sl_" + std::to_string(r + 1) + ", " + to_string(w) +
                           ", " + std::to_string(l) + ") came out as " + gwcb::to_string(degree));
  }
  return boost::multiprecision::numerator(degree);
}

}  // namespace

Rational critical_level(std::span<const Partition> weights, int r) {
  return Rational(total_weight(weights), r + 1) - 1;
}

bool is_critical(std::span<const Partition> weights, int r, int level) {
  return critical_level(weights, r) == level;
}

bool is_above_critical(std::span<const Partition> weights, int r, int level) {
  return Rational(level) > critical_level(weights, r);
}

Integer cb_rank_classical(const CbBundle& bundle) {
  check_bundle(bundle);
  const int total = total_weight(bundle.weights);
  const int slack = total / (bundle.r + 1) - bundle.level;
  if (total % (bundle.r + 1) != 0 || slack > 0) {
    throw std::invalid_argument("classical branch needs total weight (r+1)(l+s) with s <= 0");
  }
  return generalized_lr(bundle.weights, Partition::rectangle(bundle.r + 1, bundle.level + slack));
}

Integer cb_rank_quantum(const CbBundle& bundle) {
  check_bundle(bundle);
  const int total = total_weight(bundle.weights);
  const int slack = total / (bundle.r + 1) - bundle.level;
  if (total % (bundle.r + 1) != 0 || slack < 0) {
    throw std::invalid_argument("quantum branch needs total weight (r+1)(l+s) with s >= 0");
  }
  if (bundle.level == 0) return 1;
  const int k = bundle.r + 1;
  const int m = k + bundle.level;
  std::vector<Partition> factors = bundle.weights;
  factors.insert(factors.end(), static_cast<std::size_t>(slack), Partition{bundle.level});
  return quantum_lr_coefficient(factors, slack, Partition::rectangle(k, bundle.level), k, m);
}

Integer cb_rank(const CbBundle& bundle) {
  check_bundle(bundle);
  const int total = total_weight(bundle.weights);
  if (total % (bundle.r + 1) != 0) return 0;
  // Only the trivial weight has level zero, and its space of blocks is C.
  if (bundle.level == 0) return 1;
  return *rank_cache().get_or_compute(bundle_key(bundle), [&] {
    const int slack = total / (bundle.r + 1) - bundle.level;
    CbBundle canonical{bundle.r, bundle.level, canonical_tuple(bundle.weights)};
    return slack <= 0 ? cb_rank_classical(canonical) : cb_rank_quantum(canonical);
  });
}

ConformalWeight conformal_weight(const Partition& lambda, int r, int level) {
  if (lambda.length() > r || lambda.width() > level) {
    throw std::invalid_argument(to_string(lambda) + " is outside the r x l box");
  }
  Rational casimir = 0;
  for (int i = 1; i <= lambda.length(); ++i) {
    const int part = lambda[i - 1];
    casimir += part * (part + r + 2 - 2 * i);
  }
  const int size = lambda.weight();
  casimir -= Rational(size * size, r + 1);
  return {casimir / (2 * (level + r + 1))};
}

Partition dual_weight(const Partition& lambda, int r) {
  if (lambda.length() > r) {
    throw std::invalid_argument(to_string(lambda) + " has more than r rows");
  }
  return star_dual(lambda, r);
}

Integer cb_c1_degree_m04(const CbBundle& bundle) {
  check_bundle(bundle);
  if (bundle.n() != 4) throw std::invalid_argument("M_{0,4} degrees take four weights");
  if (bundle.level == 0) return 0;
  CbBundle canonical{bundle.r, bundle.level, canonical_tuple(bundle.weights)};
  return *degree_cache().get_or_compute(bundle_key(canonical),
                                        [&] { return compute_degree(canonical); });
}

std::vector<FCurveSummand> cb_fcurve_summands(const CbBundle& bundle, const FCurve& curve) {
  check_bundle(bundle);
  check_critical(bundle);
  if (curve.n() != bundle.n()) throw std::invalid_argument("F-curve and bundle disagree on n");
  const int r = bundle.r;
  const int l = bundle.level;

  std::array<std::vector<std::pair<Partition, Integer>>, 4> candidates;
  for (std::size_t j = 0; j < 4; ++j) {
    const auto block = block_classes(bundle.weights, curve.block(j));
    for (const auto& nu : partitions_in_box(r, l, total_weight(block))) {
      auto with_node = block;
      with_node.push_back(dual_weight(nu, r));
      Integer factor = cb_rank({r, l, std::move(with_node)});
      if (factor != 0) candidates[j].emplace_back(nu, std::move(factor));
    }
    if (candidates[j].empty()) return {};
  }
  std::vector<FCurveSummand> out;
  for (const auto& [n0, c0] : candidates[0]) {
    for (const auto& [n1, c1] : candidates[1]) {
      for (const auto& [n2, c2] : candidates[2]) {
        for (const auto& [n3, c3] : candidates[3]) {
          FCurveSummand s;
          s.mu = {n0, n1, n2, n3};
          s.degree = cb_c1_degree_m04({r, l, {n0, n1, n2, n3}});
          s.block_factors = {c0, c1, c2, c3};
          out.push_back(std::move(s));
        }
      }
    }
  }
  return out;
}

Integer cb_dot_fcurve(const CbBundle& bundle, const FCurve& curve) {
  Integer total = 0;
  for (const auto& s : cb_fcurve_summands(bundle, curve)) total += s.value();
  return total;
}

Integer newwitten_rank(std::span<const Partition> weights, int r, int level) {
  if (total_weight(weights) != (r + 1) * (level + 1)) {
    throw std::invalid_argument("total weight must be (r+1)(l+1)");
  }
  if (total_rows(weights) != 2 * (r + 1)) {
    throw std::invalid_argument("total number of rows must be 2(r+1)");
  }
  std::vector<int> target(static_cast<std::size_t>(2 * (r + 1)), 1);
  std::fill(target.begin(), target.begin() + (r + 1), level);
  return generalized_lr(weights, Partition(std::move(target)));
}

IdentitySides critical_identity(std::span<const Partition> weights, int r, int level) {
  if (weights.size() != 4) throw std::invalid_argument("the identity is stated for n = 4");
  CbBundle bundle{r, level, {weights.begin(), weights.end()}};
  check_bundle(bundle);
  check_critical(bundle);
  if (total_rows(weights) != 2 * (r + 1)) {
    throw std::invalid_argument("total number of rows must be 2(r+1)");
  }
  CbBundle columns{r, 1, {}};
  CbBundle rest{r, level - 1, {}};
  for (const auto& w : weights) {
    auto split = split_first_column(w);
    columns.weights.push_back(std::move(split.column));
    rest.weights.push_back(std::move(split.beta));
  }
  return {cb_c1_degree_m04(bundle), cb_c1_degree_m04(columns) * cb_rank(rest)};
}

IdentitySides transpose_symmetry_check(std::span<const Partition> weights, int r, int level) {
  CbBundle bundle{r, level, {weights.begin(), weights.end()}};
  check_bundle(bundle);
  check_critical(bundle);
  CbBundle flipped{level, r, {}};
  for (const auto& w : weights) flipped.weights.push_back(transpose(w));
  return {cb_c1_degree_m04(bundle), cb_c1_degree_m04(flipped)};
}

}  // namespace gwcb

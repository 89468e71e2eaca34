#include "gwcb/gw.hpp"

#include <stdexcept>
#include <string>

#include "gwcb/flags.hpp"
#include "gwcb/memo.hpp"
#include "gwcb/schur.hpp"

namespace gwcb {

namespace {

void check_classes(std::span<const Partition> classes, const Box& box) {
  for (const auto& c : classes) {
    if (!box.contains(c)) {
      throw std::invalid_argument(to_string(c) + " is outside the " + std::to_string(box.rows()) +
                                  "x" + std::to_string(box.cols()) + " box");
    }
  }
}

void check_critical(std::span<const Partition> classes, const Box& box) {
  const int expected = (box.rows() + 1) * (box.cols() + 1);
  if (total_weight(classes) != expected) {
    throw std::invalid_argument("total weight " + std::to_string(total_weight(classes)) +
                                " is not (r+1)(l+1) = " + std::to_string(expected));
  }
}

ConcurrentMemo<std::string, Integer>& degree_cache() {
  static ConcurrentMemo<std::string, Integer> cache;
  return cache;
}

Integer line_class_integral(std::span<const Partition> classes, const Box& box) {
  const int r = box.rows();
  const int m = box.rows() + box.cols();
  const FlagShape shape(r - 1, r + 1, m);
  std::vector<Permutation> perms;
  perms.reserve(classes.size());
  for (const auto& c : classes) perms.push_back(level_d_perm(c, r, m, 1));
  return flag_intersection(perms, shape);
}

}  // namespace

Integer gw_invariant_d1(std::span<const Partition> classes, const Box& box) {
  check_classes(classes, box);
  const int r = box.rows();
  const int l = box.cols();
  const int n = static_cast<int>(classes.size());
  if (total_weight(classes) != r * l + r + l + n - 3) {
    throw std::invalid_argument("degree one invariant needs total weight rl + r + l + n - 3 = " +
                                std::to_string(r * l + r + l + n - 3));
  }
  return line_class_integral(classes, box);
}

Integer gw_divisor_degree_m04(std::span<const Partition> classes, const Box& box) {
  if (classes.size() != 4) throw std::invalid_argument("M_{0,4} degrees take four classes");
  check_classes(classes, box);
  check_critical(classes, box);
  const auto canonical = canonical_tuple(classes);
  const std::string key = to_string(canonical) + "@" + std::to_string(box.rows()) + "x" +
                          std::to_string(box.cols());
  return *degree_cache().get_or_compute(key, [&] { return line_class_integral(canonical, box); });
}

IdentitySides gw_column_factorization(std::span<const Partition> classes, const Box& box) {
  if (classes.size() != 4) throw std::invalid_argument("the factorization is stated for n = 4");
  check_classes(classes, box);
  check_critical(classes, box);
  if (total_rows(classes) > 2 * (box.rows() + 1)) {
    throw std::invalid_argument("the column condition fails");
  }
  std::vector<Partition> alphas;
  std::vector<Partition> betas;
  for (const auto& c : classes) {
    auto split = split_first_column(c);
    alphas.push_back(std::move(split.alpha));
    betas.push_back(std::move(split.beta));
  }
  const int r = box.rows();
  const int l = box.cols();
  return {gw_divisor_degree_m04(classes, box),
          rectangle_intersection(alphas, r - 1, 2) * rectangle_intersection(betas, r + 1, l - 1)};
}

std::vector<Partition> block_classes(std::span<const Partition> classes,
                                     const FCurve::Block& block) {
  std::vector<Partition> out;
  out.reserve(block.size());
  for (int marking : block) {
    if (marking < 1 || marking > static_cast<int>(classes.size())) {
      throw std::invalid_argument("F-curve marking " + std::to_string(marking) + " out of range");
    }
    out.push_back(classes[marking - 1]);
  }
  return out;
}

std::vector<FCurveSummand> gw_fcurve_summands(std::span<const Partition> classes,
                                              const Box& box, const FCurve& curve) {
  check_classes(classes, box);
  check_critical(classes, box);
  if (curve.n() != static_cast<int>(classes.size())) {
    throw std::invalid_argument("F-curve and class tuple disagree on n");
  }
  // int_Gr sigma_{lambda(N_j)} sigma_{mu^vee} is the coefficient of sigma_mu
  // in the box-truncated product over the block.
  std::array<SchurExpansion, 4> supports;
  for (std::size_t j = 0; j < 4; ++j) {
    supports[j] = multiply_schur(block_classes(classes, curve.block(j)), Bound::of(box));
    if (supports[j].empty()) return {};
  }
  std::vector<FCurveSummand> out;
  for (const auto& [m0, c0] : supports[0]) {
    for (const auto& [m1, c1] : supports[1]) {
      for (const auto& [m2, c2] : supports[2]) {
        for (const auto& [m3, c3] : supports[3]) {
          FCurveSummand s;
          s.mu = {m0, m1, m2, m3};
          s.degree = gw_divisor_degree_m04(s.mu, box);
          s.block_factors = {c0, c1, c2, c3};
          out.push_back(std::move(s));
        }
      }
    }
  }
  return out;
}

Integer gw_dot_fcurve(std::span<const Partition> classes, const Box& box, const FCurve& curve) {
  Integer total = 0;
  for (const auto& s : gw_fcurve_summands(classes, box, curve)) total += s.value();
  return total;
}

}  // namespace gwcb

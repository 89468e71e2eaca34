#include "gwcb/verify.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "gwcb/schur.hpp"

namespace gwcb {

namespace {

struct WorkerResult {
  std::size_t comparisons = 0;
  std::vector<Mismatch> mismatches;
};

using TupleCheck = std::function<void(const PartitionTuple&, WorkerResult&)>;

// Runs `check` over the tuples on `jobs` threads with a fixed striding, then
// merges. Mismatches are sorted so reports do not depend on scheduling.
void run_sweep(const std::vector<PartitionTuple>& tuples, unsigned jobs, const TupleCheck& check,
               SweepReport& report) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tuples.size()) + 1));
  std::vector<WorkerResult> results(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  auto worker = [&](unsigned id) {
    try {
      for (std::size_t i = id; i < tuples.size(); i += jobs) check(tuples[i], results[id]);
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  report.tuples_checked = tuples.size();
  for (auto& r : results) {
    report.comparisons += r.comparisons;
    for (auto& m : r.mismatches) report.mismatches.push_back(std::move(m));
  }
  std::sort(report.mismatches.begin(), report.mismatches.end(),
            [](const Mismatch& x, const Mismatch& y) {
              return std::tie(x.tuple, x.curve, x.what) < std::tie(y.tuple, y.curve, y.what);
            });
}

Integer cached(DegreeStore* store, std::string_view kind, const std::string& key,
               const std::function<Integer()>& compute) {
  if (store) {
    if (auto hit = store->lookup(kind, key)) return *hit;
  }
  Integer value = compute();
  if (store) store->store(kind, key, value);
  return value;
}

Integer gw_degree(std::span<const Partition> tuple, const Box& box, DegreeStore* store) {
  return cached(store, "gw_deg4", degree_key(tuple, box),
                [&] { return gw_divisor_degree_m04(tuple, box); });
}

Integer cb_degree(std::span<const Partition> tuple, const Box& box, DegreeStore* store) {
  return cached(store, "cb_deg4", degree_key(tuple, box), [&] {
    return cb_c1_degree_m04({box.rows(), box.cols(), {tuple.begin(), tuple.end()}});
  });
}

void collect_tuples(const std::vector<Partition>& pool, std::size_t start, int remaining_slots,
                    int remaining_weight, bool multiset, PartitionTuple& prefix,
                    std::vector<PartitionTuple>& out, int max_weight) {
  if (remaining_slots == 0) {
    if (remaining_weight == 0) out.push_back(prefix);
    return;
  }
  if (remaining_weight > remaining_slots * max_weight) return;
  for (std::size_t i = multiset ? start : 0; i < pool.size(); ++i) {
    const int w = pool[i].weight();
    if (w > remaining_weight) continue;
    prefix.push_back(pool[i]);
    collect_tuples(pool, i, remaining_slots - 1, remaining_weight - w, multiset, prefix, out,
                   max_weight);
    prefix.pop_back();
  }
}

using SummandMap = std::map<std::array<Partition, 4>, const FCurveSummand*>;

SummandMap nonzero_summands(const std::vector<FCurveSummand>& summands) {
  SummandMap out;
  for (const auto& s : summands) {
    if (s.value() != 0) out.emplace(s.mu, &s);
  }
  return out;
}

std::string mu_label(const std::array<Partition, 4>& mu) {
  return to_string(std::span<const Partition>(mu.data(), mu.size()));
}

}  // namespace

std::string degree_key(std::span<const Partition> tuple, const Box& box) {
  return to_string(canonical_tuple(tuple)) + "|" + std::to_string(box.rows()) + "x" +
         std::to_string(box.cols());
}

std::vector<PartitionTuple> critical_tuples(const Box& box, int n, bool up_to_symmetry) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  // Descending order so that multisets come out sorted descending.
  auto pool = partitions_in_box(box.rows(), box.cols());
  std::reverse(pool.begin(), pool.end());
  std::vector<PartitionTuple> out;
  PartitionTuple prefix;
  collect_tuples(pool, 0, n, (box.rows() + 1) * (box.cols() + 1), up_to_symmetry, prefix, out,
                 box.area());
  std::sort(out.begin(), out.end());
  return out;
}

SweepReport sweep_conjecture(const Box& box, int n, const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SweepReport report;
  report.box = box;
  report.n = n;
  const auto tuples = critical_tuples(box, n, options.up_to_symmetry);
  if (n == 4) {
    run_sweep(tuples, options.jobs,
              [&](const PartitionTuple& t, WorkerResult& out) {
                const Integer gw = gw_degree(t, box, options.store);
                const Integer cb = cb_degree(t, box, options.store);
                ++out.comparisons;
                if (gw != cb) out.mismatches.push_back({t, "", "degree", gw, cb});
              },
              report);
  } else {
    const auto curves = enumerate_fcurves(n);
    run_sweep(tuples, options.jobs,
              [&](const PartitionTuple& t, WorkerResult& out) {
                const CbBundle bundle{box.rows(), box.cols(), t};
                for (const auto& curve : curves) {
                  const Integer gw = gw_dot_fcurve(t, box, curve);
                  const Integer cb = cb_dot_fcurve(bundle, curve);
                  ++out.comparisons;
                  if (gw != cb) out.mismatches.push_back({t, to_string(curve), "fcurve", gw, cb});
                }
              },
              report);
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

SweepReport reduction_consistency(const Box& box, int n, const SweepOptions& options) {
  if (n < 4) throw std::invalid_argument("F-curves need n >= 4");
  const auto start = std::chrono::steady_clock::now();
  SweepReport report;
  report.box = box;
  report.n = n;
  const auto tuples = critical_tuples(box, n, options.up_to_symmetry);
  const auto curves = enumerate_fcurves(n);
  const int r = box.rows();
  const int l = box.cols();

  run_sweep(tuples, options.jobs,
            [&](const PartitionTuple& t, WorkerResult& out) {
              const CbBundle bundle{r, l, t};
              for (const auto& curve : curves) {
                const std::string label = to_string(curve);
                const auto gw_terms = gw_fcurve_summands(t, box, curve);
                const auto cb_terms = cb_fcurve_summands(bundle, curve);
                const auto gw_map = nonzero_summands(gw_terms);
                const auto cb_map = nonzero_summands(cb_terms);

                Integer gw_total = 0;
                Integer cb_total = 0;
                for (const auto& s : gw_terms) gw_total += s.value();
                for (const auto& s : cb_terms) cb_total += s.value();
                ++out.comparisons;
                if (gw_total != cb_total) {
                  out.mismatches.push_back({t, label, "fcurve", gw_total, cb_total});
                }

                // Every nonzero summand on one side must appear with the same
                // value on the other.
                for (const auto& [mu, s] : gw_map) {
                  ++out.comparisons;
                  const auto it = cb_map.find(mu);
                  const Integer other = it == cb_map.end() ? Integer(0) : it->second->value();
                  if (s->value() != other) {
                    out.mismatches.push_back({t, label, "summand " + mu_label(mu), s->value(), other});
                  }
                }
                for (const auto& [mu, s] : cb_map) {
                  if (gw_map.count(mu)) continue;
                  ++out.comparisons;
                  out.mismatches.push_back({t, label, "summand " + mu_label(mu), 0, s->value()});
                }

                // Block factors: int sigma_{lambda(N_j)} sigma_{mu^vee} against the
                // rank with mu^* inserted, for every mu of the right weight.
                for (std::size_t j = 0; j < 4; ++j) {
                  const auto block = block_classes(t, curve.block(j));
                  for (const auto& mu : partitions_in_box(r, l, total_weight(block))) {
                    auto gw_side = block;
                    gw_side.push_back(dual_in_box(mu, box));
                    auto cb_side = block;
                    cb_side.push_back(star_dual(mu, r));
                    const Integer g = grassmannian_intersection(gw_side, box);
                    const Integer c = cb_rank({r, l, cb_side});
                    ++out.comparisons;
                    if (g != c) {
                      out.mismatches.push_back(
                          {t, label, "block " + std::to_string(j + 1) + " at " + to_string(mu), g, c});
                    }
                  }
                }
              }
            },
            report);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

bool certificate_conditions_hold(std::span<const Partition> classes, const Box& box,
                                 const Certificate& certificate) {
  if (certificate.curve.n() != static_cast<int>(classes.size())) return false;
  int heights = 0;
  std::vector<Partition> columns;
  std::vector<Partition> remainders;
  for (std::size_t j = 0; j < 4; ++j) {
    const auto& mu = certificate.mu[j];
    if (!box.contains(mu)) return false;
    const auto product = multiply_schur(block_classes(classes, certificate.curve.block(j)),
                                        Bound::of(box));
    const auto it = product.find(mu);
    if (it == product.end() || it->second <= 0) return false;
    heights += mu.length();
    auto split = split_first_column(mu);
    columns.push_back(std::move(split.alpha));
    remainders.push_back(std::move(split.beta));
  }
  if (heights != 2 * (box.rows() + 1)) return false;
  // The heights alone do not force the Gr(r-1, r+1) factor: an empty mu^j
  // leaves the column pieces one box too heavy.
  return rectangle_intersection(columns, box.rows() - 1, 2) > 0 &&
         rectangle_intersection(remainders, box.rows() + 1, box.cols() - 1) > 0;
}

CertificateSearch nonvanishing_certificate(std::span<const Partition> classes, const Box& box,
                                           std::size_t budget) {
  const int n = static_cast<int>(classes.size());
  if (total_weight(classes) != (box.rows() + 1) * (box.cols() + 1)) {
    throw std::invalid_argument("certificates are defined at the critical level");
  }
  CertificateSearch search;
  const int target_height = 2 * (box.rows() + 1);

  for (const auto& curve : enumerate_fcurves(n)) {
    std::array<std::vector<Partition>, 4> candidates;
    bool empty_block = false;
    for (std::size_t j = 0; j < 4; ++j) {
      for (const auto& [mu, c] :
           multiply_schur(block_classes(classes, curve.block(j)), Bound::of(box))) {
        if (c > 0) candidates[j].push_back(mu);
      }
      empty_block = empty_block || candidates[j].empty();
    }
    if (empty_block) continue;

    Certificate current{curve, {}};
    std::function<bool(std::size_t, int)> choose = [&](std::size_t j, int heights) -> bool {
      if (j == 4) {
        if (heights != target_height) return false;
        ++search.examined;
        if (certificate_conditions_hold(classes, box, current)) {
          search.certificate = current;
          return true;
        }
        return false;
      }
      for (const auto& mu : candidates[j]) {
        if (search.examined >= budget) {
          search.budget_exhausted = true;
          return false;
        }
        if (heights + mu.length() > target_height) continue;
        current.mu[j] = mu;
        if (choose(j + 1, heights + mu.length())) return true;
        if (search.budget_exhausted) return false;
      }
      return false;
    };
    if (choose(0, 0)) return search;
    if (search.budget_exhausted) return search;
  }
  return search;
}

PartitionTuple degree_one_family(int r, int l) {
  if (r < 1 || l < 1) throw std::invalid_argument("need r, l >= 1");
  std::vector<int> hook(static_cast<std::size_t>(r), 1);
  hook[0] = l;
  return {Partition{1}, Partition{1}, Partition(std::move(hook)), Partition::rectangle(r, l)};
}

Integer family_degree_one(int r, int l) {
  const auto weights = degree_one_family(r, l);
  const Box box(r, l);
  const Integer gw = gw_divisor_degree_m04(weights, box);
  const Integer cb = cb_c1_degree_m04({r, l, weights});
  if (gw != 1 || cb != 1) {
    throw std::runtime_error("degree one family at (r,l)=(" + std::to_string(r) + "," +
                             std::to_string(l) + "): GW degree " + to_string(gw) +
                             ", CB degree " + to_string(cb));
  }
  return gw;
}

PartitionTuple addrow_weights(std::span<const Partition> weights, int l) {
  if (weights.size() != 4) throw std::invalid_argument("addrow takes four weights");
  std::vector<int> first{l};
  first.insert(first.end(), weights[0].parts().begin(), weights[0].parts().end());
  std::vector<int> second(weights[1].parts().begin(), weights[1].parts().end());
  second.push_back(1);
  return {Partition(std::move(first)), Partition(std::move(second)), weights[2], weights[3]};
}

IdentitySides addrow_identity(std::span<const Partition> weights, int r, int l) {
  if (weights.size() != 4) throw std::invalid_argument("addrow takes four weights");
  const Box box(r, l);
  for (const auto& w : weights) {
    if (!box.contains(w)) throw std::invalid_argument(to_string(w) + " is outside the r x l box");
  }
  for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
    if (weights[i].length() < weights[i + 1].length()) {
      throw std::invalid_argument("weights must be ordered by decreasing number of rows");
    }
  }
  if (column_condition(weights, box) == ColumnCondition::fails) {
    throw std::invalid_argument("the column condition fails for " + to_string(weights));
  }
  return {cb_c1_degree_m04({r, l, {weights.begin(), weights.end()}}),
          cb_c1_degree_m04({r + 1, l, addrow_weights(weights, l)})};
}

}  // namespace gwcb

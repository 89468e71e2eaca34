#include "gwcb_cli/cli.hpp"

#include <cstdlib>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gwcb/cb.hpp"
#include "gwcb/gw.hpp"
#include "gwcb/moduli.hpp"
#include "gwcb/partition.hpp"
#include "gwcb/quantum.hpp"
#include "gwcb/schur.hpp"
#include "gwcb/verify.hpp"
#include "gwcb_cli/cache.hpp"

namespace gwcb::cli {

namespace {

using nlohmann::json;

struct Options {
  int r = 0;
  int l = 0;
  int k = 0;
  int m = 0;
  int d = 0;
  int level = -1;
  int n = 4;
  unsigned jobs = 1;
  std::size_t budget = 1'000'000;
  std::string nu;
  std::string lams;
  std::string blocks;
  std::string cache_path;
  bool json = false;
  bool full = false;
};

using Invalid = std::invalid_argument;

Box box_of(const Options& o) {
  if (o.r < 1 || o.l < 1) throw Invalid("--r and --l must be positive");
  return Box(o.r, o.l);
}

PartitionTuple tuple_in_box(const Options& o, const Box& box) {
  auto tuple = parse_partition_tuple(o.lams);
  for (const auto& p : tuple) {
    if (!box.contains(p)) {
      throw Invalid(to_string(p) + " does not fit the " + std::to_string(box.rows()) + "x" +
                    std::to_string(box.cols()) + " box");
    }
  }
  return tuple;
}

void require_four(const PartitionTuple& tuple) {
  if (tuple.size() != 4) throw Invalid("expected four partitions, got " + std::to_string(tuple.size()));
}

std::unique_ptr<JsonlCache> open_cache(const Options& o) {
  std::string path = o.cache_path;
  if (path.empty()) {
    if (const char* env = std::getenv("SCHUBERT_CACHE")) path = env;
  }
  if (path.empty()) return nullptr;
  return std::make_unique<JsonlCache>(path);
}

Integer cached(JsonlCache* cache, std::string_view kind, const std::string& key,
               const std::function<Integer()>& compute) {
  if (cache) {
    if (auto hit = cache->lookup(kind, key)) return *hit;
  }
  Integer value = compute();
  if (cache) cache->store(kind, key, value);
  return value;
}

void emit_value(std::ostream& out, const Options& o, const std::string& command, json fields,
                const Integer& value) {
  if (o.json) {
    fields["command"] = command;
    fields["value"] = value.str();
    out << fields.dump() << '\n';
  } else {
    out << value << '\n';
  }
}

json mismatch_json(const Mismatch& mm) {
  return {{"tuple", to_string(mm.tuple)},
          {"curve", mm.curve},
          {"what", mm.what},
          {"gw", mm.gw.str()},
          {"cb", mm.cb.str()}};
}

int report_sweep(std::ostream& out, const Options& o, const SweepReport& report,
                 const std::string& command) {
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(report.elapsed).count();
  if (o.json) {
    json mismatches = json::array();
    for (const auto& mm : report.mismatches) mismatches.push_back(mismatch_json(mm));
    json j{{"command", command},
           {"r", report.box.rows()},
           {"l", report.box.cols()},
           {"n", report.n},
           {"tuples_checked", report.tuples_checked},
           {"comparisons", report.comparisons},
           {"mismatches", mismatches},
           {"elapsed_ms", ms},
           {"verified", report.verified()}};
    out << j.dump() << '\n';
  } else {
    out << command << " r=" << report.box.rows() << " l=" << report.box.cols()
        << " n=" << report.n << ": " << report.tuples_checked << " tuples, "
        << report.comparisons << " comparisons, " << report.mismatches.size()
        << " mismatches (" << ms << " ms)\n";
    for (const auto& mm : report.mismatches) {
      out << "  " << to_string(mm.tuple);
      if (!mm.curve.empty()) out << " on " << mm.curve;
      out << " " << mm.what << ": gw=" << mm.gw << " cb=" << mm.cb << '\n';
    }
  }
  return report.verified() ? ok : mismatch;
}

void add_json(CLI::App* sub, Options& o) {
  sub->add_flag("--json", o.json, "Print one JSON object instead of plain text");
}

void add_cache(CLI::App* sub, Options& o) {
  sub->add_option("--cache", o.cache_path, "JSON Lines cache file (default: $SCHUBERT_CACHE)");
}

void add_box(CLI::App* sub, Options& o) {
  sub->add_option("--r", o.r, "Rows of the box; the Lie algebra is sl_{r+1}")->required();
  sub->add_option("--l", o.l, "Columns of the box; the level")->required();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gromov-Witten and conformal blocks divisors on M_{0,n}", "gwcb"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto* lr = app.add_subcommand("lr", "Generalized Littlewood-Richardson coefficient");
  lr->add_option("--nu", o.nu, "Target partition, e.g. [2,1]")->required();
  lr->add_option("--lams", o.lams, "Factors, e.g. \"[1];[1];[1]\"")->required();
  add_json(lr, o);
  add_cache(lr, o);
  lr->callback([&] {
    action = [&] {
      const auto nu = parse_partition(o.nu);
      const auto lams = parse_partition_tuple(o.lams);
      auto cache = open_cache(o);
      const Integer value =
          cached(cache.get(), "lr", to_string(canonical_tuple(lams)) + "|" + to_string(nu),
                 [&] { return generalized_lr(lams, nu); });
      emit_value(out, o, "lr", {{"nu", to_string(nu)}, {"lams", to_string(lams)}}, value);
      return static_cast<int>(ok);
    };
  });

  auto* qlr = app.add_subcommand("qlr", "Quantum Littlewood-Richardson coefficient on Gr(k,m)");
  qlr->add_option("--k", o.k, "Dimension of the subspaces")->required();
  qlr->add_option("--m", o.m, "Dimension of the ambient space")->required();
  qlr->add_option("--d", o.d, "Degree in q")->required();
  qlr->add_option("--nu", o.nu, "Target partition")->required();
  qlr->add_option("--lams", o.lams, "Factors")->required();
  add_json(qlr, o);
  add_cache(qlr, o);
  qlr->callback([&] {
    action = [&] {
      if (o.k < 1 || o.m <= o.k) throw Invalid("need 1 <= k < m");
      if (o.d < 0) throw Invalid("--d must be nonnegative");
      const auto nu = parse_partition(o.nu);
      const auto lams = parse_partition_tuple(o.lams);
      const Box box(o.k, o.m - o.k);
      for (const auto& p : lams) {
        if (!box.contains(p)) throw Invalid(to_string(p) + " does not fit Gr(k,m)");
      }
      auto cache = open_cache(o);
      const std::string key = to_string(canonical_tuple(lams)) + "|" + std::to_string(o.d) + "|" +
                              to_string(nu) + "|" + std::to_string(o.k) + "," +
                              std::to_string(o.m);
      const Integer value = cached(cache.get(), "qlr", key, [&] {
        return quantum_lr_coefficient(lams, o.d, nu, o.k, o.m);
      });
      emit_value(out, o, "qlr",
                 {{"k", o.k}, {"m", o.m}, {"d", o.d}, {"nu", to_string(nu)},
                  {"lams", to_string(lams)}},
                 value);
      return static_cast<int>(ok);
    };
  });

  auto* rank = app.add_subcommand("rank", "Rank of a conformal blocks bundle");
  rank->add_option("--r", o.r, "The Lie algebra is sl_{r+1}")->required();
  rank->add_option("--l", o.l, "Width of the weight box (defaults to the level)");
  rank->add_option("--level", o.level, "Level")->required();
  rank->add_option("--lams", o.lams, "Weights as partitions")->required();
  add_json(rank, o);
  add_cache(rank, o);
  rank->callback([&] {
    action = [&] {
      if (o.r < 1 || o.level < 0) throw Invalid("need r >= 1 and level >= 0");
      // cb_rank itself rejects weights outside the r x level box.
      const auto weights = o.l > 0 ? tuple_in_box(o, Box(o.r, o.l)) : parse_partition_tuple(o.lams);
      auto cache = open_cache(o);
      const std::string key = to_string(canonical_tuple(weights)) + "|" + std::to_string(o.r) +
                              "," + std::to_string(o.level);
      const Integer value =
          cached(cache.get(), "cb_rank", key, [&] { return cb_rank({o.r, o.level, weights}); });
      emit_value(out, o, "rank",
                 {{"r", o.r}, {"level", o.level}, {"lams", to_string(weights)}}, value);
      return static_cast<int>(ok);
    };
  });

  auto* cbdeg = app.add_subcommand("cbdeg", "Conformal blocks divisor degree on M_{0,4}");
  add_box(cbdeg, o);
  cbdeg->add_option("--lams", o.lams, "Four weights")->required();
  add_json(cbdeg, o);
  add_cache(cbdeg, o);
  cbdeg->callback([&] {
    action = [&] {
      const Box box = box_of(o);
      const auto tuple = tuple_in_box(o, box);
      require_four(tuple);
      auto cache = open_cache(o);
      const Integer value = cached(cache.get(), "cb_deg4", degree_key(tuple, box),
                                   [&] { return cb_c1_degree_m04({o.r, o.l, tuple}); });
      emit_value(out, o, "cbdeg", {{"r", o.r}, {"l", o.l}, {"lams", to_string(tuple)}}, value);
      return static_cast<int>(ok);
    };
  });

  auto* gwdeg = app.add_subcommand("gwdeg", "Gromov-Witten divisor degree on M_{0,4}");
  add_box(gwdeg, o);
  gwdeg->add_option("--lams", o.lams, "Four classes")->required();
  add_json(gwdeg, o);
  add_cache(gwdeg, o);
  gwdeg->callback([&] {
    action = [&] {
      const Box box = box_of(o);
      const auto tuple = tuple_in_box(o, box);
      require_four(tuple);
      auto cache = open_cache(o);
      const Integer value = cached(cache.get(), "gw_deg4", degree_key(tuple, box),
                                   [&] { return gw_divisor_degree_m04(tuple, box); });
      emit_value(out, o, "gwdeg", {{"r", o.r}, {"l", o.l}, {"lams", to_string(tuple)}}, value);
      return static_cast<int>(ok);
    };
  });

  auto* fcurve = app.add_subcommand("fcurve", "Both divisors against one F-curve");
  add_box(fcurve, o);
  fcurve->add_option("--lams", o.lams, "n classes")->required();
  fcurve->add_option("--blocks", o.blocks, "F-curve, e.g. \"{1|2|3|4,5}\"")->required();
  add_json(fcurve, o);
  fcurve->callback([&] {
    action = [&] {
      const Box box = box_of(o);
      const auto tuple = tuple_in_box(o, box);
      const auto curve = parse_fcurve(o.blocks);
      if (curve.n() != static_cast<int>(tuple.size())) {
        throw Invalid("the F-curve has " + std::to_string(curve.n()) + " markings but " +
                      std::to_string(tuple.size()) + " classes were given");
      }
      const Integer gw = gw_dot_fcurve(tuple, box, curve);
      const Integer cb = cb_dot_fcurve({o.r, o.l, tuple}, curve);
      if (o.json) {
        json j{{"command", "fcurve"}, {"r", o.r},          {"l", o.l},
               {"lams", to_string(tuple)}, {"curve", to_string(curve)},
               {"gw", gw.str()},          {"cb", cb.str()}, {"equal", gw == cb}};
        out << j.dump() << '\n';
      } else {
        out << "gw " << gw << "\ncb " << cb << '\n';
      }
      return static_cast<int>(gw == cb ? ok : mismatch);
    };
  });

  auto* sweep = app.add_subcommand("sweep", "Compare both divisors on every critical tuple");
  add_box(sweep, o);
  sweep->add_option("--n", o.n, "Number of marked points")->check(CLI::Range(4, 8));
  sweep->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  sweep->add_flag("--full", o.full, "Enumerate ordered tuples instead of multisets");
  add_json(sweep, o);
  add_cache(sweep, o);
  sweep->callback([&] {
    action = [&] {
      const Box box = box_of(o);
      auto cache = open_cache(o);
      SweepOptions options;
      options.up_to_symmetry = !o.full;
      options.jobs = o.jobs;
      options.store = cache.get();
      return report_sweep(out, o, sweep_conjecture(box, o.n, options), "sweep");
    };
  });

  auto* certify = app.add_subcommand("certify", "Search for a nonvanishing certificate");
  add_box(certify, o);
  certify->add_option("--lams", o.lams, "n classes at the critical level")->required();
  certify->add_option("--budget", o.budget, "Maximum number of candidates examined");
  add_json(certify, o);
  certify->callback([&] {
    action = [&] {
      const Box box = box_of(o);
      const auto tuple = tuple_in_box(o, box);
      const auto search = nonvanishing_certificate(tuple, box, o.budget);
      const char* status = search.certificate ? "certified"
                           : search.budget_exhausted ? "budget exhausted"
                                                     : "no certificate";
      if (o.json) {
        json j{{"command", "certify"},
               {"r", o.r},
               {"l", o.l},
               {"lams", to_string(tuple)},
               {"status", status},
               {"examined", search.examined}};
        if (search.certificate) {
          j["curve"] = to_string(search.certificate->curve);
          j["mu"] = to_string(search.certificate->mu);
        }
        out << j.dump() << '\n';
      } else {
        out << status;
        if (search.certificate) {
          out << ": " << to_string(search.certificate->curve) << " mu "
              << to_string(search.certificate->mu);
        }
        out << " (" << search.examined << " candidates)\n";
      }
      return static_cast<int>(search.certificate ? ok : mismatch);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "gwcb: " << e.what() << '\n';
    return invalid_input;
  }

  try {
    return action();
  } catch (const std::exception& e) {
    err << "gwcb: " << e.what() << '\n';
    return invalid_input;
  }
}

}  // namespace gwcb::cli

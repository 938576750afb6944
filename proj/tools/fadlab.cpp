// Command-line front end: every verification suite, diagram export, and
// the threshold reports, with deterministic machine-readable output.

#include <chrono>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fadlab/bounds.hpp"
#include "fadlab/convex.hpp"
#include "fadlab/gensets.hpp"
#include "fadlab/suites.hpp"
#include "fadlab/witness.hpp"
#include "json.hpp"

namespace {

struct CommonFlags {
  bool json = false;
  std::uint64_t seed = 0;
  int cutoff = 64;
  std::size_t cap = 10000;
  std::vector<int> ranks = {5, 6, 9, 10};
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_ranks = true) {
  cmd->add_flag("--json", flags.json, "machine-readable report");
  cmd->add_option("--seed", flags.seed, "seed for randomized runs");
  cmd->add_option("--cutoff", flags.cutoff, "order search cutoff");
  cmd->add_option("--cap", flags.cap, "closure enumeration cap");
  if (with_ranks)
    cmd->add_option("--n", flags.ranks, "ranks to exercise")->delimiter(',');
}

fadlab::SuiteOptions to_options(const CommonFlags& flags) {
  fadlab::SuiteOptions opts;
  opts.ranks = flags.ranks;
  opts.seed = flags.seed;
  opts.cutoff = flags.cutoff;
  opts.cap = flags.cap;
  return opts;
}

int emit(const fadlab::RunReport& report, bool json, double elapsed_ms) {
  if (json) {
    std::cout << report.json();
  } else {
    std::cout << report.text();
    std::cout << "elapsed " << elapsed_ms << " ms\n";
  }
  return report.ok() ? 0 : 1;
}

template <typename Fn>
int run_suite(const CommonFlags& flags, Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  fadlab::RunReport report = fn(to_options(flags));
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  return emit(report, flags.json, ms);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for free-group automorphism generating sets, "
               "nerve homology, and exact convex intersection patterns"};
  app.require_subcommand(1);

  CommonFlags relations_flags, generation_flags, pairs_flags, bounds_flags,
      families_flags, helly_flags, swelling_flags, homology_flags, nerve_flags, all_flags,
      diagram_flags;

  auto* relations = app.add_subcommand("relations", "replay the generating-set relation chains");
  add_common(relations, relations_flags);

  auto* generation = app.add_subcommand("generation", "membership witness certificates");
  add_common(generation, generation_flags);
  std::string fixture_dir;
  bool emit_chains = false;
  generation->add_option("--fixture", fixture_dir, "directory of witness fixture files");
  generation->add_flag("--emit", emit_chains, "print the generated witness chains and exit");

  auto* pairs = app.add_subcommand("pairs", "pair orders, finiteness certificates, diagrams");
  add_common(pairs, pairs_flags);

  auto* diagram = app.add_subcommand("diagram", "DOT commutation diagram for Y2 or Y4");
  std::string diagram_set = "Y2";
  int diagram_n = 8;
  diagram->add_option("--set", diagram_set, "Y2 or Y4");
  diagram->add_option("--n", diagram_n, "rank");
  add_common(diagram, diagram_flags, false);

  auto* bounds = app.add_subcommand("bounds", "fixed-point dimension thresholds");
  add_common(bounds, bounds_flags, false);
  int bounds_n = 0;
  std::string bounds_group = "aut";
  std::string sweep;
  bounds->add_option("--group", bounds_group, "aut or saut");
  bounds->add_option("--sweep", sweep, "range a..b for a threshold table");
  bounds->add_option("--n", bounds_n, "single rank for one report");

  auto* families = app.add_subcommand("families", "commuting conjugate families and embedding");
  add_common(families, families_flags);

  auto* helly = app.add_subcommand("helly", "exact intersection-pattern checks");
  add_common(helly, helly_flags, false);
  bool helly_random = false;
  int helly_d = 2, helly_sets = 6, helly_trials = 100;
  helly->add_flag("--random", helly_random, "single randomized batch");
  helly->add_option("--d", helly_d, "dimension");
  helly->add_option("--sets", helly_sets, "sets per family");
  helly->add_option("--trials", helly_trials, "number of families");

  auto* swelling_cmd = app.add_subcommand("swelling", "inflation procedure on box families");
  add_common(swelling_cmd, swelling_flags, false);
  int swelling_trials = 200;
  swelling_cmd->add_option("--trials", swelling_trials, "randomized trials");

  auto* homology = app.add_subcommand("homology", "simplicial homology checks");
  add_common(homology, homology_flags, false);
  int max_total = 6;
  bool join_spheres = false;
  homology->add_option("--max-total", max_total, "largest boundary-dimension sum");
  homology->add_flag("--join-spheres", join_spheres,
                     "restrict the report to the sphere-join sweep");

  auto* nerve_join = app.add_subcommand("nerve-join", "nerve-of-union against join-of-nerves");
  add_common(nerve_join, nerve_flags, false);
  int nerve_trials = 100;
  nerve_join->add_option("--trials", nerve_trials, "randomized cylinder models");

  auto* all = app.add_subcommand("all", "every suite with the given seed");
  add_common(all, all_flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (relations->parsed())
      return run_suite(relations_flags, fadlab::suite_relations);

    if (generation->parsed()) {
      if (emit_chains) {
        for (int n : generation_flags.ranks) {
          std::cout << "# Y1 inside <Y2>, rank " << n << "\n"
                    << fadlab::serialize_witness_chain(fadlab::y1_in_y2_chain(n));
          if (n >= 5)
            std::cout << "# Y3 inside <Y4>, rank " << n << "\n"
                      << fadlab::serialize_witness_chain(fadlab::y3_in_y4_chain(n));
        }
        return 0;
      }
      return run_suite(generation_flags, [&](fadlab::SuiteOptions opts) {
        opts.fixture_dir = fixture_dir;
        return fadlab::suite_generation(opts);
      });
    }

    if (pairs->parsed()) return run_suite(pairs_flags, fadlab::suite_pairs);

    if (diagram->parsed()) {
      fadlab::GenSet set =
          fadlab::builtin_genset(fadlab::genset_name_parse(diagram_set), diagram_n);
      fadlab::PairTable table = fadlab::pair_order_table(set, diagram_flags.cutoff);
      for (const auto& row : table.product_order)
        for (const auto& cell : row)
          if (!cell) std::cerr << "note: a product order exceeded the cutoff\n";
      std::cout << fadlab::to_dot(table, diagram_set + "_n" + std::to_string(diagram_n));
      return 0;
    }

    if (bounds->parsed()) {
      if (bounds_n > 0) {
        fadlab::BoundReport rep =
            fadlab::fa_bounds(bounds_n, fadlab::group_parse(bounds_group));
        nlohmann::ordered_json j{{"n", rep.n},
                                 {"group", fadlab::group_str(rep.group)},
                                 {"max_d_general", rep.max_d_general},
                                 {"max_d_simple", rep.max_d_simple},
                                 {"rep_threshold", rep.rep_threshold}};
        if (bounds_flags.json)
          std::cout << j.dump(2) << "\n";
        else
          std::cout << "n=" << rep.n << " group=" << fadlab::group_str(rep.group)
                    << " max_d_general=" << rep.max_d_general
                    << " max_d_simple=" << rep.max_d_simple
                    << " rep_threshold=" << rep.rep_threshold << "\n";
        return 0;
      }
      if (!sweep.empty()) {
        auto dots = sweep.find("..");
        if (dots == std::string::npos)
          throw CLI::ValidationError("--sweep", "expected a..b");
        int lo = std::stoi(sweep.substr(0, dots));
        int hi = std::stoi(sweep.substr(dots + 2));
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (int n = lo; n <= hi; ++n) {
          fadlab::BoundReport rep = fadlab::fa_bounds(n, fadlab::group_parse(bounds_group));
          if (bounds_flags.json)
            rows.push_back({{"n", n},
                            {"max_d_general", rep.max_d_general},
                            {"max_d_simple", rep.max_d_simple},
                            {"rep_threshold", rep.rep_threshold}});
          else
            std::cout << n << "\t" << rep.max_d_general << "\t" << rep.max_d_simple << "\t"
                      << rep.rep_threshold << "\n";
        }
        if (bounds_flags.json) std::cout << rows.dump(2) << "\n";
        return 0;
      }
      return run_suite(bounds_flags, fadlab::suite_bounds);
    }

    if (families->parsed()) return run_suite(families_flags, fadlab::suite_families);

    if (helly->parsed()) {
      if (helly_random) {
        return run_suite(helly_flags, [&](fadlab::SuiteOptions opts) {
          opts.helly_box_trials = 0;
          opts.helly_poly_trials = 0;
          fadlab::RunReport report;
          report.suite = "helly-random";
          report.seed = opts.seed;
          report.param("d", std::to_string(helly_d));
          report.param("sets", std::to_string(helly_sets));
          report.param("trials", std::to_string(helly_trials));
          std::mt19937_64 rng(opts.seed);
          int consistent = 0;
          for (int t = 0; t < helly_trials; ++t) {
            std::vector<fadlab::ConvexBody> family;
            fadlab::Point center;
            for (int c = 0; c < helly_d; ++c)
              center.push_back(fadlab::random_rational(rng, -2, 2));
            for (int s = 0; s < helly_sets; ++s) {
              fadlab::Box box;
              for (int c = 0; c < helly_d; ++c) {
                fadlab::Rational r1 = fadlab::random_rational(rng, 0, 5);
                fadlab::Rational r2 = fadlab::random_rational(rng, 0, 5);
                box.intervals.emplace_back(center[static_cast<std::size_t>(c)] - r1,
                                           center[static_cast<std::size_t>(c)] + r2);
              }
              family.emplace_back(std::move(box));
            }
            fadlab::helly_check(family, helly_d);
            ++consistent;
          }
          report.add("helly/random-batch", consistent == helly_trials,
                     std::to_string(consistent) + "/" + std::to_string(helly_trials) +
                         " consistent");
          return report;
        });
      }
      return run_suite(helly_flags, fadlab::suite_helly);
    }

    if (swelling_cmd->parsed())
      return run_suite(swelling_flags, [&](fadlab::SuiteOptions opts) {
        opts.swelling_trials = swelling_trials;
        return fadlab::suite_swelling(opts);
      });

    if (homology->parsed())
      return run_suite(homology_flags, [&](fadlab::SuiteOptions opts) {
        opts.homology_max_total = max_total;
        fadlab::RunReport report = fadlab::suite_homology(opts);
        if (join_spheres) {
          std::erase_if(report.items, [](const fadlab::ReportItem& item) {
            return item.label.rfind("homology/sphere-join/", 0) != 0;
          });
        }
        return report;
      });

    if (nerve_join->parsed())
      return run_suite(nerve_flags, [&](fadlab::SuiteOptions opts) {
        opts.nerve_join_trials = nerve_trials;
        return fadlab::suite_nerve_join(opts);
      });

    if (all->parsed()) {
      auto start = std::chrono::steady_clock::now();
      std::vector<fadlab::RunReport> reports = fadlab::suite_all(to_options(all_flags));
      double ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
      bool ok = true;
      for (const fadlab::RunReport& report : reports) ok = ok && report.ok();
      if (all_flags.json) {
        std::cout << fadlab::reports_json(reports);
      } else {
        for (const fadlab::RunReport& report : reports) std::cout << report.text() << "\n";
        std::cout << (ok ? "ALL VERIFIED" : "FAILURES PRESENT") << " in " << ms << " ms\n";
      }
      return ok ? 0 : 1;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}

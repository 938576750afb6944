#pragma once

/*
 * Verification suites behind the CLI subcommands.  Each suite re-checks a
 * family of claims and returns a deterministic report; randomized suites
 * derive everything from the seed.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "fadlab/report.hpp"

namespace fadlab {

struct SuiteOptions {
  std::vector<int> ranks = {5, 6, 9, 10};
  std::uint64_t seed = 0;
  int cutoff = 64;
  std::size_t cap = 10000;

  int helly_box_trials = 300;
  int helly_poly_trials = 200;
  int helly_max_sets = 8;
  int swelling_trials = 200;
  int swelling_max_boxes = 8;
  int homology_max_total = 6;
  int nerve_join_trials = 100;
  int bounds_sweep_lo = 4;
  int bounds_sweep_hi = 2000;

  std::string fixture_dir;  // generation suite falls back to generated chains when empty
};

RunReport suite_relations(const SuiteOptions& opts);
RunReport suite_generation(const SuiteOptions& opts);
RunReport suite_pairs(const SuiteOptions& opts);
RunReport suite_bounds(const SuiteOptions& opts);
RunReport suite_families(const SuiteOptions& opts);
RunReport suite_helly(const SuiteOptions& opts);
RunReport suite_swelling(const SuiteOptions& opts);
RunReport suite_homology(const SuiteOptions& opts);
RunReport suite_nerve_join(const SuiteOptions& opts);
std::vector<RunReport> suite_all(const SuiteOptions& opts);

}  // namespace fadlab

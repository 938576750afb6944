#pragma once

/*
 * Dimension-bound arithmetic for the fixed-point thresholds, the
 * commuting conjugate families that drive the induction, and the
 * determinant-one embedding of rank n-1 automorphisms.
 */

#include <optional>
#include <string>
#include <vector>

#include "fadlab/automorphisms.hpp"

namespace fadlab {

enum class Group { Aut, Saut };

std::string group_str(Group g);
Group group_parse(const std::string& text);

struct BoundReport {
  int n = 0;
  Group group = Group::Aut;
  int max_d_general = 0;  // largest d with d < k*floor(m/(k+2)) for all k=2..d+1
  int max_d_simple = 0;   // largest d with d < 2*floor(m/4) - 1
  int rep_threshold = 0;  // largest dimension with finitely many irreducible classes
};

// m = n for Aut, n-1 for Saut; requires n >= 4 (Aut) or n >= 5 (Saut)
BoundReport fa_bounds(int n, Group group);

// true iff d < k*floor(m/(k+2)) for every k in 2..d+1
bool general_condition(int m, int d);

struct ImplicationCounterexample {
  int n = 0, d = 0, k = 0;
};

// exhaustively checks that the simplified bound implies the general one
// for every n in [lo, hi]
std::optional<ImplicationCounterexample> verify_simple_implies_general(int lo, int hi);

enum class FamilyVariant { Tau, Sigma };

struct ConjugateFamilies {
  int n = 0, k = 0;
  FamilyVariant variant = FamilyVariant::Tau;
  int block = 0;                              // k+1 (tau) or k+2 (sigma)
  std::vector<std::string> base_names;        // the conjugated subset
  std::vector<Automorphism> conjugators;      // tau_i / sigma_i, i = 1..count
  std::vector<std::vector<Automorphism>> families;
  std::size_t cross_pairs = 0;
  bool all_cross_commutators_trivial = false;
  bool orders_preserved = false;
};

// builds the block-shift permutations and the conjugated copies of the
// connected generating subset, then verifies cross-family commutation;
// requires 2*block <= n
ConjugateFamilies conjugate_families(int n, int k, FamilyVariant variant);

struct EmbeddingCheckItem {
  std::string element;
  bool exact = false;  // embedding of the rank n-1 preimage reproduces it
  int preimage_det = 0;
  std::string detail;
};

struct EmbeddingReport {
  int n = 0;
  std::vector<EmbeddingCheckItem> items;
  bool det_multiplicative = false;
  bool ok = false;
};

// every Y4 element away from the top decorated swap fixes x_n, restricts
// to rank n-1 with determinant one, and is recovered exactly by the
// embedding; requires n >= 5
EmbeddingReport embed_and_check_yprime(int n);

}  // namespace fadlab

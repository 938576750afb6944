#pragma once

/*
 * Named generating sets of Aut(F_n) and of its determinant-one subgroup,
 * with the machinery to replay relation chains, tabulate pair orders and
 * commutation, enumerate finite closures, and certify finiteness of
 * two-generator subgroups.
 */

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fadlab/automorphisms.hpp"

namespace fadlab {

enum class GenSetName { Y1, Y2, Y3, Y4, Yprime };

std::string genset_name_str(GenSetName name);
GenSetName genset_name_parse(const std::string& text);

struct GenSetElement {
  std::string name;  // compact display form, e.g. (x1,x2)e1e2
  GroupWord expr;
  Automorphism aut;
};

struct GenSet {
  GenSetName name;
  int rank;
  std::vector<GenSetElement> elements;

  const GenSetElement& by_name(const std::string& element_name) const;
  std::vector<Automorphism> automorphisms() const;
};

// the exact element lists; Y1/Y3 need rank >= 3, the others rank >= 4
GenSet builtin_genset(GenSetName name, int rank);

// display form of a product expression, e.g. t(1,2)*e(1) -> (x1,x2)e1
std::string display_name(const GroupWord& expr);

struct RelationRecord {
  std::string label;
  GroupWord lhs;
  GroupWord rhs;
  bool verified = false;
};

// exact basis-image comparison at the given rank
bool verify_relation(RelationRecord& record, int rank);

enum class Proposition { AutGensetChain, SautGensetChain };

// replays every displayed identity of the chosen generating-set chain;
// AutGensetChain needs rank >= 4, SautGensetChain rank >= 5
std::vector<RelationRecord> replay_proposition(Proposition which, int rank);

// throws std::runtime_error naming the first failing label, if any
void replay_or_throw(Proposition which, int rank);

struct PairTable {
  std::vector<std::string> names;
  // ord(f_i f_j), or nullopt when the cutoff was exceeded
  std::vector<std::vector<std::optional<int>>> product_order;
  std::vector<std::vector<bool>> commute;

  bool edge(std::size_t i, std::size_t j) const { return i != j && !commute[i][j]; }
};

PairTable pair_order_table(const GenSet& set, int cutoff = 64);

struct CommutationGraph {
  std::vector<std::string> names;
  std::set<std::pair<std::size_t, std::size_t>> edges;  // i < j

  bool adjacent(std::size_t i, std::size_t j) const;
  std::vector<std::size_t> neighbors(std::size_t i) const;
  // number of vertices on a shortest path between two vertices (inclusive),
  // or 0 when disconnected
  std::size_t shortest_path_vertices(std::size_t from, std::size_t to) const;
};

CommutationGraph commutation_graph(const PairTable& table);

// adjacency as drawn in the published diagrams for these sets (Y2 or Y4);
// serves as a cross-check target for the computed graph
CommutationGraph drawn_figure_graph(GenSetName name, int rank);

// DOT rendering; non-commuting pairs become edges labeled with the
// product order
std::string to_dot(const PairTable& table, const std::string& graph_name);

// breadth-first closure under composition; nullopt when cap is exceeded
std::optional<std::size_t> finite_closure(const std::vector<Automorphism>& gens,
                                          std::size_t cap = 10000);

struct PairCertificate {
  std::size_t i = 0, j = 0;
  enum class Kind { Dihedral, SignedPermutation, Closure } kind = Kind::Closure;
  std::size_t group_order = 0;  // for Dihedral and Closure
  bool ok = false;
  std::string detail;
};

// finiteness certificate for every 2-element subset:
// both involutions with finite product order m  -> dihedral of order 2m;
// both signed permutations                      -> subgroup of a finite group;
// otherwise                                      -> explicit closure
std::vector<PairCertificate> certify_pairwise_finite(const GenSet& set,
                                                     std::size_t cap = 10000);

}  // namespace fadlab

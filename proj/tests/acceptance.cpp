// Acceptance suite: one checked criterion per numbered block, each printed
// as a single PASS/FAIL line.  Run with no argument for all criteria or
// with a number for a single one.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fadlab/bounds.hpp"
#include "fadlab/convex.hpp"
#include "fadlab/cylinder.hpp"
#include "fadlab/gensets.hpp"
#include "fadlab/homology.hpp"
#include "fadlab/suites.hpp"
#include "fadlab/witness.hpp"

#ifndef FADLAB_SOURCE_DIR
#define FADLAB_SOURCE_DIR "."
#endif

namespace {

using namespace fadlab;

struct Expect {
  bool ok = true;
  std::string why;

  void req(bool condition, const std::string& message) {
    if (!condition && ok) {
      ok = false;
      why = message;
    }
  }
};

const std::vector<int> kRanks = {5, 6, 9, 10};

// 1. every displayed identity of both proof chains replays exactly,
//    both parities included, in under ten seconds
Expect criterion_relations() {
  Expect e;
  auto start = std::chrono::steady_clock::now();
  std::size_t records = 0;
  for (int n : kRanks) {
    for (const RelationRecord& rec : replay_proposition(Proposition::AutGensetChain, n)) {
      ++records;
      e.req(rec.verified, rec.label + " failed at rank " + std::to_string(n));
    }
    for (const RelationRecord& rec : replay_proposition(Proposition::SautGensetChain, n)) {
      ++records;
      e.req(rec.verified, rec.label + " failed at rank " + std::to_string(n));
    }
  }
  bool odd_seen = false, even_seen = false;
  for (int n : kRanks) {
    for (const RelationRecord& rec : replay_proposition(Proposition::SautGensetChain, n)) {
      odd_seen = odd_seen || rec.label == "Y4/x1xn-chain-odd";
      even_seen = even_seen || rec.label == "Y4/x1xn-chain-even";
    }
  }
  e.req(odd_seen && even_seen, "both parity branches must be exercised");
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  e.req(seconds < 10.0, "replay took " + std::to_string(seconds) + " s, budget 10 s");
  e.req(records > 400, "unexpectedly few records");
  return e;
}

// 2. the two stated product orders, involution orders across Y2, finite
//    orders across Y4
Expect criterion_orders() {
  Expect e;
  for (int n : kRanks) {
    Automorphism nielsen = Automorphism::eval("e(2)*e(4)*rho(1,2)", n);
    e.req(order(compose(nielsen, Automorphism::eval("t(1,2)*e(1)*e(2)*e(3)", n))) == 6,
          "ord(e2e4rho12*(x1,x2)e1e2e3) must be 6");
    e.req(order(compose(nielsen, Automorphism::eval("t(2,3)*e(1)", n))) == 4,
          "ord(e2e4rho12*(x2,x3)e1) must be 4");
    for (const auto& el : builtin_genset(GenSetName::Y2, n).elements)
      e.req(order(el.aut) == 2, el.name + " must be an involution");
    for (const auto& el : builtin_genset(GenSetName::Y4, n).elements) {
      auto ord = order(el.aut, 64);
      e.req(ord.has_value() && *ord <= 64, el.name + " must have finite order <= 64");
    }
  }
  return e;
}

// 3. the commutation diagrams: Y2 at rank 8 matches the drawing edge for
//    edge with labels 4,6,6,4; Y4 at rank 9 matches up to the single
//    omitted (and verified non-commuting) pair; non-adjacent pairs commute
Expect criterion_figures() {
  Expect e;
  {
    GenSet y2 = builtin_genset(GenSetName::Y2, 8);
    PairTable table = pair_order_table(y2);
    CommutationGraph computed = commutation_graph(table);
    e.req(computed.edges == drawn_figure_graph(GenSetName::Y2, 8).edges,
          "Y2 adjacency must equal the drawing");
    std::size_t A = 0, B = 1, T3 = 2, R = y2.elements.size() - 2, E = y2.elements.size() - 1;
    e.req(table.product_order[R][B] == 4, "label 4 on e2rho12 -- (x2,x3)e1");
    e.req(table.product_order[A][B] == 6, "label 6 on (x1,x2)e1e2 -- (x2,x3)e1");
    e.req(table.product_order[B][T3] == 6, "label 6 on (x2,x3)e1 -- (x3,x4)");
    e.req(table.product_order[R - 1][E] == 4, "label 4 on (x7,x8) -- e8");
    for (std::size_t i = 0; i < y2.elements.size(); ++i)
      for (std::size_t j = i + 1; j < y2.elements.size(); ++j)
        if (!computed.adjacent(i, j))
          e.req(commutes(y2.elements[i].aut, y2.elements[j].aut),
                "non-adjacent Y2 pairs must commute");
  }
  {
    GenSet y4 = builtin_genset(GenSetName::Y4, 9);
    PairTable table = pair_order_table(y4);
    CommutationGraph computed = commutation_graph(table);
    CommutationGraph drawn = drawn_figure_graph(GenSetName::Y4, 9);
    std::size_t A = 0, B = 1, C3 = 2, C4 = 3, R = y4.elements.size() - 2,
                D = y4.elements.size() - 1;
    for (const auto& edge : drawn.edges)
      e.req(computed.edges.count(edge) == 1, "every drawn Y4 edge must be computed");
    std::set<std::pair<std::size_t, std::size_t>> extra;
    for (const auto& edge : computed.edges)
      if (!drawn.edges.count(edge)) extra.insert(edge);
    e.req(extra == std::set<std::pair<std::size_t, std::size_t>>{{A, C3}},
          "the one drawing omission is (x1,x2)e1e2e3 -- (x3,x4)e3");
    e.req(!commutes(y4.elements[A].aut, y4.elements[C3].aut),
          "the omitted pair does not commute");
    e.req(computed.neighbors(R) == std::vector<std::size_t>{A, B, C3, C4},
          "non-commuting partners of e2e4rho12");
    e.req(computed.neighbors(D) == std::vector<std::size_t>{B, C4},
          "non-commuting partners of e3e4");
    for (std::size_t i = 0; i < y4.elements.size(); ++i)
      for (std::size_t j = i + 1; j < y4.elements.size(); ++j)
        if (!computed.adjacent(i, j))
          e.req(commutes(y4.elements[i].aut, y4.elements[j].aut),
                "non-adjacent Y4 pairs must commute");
  }
  return e;
}

// 4. finiteness certificates: signed permutations after removing the
//    Nielsen generator, exact closures, and every two-element subset
Expect criterion_finiteness() {
  Expect e;
  for (int n : kRanks) {
    for (const auto& el : builtin_genset(GenSetName::Y2, n).elements)
      if (el.name != "e2rho12")
        e.req(as_signed_permutation(el.aut).has_value(),
              el.name + " must be a signed permutation");
    for (const auto& el : builtin_genset(GenSetName::Yprime, n).elements)
      if (el.name != "e2e4rho12")
        e.req(as_signed_permutation(el.aut).has_value(),
              el.name + " must be a signed permutation");
    for (const PairCertificate& cert :
         certify_pairwise_finite(builtin_genset(GenSetName::Y2, n)))
      e.req(cert.ok, "uncertified Y2 pair at rank " + std::to_string(n));
    for (const PairCertificate& cert :
         certify_pairwise_finite(builtin_genset(GenSetName::Y4, n)))
      e.req(cert.ok, "uncertified Y4 pair at rank " + std::to_string(n));
  }
  {
    std::vector<Automorphism> gens;
    for (const auto& el : builtin_genset(GenSetName::Y2, 4).elements)
      if (el.name != "e2rho12") gens.push_back(el.aut);
    e.req(finite_closure(gens, 10000) == std::optional<std::size_t>(384),
          "closure of Y2 minus the Nielsen generator at rank 4 is 384");
    gens.clear();
    for (const auto& el : builtin_genset(GenSetName::Yprime, 5).elements)
      if (el.name != "e2e4rho12") gens.push_back(el.aut);
    e.req(finite_closure(gens, 10000) == std::optional<std::size_t>(1920),
          "closure of Yprime minus the Nielsen generator at rank 5 is 1920");
    e.req(finite_closure({Automorphism::eval("e(2)*e(4)*rho(1,2)", 5),
                          Automorphism::eval("t(3,4)*e(3)", 5)},
                         10000) == std::optional<std::size_t>(8),
          "the dihedral-image pair closes at order 8");
  }
  return e;
}

// 5. shipped witness chains certify both generation statements exactly
Expect criterion_generation() {
  Expect e;
  std::string dir = std::string(FADLAB_SOURCE_DIR) + "/fixtures";
  for (int n : kRanks) {
    GenerationReport y1 = certify_generation(
        builtin_genset(GenSetName::Y1, n), builtin_genset(GenSetName::Y2, n),
        load_witness_file(dir + "/y1_in_y2_n" + std::to_string(n) + ".txt"));
    e.req(y1.ok, "Y1 inside <Y2> via fixtures at rank " + std::to_string(n));
    GenerationReport y3 = certify_generation(
        builtin_genset(GenSetName::Y3, n), builtin_genset(GenSetName::Y4, n),
        load_witness_file(dir + "/y3_in_y4_n" + std::to_string(n) + ".txt"));
    e.req(y3.ok, "Y3 inside <Y4> via fixtures at rank " + std::to_string(n));
  }
  return e;
}

// 6. joins of simplex boundaries have the homology of spheres for every
//    tuple with total at most six, inside a minute
Expect criterion_sphere_homology() {
  Expect e;
  auto start = std::chrono::steady_clock::now();
  std::vector<std::vector<int>> tuples;
  std::vector<int> current;
  auto enumerate = [&](auto&& self, int remaining) -> void {
    if (!current.empty()) tuples.push_back(current);
    for (int k = 1; k <= remaining; ++k) {
      current.push_back(k);
      self(self, remaining - k);
      current.pop_back();
    }
  };
  enumerate(enumerate, 6);
  for (const auto& tuple : tuples) {
    int total = 0;
    std::vector<SimplicialComplex> factors;
    for (std::size_t f = 0; f < tuple.size(); ++f) {
      factors.push_back(
          SimplicialComplex::boundary_of_simplex(tuple[f], static_cast<int>(f)));
      total += tuple[f];
    }
    HomologyProfile profile = reduced_homology(join(factors));
    e.req(profile.is_sphere(total - 1),
          "sphere profile failed for a tuple of total " + std::to_string(total));
  }
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  e.req(seconds < 60.0, "homology sweep took " + std::to_string(seconds) + " s, budget 60");
  e.req(tuples.size() == 63, "expected 63 compositions of totals up to 6");
  return e;
}

// 7. one hundred randomized cylinder models: nerve of the union equals the
//    join of the nerves
Expect criterion_join_nerve() {
  Expect e;
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<int> family_dist(1, 3);
  for (int trial = 0; trial < 100; ++trial) {
    CylinderModel model = random_cylinder_model(rng, family_dist(rng));
    e.req(verify_join_nerve(model), "cylinder model " + std::to_string(trial) + " failed");
  }
  return e;
}

// 8. five hundred randomized exact families never reach the contradiction
//    branch, and the sharp triangle-edges instance is classified correctly
Expect criterion_helly() {
  Expect e;
  SuiteOptions opts;  // 300 box + 200 polytope trials by default
  RunReport report = suite_helly(opts);
  e.req(report.ok(), "helly suite reported a failure");
  std::size_t randomized = 0;
  for (const ReportItem& item : report.items) {
    if (item.label.rfind("helly/random", 0) == 0) {
      e.req(item.detail.find("0 contradictions") != std::string::npos,
            "contradiction branch reached");
      // detail leads with the witness count: `W total witnesses, V ...`
      randomized += static_cast<std::size_t>(std::stoul(item.detail));
      auto comma = item.detail.find(", ");
      randomized += static_cast<std::size_t>(std::stoul(item.detail.substr(comma + 2)));
    }
    if (item.label == "helly/triangle-edges/triple-hypothesis-fails")
      e.req(item.status == ItemStatus::Verified, "triangle edges misclassified");
  }
  e.req(randomized == 500, "expected exactly 500 randomized families, saw " +
                               std::to_string(randomized));
  return e;
}

// 9. two hundred randomized box families: the inflation procedure keeps the
//    pattern and every epsilon is at most one half
Expect criterion_swelling() {
  Expect e;
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<int> count_dist(2, 8);
  std::uniform_int_distribution<int> dim_dist(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Box> family;
    int count = count_dist(rng), d = dim_dist(rng);
    for (int b = 0; b < count; ++b) family.push_back(random_box(rng, d));
    SwellingTrace trace = swelling(family);
    e.req(trace.nerve_preserved, "pattern broken in trial " + std::to_string(trial));
    for (const SwellingStep& step : trace.steps)
      e.req(step.eps <= Rational(1, 2), "eps above 1/2 in trial " + std::to_string(trial));
  }
  return e;
}

// 10. threshold arithmetic: the frozen instances, the exhaustive
//     implication sweep, and the commuting conjugate families
Expect criterion_bounds() {
  Expect e;
  BoundReport aut4 = fa_bounds(4, Group::Aut);
  e.req(aut4.max_d_general == 1 && aut4.max_d_simple == 0, "rank 4 thresholds are (1,0)");
  BoundReport aut12 = fa_bounds(12, Group::Aut);
  e.req(aut12.max_d_general == 4 && aut12.max_d_simple == 4, "rank 12 thresholds are (4,4)");
  BoundReport saut9 = fa_bounds(9, Group::Saut);
  e.req(saut9.max_d_general == 2 && saut9.max_d_simple == 2,
        "rank 9 determinant-one thresholds are (2,2)");
  e.req(verify_simple_implies_general(4, 2000) == std::nullopt,
        "simplified bound must imply the general one up to rank 2000");
  for (int k = 2; k <= 4; ++k)
    for (int n = 4; n <= 12; ++n)
      for (FamilyVariant variant : {FamilyVariant::Tau, FamilyVariant::Sigma}) {
        int block = variant == FamilyVariant::Tau ? k + 1 : k + 2;
        if (2 * block > n) continue;
        ConjugateFamilies fam = conjugate_families(n, k, variant);
        e.req(fam.all_cross_commutators_trivial,
              "cross commutator nontrivial at n=" + std::to_string(n) +
                  " k=" + std::to_string(k));
      }
  return e;
}

// 11. the complete default run stays under five minutes with nothing
//     failing, and randomized reports are byte-identical across reruns
Expect criterion_full_run() {
  Expect e;
  auto start = std::chrono::steady_clock::now();
  SuiteOptions opts;
  for (const RunReport& report : suite_all(opts))
    e.req(report.ok(), "suite " + report.suite + " failed");
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  e.req(seconds < 300.0, "full run took " + std::to_string(seconds) + " s, budget 300");
  e.req(suite_helly(opts).json() == suite_helly(opts).json(),
        "randomized reports must be byte-identical given the seed");
  return e;
}

struct Criterion {
  int number;
  const char* name;
  std::function<Expect()> run;
};

const std::vector<Criterion> kCriteria = {
    {1, "relation replay", criterion_relations},
    {2, "order claims", criterion_orders},
    {3, "diagram reconstruction", criterion_figures},
    {4, "finiteness certificates", criterion_finiteness},
    {5, "generation certificates", criterion_generation},
    {6, "sphere homology", criterion_sphere_homology},
    {7, "join of nerves", criterion_join_nerve},
    {8, "exact helly runs", criterion_helly},
    {9, "swelling procedure", criterion_swelling},
    {10, "threshold arithmetic", criterion_bounds},
    {11, "full suite budget", criterion_full_run},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);

  bool all_ok = true;
  for (const Criterion& criterion : kCriteria) {
    if (only != 0 && criterion.number != only) continue;
    Expect result;
    try {
      result = criterion.run();
    } catch (const std::exception& ex) {
      result.ok = false;
      result.why = std::string("exception: ") + ex.what();
    }
    std::cout << "criterion " << criterion.number << " (" << criterion.name << "): "
              << (result.ok ? "PASS" : "FAIL") << (result.ok ? "" : " -- " + result.why)
              << std::endl;
    all_ok = all_ok && result.ok;
  }
  return all_ok ? 0 : 1;
}

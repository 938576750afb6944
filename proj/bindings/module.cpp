// Python bindings for the main operations: word algebra, automorphism
// arithmetic, generating-set verification, simplicial homology, exact
// convex checks, and the threshold reports.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "fadlab/bounds.hpp"
#include "fadlab/convex.hpp"
#include "fadlab/cylinder.hpp"
#include "fadlab/gensets.hpp"
#include "fadlab/homology.hpp"
#include "fadlab/suites.hpp"
#include "fadlab/witness.hpp"

namespace py = pybind11;
using namespace fadlab;

namespace {

SuiteOptions options_from_kwargs(std::uint64_t seed, std::vector<int> ranks) {
  SuiteOptions opts;
  opts.seed = seed;
  if (!ranks.empty()) opts.ranks = std::move(ranks);
  return opts;
}

std::vector<std::vector<long long>> abelianization_rows(const Automorphism& a) {
  IntMatrix m = abelianization(a);
  std::vector<std::vector<long long>> rows;
  for (int r = 0; r < m.n; ++r) {
    std::vector<long long> row;
    for (int c = 0; c < m.n; ++c) row.push_back(m.at(r, c).convert_to<long long>());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact verification toolkit for free-group automorphism generating sets";

  py::class_<Word>(m, "Word")
      .def(py::init([](int rank, const std::string& text) { return Word::parse(rank, text); }),
           py::arg("rank"), py::arg("text"))
      .def_property_readonly("rank", &Word::rank)
      .def_property_readonly("letters", &Word::letters)
      .def("__len__", &Word::length)
      .def("__str__", &Word::str)
      .def("__repr__", [](const Word& w) { return "Word(" + w.str() + ")"; })
      .def("__eq__", [](const Word& a, const Word& b) { return a == b; })
      .def("__mul__", &concat)
      .def("inverse", &invert);

  py::class_<Automorphism>(m, "Automorphism")
      .def(py::init([](const std::string& expr, int rank) {
             return Automorphism::eval(expr, rank);
           }),
           py::arg("expr"), py::arg("rank"))
      .def_static("identity", &Automorphism::identity)
      .def_property_readonly("rank", &Automorphism::rank)
      .def_property_readonly("expr",
                             [](const Automorphism& a) {
                               return a.factorization() ? a.factorization()->str()
                                                        : std::string();
                             })
      .def("image", &Automorphism::image, py::arg("i"))
      .def("__str__", &Automorphism::str)
      .def("__repr__", [](const Automorphism& a) { return "Automorphism(" + a.str() + ")"; })
      .def("__eq__", [](const Automorphism& a, const Automorphism& b) { return a == b; })
      .def("__mul__", &compose)  // left factor acts first
      .def("__call__", &apply)
      .def("inverse", [](const Automorphism& a) { return inverse(a); })
      .def("order",
           [](const Automorphism& a, int cutoff) -> std::optional<int> {
             return order(a, cutoff);
           },
           py::arg("cutoff") = 64)
      .def("is_identity", &Automorphism::is_identity)
      .def("abelianization", &abelianization_rows)
      .def("determinant_sign", &determinant_sign)
      .def("signed_permutation",
           [](const Automorphism& a)
               -> std::optional<std::pair<std::vector<int>, std::vector<int>>> {
             auto sp = as_signed_permutation(a);
             if (!sp) return std::nullopt;
             return std::make_pair(sp->target, sp->sign);
           })
      .def("extend_by_determinant", &psi_embed);

  m.def("commutator", &commutator);
  m.def("conjugate", &conjugate);
  m.def("commutes", &commutes);

  m.def(
      "genset",
      [](const std::string& name, int rank) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& el : builtin_genset(genset_name_parse(name), rank).elements)
          out.emplace_back(el.name, el.expr.str());
        return out;
      },
      py::arg("name"), py::arg("rank"), "named elements of a builtin generating set");

  m.def(
      "replay_relations",
      [](const std::string& which, int rank) {
        Proposition prop = which == "aut" ? Proposition::AutGensetChain
                                          : Proposition::SautGensetChain;
        std::vector<std::pair<std::string, bool>> out;
        for (const RelationRecord& rec : replay_proposition(prop, rank))
          out.emplace_back(rec.label, rec.verified);
        return out;
      },
      py::arg("which"), py::arg("rank"), "replay a relation chain ('aut' or 'saut')");

  m.def(
      "pair_orders",
      [](const std::string& name, int rank, int cutoff) {
        GenSet set = builtin_genset(genset_name_parse(name), rank);
        PairTable table = pair_order_table(set, cutoff);
        py::dict out;
        out["names"] = table.names;
        std::vector<std::vector<std::optional<int>>> orders = table.product_order;
        out["orders"] = orders;
        out["commute"] = table.commute;
        return out;
      },
      py::arg("name"), py::arg("rank"), py::arg("cutoff") = 64);

  m.def(
      "commutation_edges",
      [](const std::string& name, int rank) {
        GenSet set = builtin_genset(genset_name_parse(name), rank);
        CommutationGraph graph = commutation_graph(pair_order_table(set));
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& [i, j] : graph.edges)
          out.emplace_back(graph.names[i], graph.names[j]);
        return out;
      },
      py::arg("name"), py::arg("rank"));

  m.def(
      "finite_closure",
      [](const std::vector<std::string>& exprs, int rank,
         std::size_t cap) -> std::optional<std::size_t> {
        std::vector<Automorphism> gens;
        for (const std::string& expr : exprs) gens.push_back(Automorphism::eval(expr, rank));
        return finite_closure(gens, cap);
      },
      py::arg("exprs"), py::arg("rank"), py::arg("cap") = 10000);

  m.def(
      "certify_generation",
      [](const std::string& target, const std::string& ambient, int rank) {
        GenSetName t = genset_name_parse(target);
        std::vector<WitnessLine> lines =
            t == GenSetName::Y1 ? y1_in_y2_chain(rank) : y3_in_y4_chain(rank);
        GenerationReport report = certify_generation(
            builtin_genset(t, rank), builtin_genset(genset_name_parse(ambient), rank), lines);
        return report.ok;
      },
      py::arg("target"), py::arg("ambient"), py::arg("rank"));

  m.def(
      "sphere_join_profile",
      [](const std::vector<int>& boundary_dims) {
        std::vector<SimplicialComplex> factors;
        int total = 0;
        for (std::size_t f = 0; f < boundary_dims.size(); ++f) {
          factors.push_back(SimplicialComplex::boundary_of_simplex(boundary_dims[f],
                                                                   static_cast<int>(f)));
          total += boundary_dims[f];
        }
        HomologyProfile profile = reduced_homology(join(factors));
        py::dict out;
        out["free_rank"] = profile.free_rank;
        out["is_sphere"] = profile.is_sphere(total - 1);
        return out;
      },
      py::arg("boundary_dims"));

  m.def(
      "reduced_homology",
      [](const std::string& complex_text) {
        HomologyProfile profile = reduced_homology(SimplicialComplex::parse(complex_text));
        std::vector<std::pair<long, std::vector<long long>>> out;
        for (std::size_t q = 0; q < profile.free_rank.size(); ++q) {
          std::vector<long long> torsion;
          for (const BigInt& t : profile.torsion[q])
            torsion.push_back(t.convert_to<long long>());
          out.emplace_back(profile.free_rank[q], std::move(torsion));
        }
        return out;
      },
      py::arg("complex_text"),
      "reduced homology of a complex given one maximal simplex per line");

  m.def(
      "verify_join_nerve_random",
      [](int trials, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> family_dist(1, 3);
        for (int t = 0; t < trials; ++t)
          if (!verify_join_nerve(random_cylinder_model(rng, family_dist(rng)))) return false;
        return true;
      },
      py::arg("trials") = 100, py::arg("seed") = 0);

  m.def(
      "helly_verdict",
      [](const std::vector<std::string>& bodies, int d) {
        std::vector<ConvexBody> family;
        for (const std::string& text : bodies) family.push_back(parse_body(text));
        HellyVerdict verdict = helly_check(family, d);
        py::dict out;
        if (verdict.kind == HellyVerdict::Kind::TotalWitness) {
          out["kind"] = "total-witness";
          std::vector<std::string> witness;
          for (const Rational& x : verdict.witness) witness.push_back(rational_str(x));
          out["witness"] = witness;
        } else {
          out["kind"] = "hypothesis-violated";
          out["violating"] = verdict.violating;
        }
        return out;
      },
      py::arg("bodies"), py::arg("d"));

  m.def(
      "swelling_epsilons",
      [](const std::vector<std::string>& boxes) {
        std::vector<Box> family;
        for (const std::string& text : boxes) family.push_back(Box::parse(text));
        SwellingTrace trace = swelling(family);
        py::dict out;
        std::vector<std::string> eps;
        for (const SwellingStep& step : trace.steps) eps.push_back(rational_str(step.eps));
        out["eps"] = eps;
        out["nerve_preserved"] = trace.nerve_preserved;
        return out;
      },
      py::arg("boxes"));

  m.def(
      "fa_bounds",
      [](int n, const std::string& group) {
        BoundReport report = fa_bounds(n, group_parse(group));
        py::dict out;
        out["n"] = report.n;
        out["group"] = group_str(report.group);
        out["max_d_general"] = report.max_d_general;
        out["max_d_simple"] = report.max_d_simple;
        out["rep_threshold"] = report.rep_threshold;
        return out;
      },
      py::arg("n"), py::arg("group") = "aut");

  m.def("verify_simple_implies_general",
        [](int lo, int hi) { return !verify_simple_implies_general(lo, hi).has_value(); },
        py::arg("lo") = 4, py::arg("hi") = 2000);

  m.def(
      "conjugate_families_commute",
      [](int n, int k, const std::string& variant) {
        ConjugateFamilies fam = conjugate_families(
            n, k, variant == "tau" ? FamilyVariant::Tau : FamilyVariant::Sigma);
        return fam.all_cross_commutators_trivial && fam.orders_preserved;
      },
      py::arg("n"), py::arg("k"), py::arg("variant") = "tau");

  m.def(
      "run_suite",
      [](const std::string& name, std::uint64_t seed, std::vector<int> ranks) {
        SuiteOptions opts = options_from_kwargs(seed, std::move(ranks));
        RunReport report;
        if (name == "relations") report = suite_relations(opts);
        else if (name == "generation") report = suite_generation(opts);
        else if (name == "pairs") report = suite_pairs(opts);
        else if (name == "bounds") report = suite_bounds(opts);
        else if (name == "families") report = suite_families(opts);
        else if (name == "helly") report = suite_helly(opts);
        else if (name == "swelling") report = suite_swelling(opts);
        else if (name == "homology") report = suite_homology(opts);
        else if (name == "nerve-join") report = suite_nerve_join(opts);
        else throw std::invalid_argument("unknown suite '" + name + "'");
        return report.json();
      },
      py::arg("name"), py::arg("seed") = 0, py::arg("ranks") = std::vector<int>{},
      "run one verification suite; returns the machine-readable report");
}

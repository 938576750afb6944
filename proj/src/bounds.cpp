#include "fadlab/bounds.hpp"

#include <stdexcept>

#include "fadlab/gensets.hpp"

namespace fadlab {

std::string group_str(Group g) { return g == Group::Aut ? "aut" : "saut"; }

Group group_parse(const std::string& text) {
  if (text == "aut" || text == "Aut") return Group::Aut;
  if (text == "saut" || text == "SAut" || text == "Saut") return Group::Saut;
  throw std::invalid_argument("unknown group '" + text + "' (want aut or saut)");
}

bool general_condition(int m, int d) {
  for (int k = 2; k <= d + 1; ++k)
    if (d >= k * (m / (k + 2))) return false;
  return true;
}

BoundReport fa_bounds(int n, Group group) {
  if (group == Group::Aut && n < 4)
    throw std::invalid_argument("the Aut bound needs n >= 4");
  if (group == Group::Saut && n < 5)
    throw std::invalid_argument("the SAut bound needs n >= 5");
  int m = group == Group::Aut ? n : n - 1;

  BoundReport report;
  report.n = n;
  report.group = group;
  // the condition is downward closed in d, and k = 2 caps d below 2*floor(m/4)
  int d = 0;
  while (general_condition(m, d + 1)) ++d;
  report.max_d_general = d;
  report.max_d_simple = 2 * (m / 4) - 2;
  report.rep_threshold = 2 * (m / 4) - 1;
  return report;
}

std::optional<ImplicationCounterexample> verify_simple_implies_general(int lo, int hi) {
  if (lo < 4) throw std::invalid_argument("the implication sweep needs n >= 4");
  for (int n = lo; n <= hi; ++n)
    for (int d = 0; d < 2 * (n / 4) - 1; ++d)
      for (int k = 2; k <= d + 1; ++k)
        if (d >= k * (n / (k + 2))) return ImplicationCounterexample{n, d, k};
  return std::nullopt;
}

ConjugateFamilies conjugate_families(int n, int k, FamilyVariant variant) {
  if (k < 2) throw std::invalid_argument("conjugate families need k >= 2");
  ConjugateFamilies out;
  out.n = n;
  out.k = k;
  out.variant = variant;
  out.block = variant == FamilyVariant::Tau ? k + 1 : k + 2;
  if (2 * out.block > n)
    throw std::invalid_argument("need rank for at least two disjoint blocks (2*" +
                                std::to_string(out.block) + " > " + std::to_string(n) + ")");

  // the two connected shapes through e2*rho12, truncated at swap index k
  std::vector<GroupWord> base;
  base.push_back(GroupWord::parse("e(2)*rho(1,2)"));
  if (variant == FamilyVariant::Tau) {
    base.push_back(GroupWord::parse("t(1,2)*e(1)*e(2)"));
    base.push_back(GroupWord::parse("t(2,3)*e(1)"));
    for (int i = 3; i <= k; ++i)
      base.push_back(GroupWord::parse("t(" + std::to_string(i) + "," +
                                      std::to_string(i + 1) + ")"));
  } else {
    base.push_back(GroupWord::parse("t(2,3)*e(1)"));
    for (int i = 3; i <= k + 1; ++i)
      base.push_back(GroupWord::parse("t(" + std::to_string(i) + "," +
                                      std::to_string(i + 1) + ")"));
  }
  for (const GroupWord& expr : base) out.base_names.push_back(display_name(expr));

  int count = n / out.block;
  for (int i = 1; i <= count; ++i) {
    GroupWord shift;
    for (int m = 1; m <= out.block; ++m)
      shift.factors.emplace_back(AtomicName::swap(m, out.block * (i - 1) + m), 1);
    out.conjugators.push_back(Automorphism::eval(shift, n));
  }

  for (const Automorphism& tau : out.conjugators) {
    std::vector<Automorphism> family;
    for (const GroupWord& expr : base) {
      Automorphism y = Automorphism::eval(expr, n);
      family.push_back(compose(compose(tau, y), inverse(tau)));
    }
    out.families.push_back(std::move(family));
  }

  out.all_cross_commutators_trivial = true;
  for (std::size_t i = 0; i < out.families.size(); ++i)
    for (std::size_t j = i + 1; j < out.families.size(); ++j)
      for (const Automorphism& a : out.families[i])
        for (const Automorphism& b : out.families[j]) {
          ++out.cross_pairs;
          if (!commutator(a, b).is_identity()) out.all_cross_commutators_trivial = false;
        }

  out.orders_preserved = true;
  for (std::size_t f = 0; f < out.families.size(); ++f)
    for (std::size_t y = 0; y < out.families[f].size(); ++y) {
      Automorphism original = Automorphism::eval(base[y], n);
      if (order(out.families[f][y], 64) != order(original, 64))
        out.orders_preserved = false;
    }
  return out;
}

EmbeddingReport embed_and_check_yprime(int n) {
  if (n < 5) throw std::invalid_argument("the embedding check needs n >= 5");
  EmbeddingReport report;
  report.n = n;
  report.ok = true;

  GenSet y4 = builtin_genset(GenSetName::Y4, n);
  std::string excluded =
      "(x" + std::to_string(n - 1) + ",x" + std::to_string(n) + ")e" + std::to_string(n - 1);
  for (const auto& el : y4.elements) {
    if (el.name == excluded) continue;
    EmbeddingCheckItem item;
    item.element = el.name;
    try {
      // the element never touches x_n, so the same product is an
      // automorphism of the smaller free group
      Automorphism preimage = Automorphism::eval(el.expr, n - 1);
      item.preimage_det = determinant_sign(preimage);
      item.exact = (psi_embed(preimage) == el.aut) && item.preimage_det == 1;
      item.detail = item.exact ? "preimage at rank " + std::to_string(n - 1)
                               : "embedding mismatch";
    } catch (const std::exception& ex) {
      item.exact = false;
      item.detail = ex.what();
    }
    if (!item.exact) report.ok = false;
    report.items.push_back(std::move(item));
  }

  report.det_multiplicative = true;
  for (const auto& f : y4.elements)
    for (const auto& g : y4.elements)
      if (determinant_sign(compose(f.aut, g.aut)) !=
          determinant_sign(f.aut) * determinant_sign(g.aut))
        report.det_multiplicative = false;
  if (!report.det_multiplicative) report.ok = false;
  return report;
}

}  // namespace fadlab

#include "doctest.h"

#include <stdexcept>

#include "fadlab/gensets.hpp"

using namespace fadlab;

namespace {

std::vector<std::string> names_of(const GenSet& set) {
  std::vector<std::string> out;
  for (const auto& el : set.elements) out.push_back(el.name);
  return out;
}

std::size_t index_of(const GenSet& set, const std::string& name) {
  for (std::size_t k = 0; k < set.elements.size(); ++k)
    if (set.elements[k].name == name) return k;
  throw std::runtime_error("missing " + name);
}

}  // namespace

TEST_CASE("builtin generating sets") {
  CHECK(names_of(builtin_genset(GenSetName::Y2, 5)) ==
        std::vector<std::string>{"(x1,x2)e1e2", "(x2,x3)e1", "(x3,x4)", "(x4,x5)", "e2rho12",
                                 "e5"});
  CHECK(names_of(builtin_genset(GenSetName::Y4, 5)) ==
        std::vector<std::string>{"(x1,x2)e1e2e3", "(x2,x3)e1", "(x3,x4)e3", "(x4,x5)e4",
                                 "e2e4rho12", "e3e4"});
  CHECK(names_of(builtin_genset(GenSetName::Y1, 4)) ==
        std::vector<std::string>{"rho12", "e1", "(x1,x2)", "cyc"});
  CHECK(builtin_genset(GenSetName::Y3, 5).elements.size() == 10);  // 2(n-1)+2
  CHECK(builtin_genset(GenSetName::Y2, 8).elements.size() == 9);   // n+1
  CHECK(builtin_genset(GenSetName::Yprime, 5).elements[2].name == "(x3,x4)e3");
  CHECK(builtin_genset(GenSetName::Yprime, 5).elements[3].name == "(x4,x5)e3");
  CHECK_THROWS_AS(builtin_genset(GenSetName::Y2, 3), std::invalid_argument);
  CHECK_THROWS_AS(builtin_genset(GenSetName::Y1, 2), std::invalid_argument);
}

TEST_CASE("relation replay") {
  for (int n : {5, 6, 9, 10, 11, 12}) {
    for (const RelationRecord& rec : replay_proposition(Proposition::AutGensetChain, n))
      CHECK_MESSAGE(rec.verified, rec.label, " at rank ", n);
    for (const RelationRecord& rec : replay_proposition(Proposition::SautGensetChain, n))
      CHECK_MESSAGE(rec.verified, rec.label, " at rank ", n);
  }
  CHECK_NOTHROW(replay_or_throw(Proposition::AutGensetChain, 4));
  CHECK_THROWS_AS(replay_proposition(Proposition::AutGensetChain, 3), std::invalid_argument);
  CHECK_THROWS_AS(replay_proposition(Proposition::SautGensetChain, 4), std::invalid_argument);
}

TEST_CASE("single relation verification") {
  RelationRecord good{"lambda", GroupWord::parse("lam(1,2)"),
                      GroupWord::parse("e(1)*e(2)*rho(1,2)*e(2)*e(1)"), false};
  CHECK(verify_relation(good, 5));
  RelationRecord bad{"broken", GroupWord::parse("lam(1,2)"),
                     GroupWord::parse("rho(1,2)"), false};
  CHECK_FALSE(verify_relation(bad, 5));
  RelationRecord square{"involution", GroupWord::parse("t(1,2)*t(1,2)"),
                        GroupWord::parse("id"), false};
  CHECK(verify_relation(square, 5));
}

TEST_CASE("element orders in Y2 and Y4") {
  for (int n : {5, 8, 10}) {
    for (const auto& el : builtin_genset(GenSetName::Y2, n).elements)
      CHECK(order(el.aut) == 2);
    for (const auto& el : builtin_genset(GenSetName::Y4, n).elements) {
      auto ord = order(el.aut, 64);
      REQUIRE(ord.has_value());
      CHECK(*ord <= 64);
    }
  }
  // the decorated swaps have order four, the rest are involutions
  GenSet y4 = builtin_genset(GenSetName::Y4, 9);
  CHECK(order(y4.by_name("(x3,x4)e3").aut) == 4);
  CHECK(order(y4.by_name("(x1,x2)e1e2e3").aut) == 2);
  CHECK(order(y4.by_name("e2e4rho12").aut) == 2);
  CHECK(order(y4.by_name("e3e4").aut) == 2);
}

TEST_CASE("pair order table reproduces the Y2 diagram at rank 8") {
  GenSet y2 = builtin_genset(GenSetName::Y2, 8);
  PairTable table = pair_order_table(y2);

  std::size_t A = index_of(y2, "(x1,x2)e1e2"), B = index_of(y2, "(x2,x3)e1"),
              R = index_of(y2, "e2rho12"), E = index_of(y2, "e8"),
              T3 = index_of(y2, "(x3,x4)"), T7 = index_of(y2, "(x7,x8)");

  // the four labeled edges carry orders 4, 6, 6, 4; the unlabeled triangle
  // edge has order 3
  CHECK(table.product_order[R][B] == 4);
  CHECK(table.product_order[A][B] == 6);
  CHECK(table.product_order[B][T3] == 6);
  CHECK(table.product_order[T7][E] == 4);
  CHECK(table.product_order[R][A] == 3);
  CHECK(table.product_order[T3][index_of(y2, "(x4,x5)")] == 3);

  for (std::size_t i = 0; i < table.names.size(); ++i)
    for (std::size_t j = 0; j < table.names.size(); ++j)
      CHECK(table.product_order[i][j] == table.product_order[j][i]);

  CHECK(commutation_graph(table).edges == drawn_figure_graph(GenSetName::Y2, 8).edges);
}

TEST_CASE("Y4 commutation graph at rank 9") {
  GenSet y4 = builtin_genset(GenSetName::Y4, 9);
  PairTable table = pair_order_table(y4);
  CommutationGraph computed = commutation_graph(table);
  CommutationGraph drawn = drawn_figure_graph(GenSetName::Y4, 9);

  std::size_t A = index_of(y4, "(x1,x2)e1e2e3"), B = index_of(y4, "(x2,x3)e1"),
              C3 = index_of(y4, "(x3,x4)e3"), C4 = index_of(y4, "(x4,x5)e4"),
              R = index_of(y4, "e2e4rho12"), D = index_of(y4, "e3e4");

  CHECK(table.product_order[R][A] == 6);
  CHECK(table.product_order[R][B] == 4);
  CHECK(computed.neighbors(R) == std::vector<std::size_t>{A, B, C3, C4});
  CHECK(computed.neighbors(D) == std::vector<std::size_t>{B, C4});

  // every drawn edge is real; the one omission in the drawing is the
  // non-commuting pair (x1,x2)e1e2e3 / (x3,x4)e3
  for (const auto& edge : drawn.edges) CHECK(computed.edges.count(edge) == 1);
  std::set<std::pair<std::size_t, std::size_t>> extra;
  for (const auto& edge : computed.edges)
    if (!drawn.edges.count(edge)) extra.insert(edge);
  CHECK(extra == std::set<std::pair<std::size_t, std::size_t>>{
                     {std::min(A, C3), std::max(A, C3)}});
  CHECK_FALSE(commutes(y4.elements[A].aut, y4.elements[C3].aut));

  // the path from the Nielsen vertex to the top decorated swap pins the
  // counting step: any connected subset joining them has >= n-3 members
  for (int n : {9, 10, 11, 12}) {
    GenSet set = builtin_genset(GenSetName::Y4, n);
    CommutationGraph graph = commutation_graph(pair_order_table(set));
    std::size_t r = index_of(set, "e2e4rho12");
    std::size_t last = set.elements.size() - 3;
    CHECK(graph.shortest_path_vertices(r, last) == static_cast<std::size_t>(n - 3));
  }
}

TEST_CASE("disjoint supports commute") {
  GenSet y2 = builtin_genset(GenSetName::Y2, 8);
  PairTable table = pair_order_table(y2);
  std::size_t T3 = index_of(y2, "(x3,x4)"), T5 = index_of(y2, "(x5,x6)");
  CHECK(table.commute[T3][T5]);
  CHECK(table.product_order[T3][T5] == 2);
}

TEST_CASE("finite closure enumeration") {
  CHECK(finite_closure({Automorphism::eval("t(1,2)", 4)}) == 2);
  CHECK(finite_closure({Automorphism::eval("e(2)*e(4)*rho(1,2)", 5),
                        Automorphism::eval("t(3,4)*e(3)", 5)}) == 8);

  GenSet y2 = builtin_genset(GenSetName::Y2, 4);
  std::vector<Automorphism> gens;
  for (const auto& el : y2.elements)
    if (el.name != "e2rho12") gens.push_back(el.aut);
  CHECK(finite_closure(gens) == 384);  // 2^4 * 4!

  GenSet yp = builtin_genset(GenSetName::Yprime, 5);
  gens.clear();
  for (const auto& el : yp.elements)
    if (el.name != "e2e4rho12") gens.push_back(el.aut);
  CHECK(finite_closure(gens) == 1920);  // index two in 2^5 * 5!

  // infinite order generator exhausts any cap
  CHECK(finite_closure({Automorphism::eval("rho(1,2)", 4)}, 100) == std::nullopt);
  CHECK(finite_closure({}) == 1);
}

TEST_CASE("signed permutations after removing the Nielsen generator") {
  for (int n : {5, 6, 9, 10}) {
    for (const auto& el : builtin_genset(GenSetName::Y2, n).elements)
      if (el.name != "e2rho12") CHECK(as_signed_permutation(el.aut).has_value());
    for (const auto& el : builtin_genset(GenSetName::Y4, n).elements)
      if (el.name != "e2e4rho12") CHECK(as_signed_permutation(el.aut).has_value());
    for (const auto& el : builtin_genset(GenSetName::Yprime, n).elements)
      if (el.name != "e2e4rho12") CHECK(as_signed_permutation(el.aut).has_value());
    CHECK_FALSE(
        as_signed_permutation(builtin_genset(GenSetName::Y2, n).by_name("e2rho12").aut)
            .has_value());
  }
}

TEST_CASE("pairwise finiteness certificates") {
  GenSet y2 = builtin_genset(GenSetName::Y2, 8);
  auto certs2 = certify_pairwise_finite(y2);
  CHECK(certs2.size() == 36);
  for (const auto& cert : certs2) {
    CHECK(cert.ok);
    CHECK(cert.kind == PairCertificate::Kind::Dihedral);  // all Y2 members are involutions
  }
  std::size_t A = index_of(y2, "(x1,x2)e1e2"), R = index_of(y2, "e2rho12");
  for (const auto& cert : certs2)
    if (cert.i == std::min(A, R) && cert.j == std::max(A, R)) CHECK(cert.group_order == 6);

  GenSet y4 = builtin_genset(GenSetName::Y4, 9);
  auto certs4 = certify_pairwise_finite(y4);
  CHECK(certs4.size() == 45);
  bool saw_signed = false, saw_closure = false;
  for (const auto& cert : certs4) {
    CHECK(cert.ok);
    saw_signed = saw_signed || cert.kind == PairCertificate::Kind::SignedPermutation;
    saw_closure = saw_closure || cert.kind == PairCertificate::Kind::Closure;
  }
  CHECK(saw_signed);
  CHECK(saw_closure);
  std::size_t C3 = index_of(y4, "(x3,x4)e3"), R4 = index_of(y4, "e2e4rho12");
  for (const auto& cert : certs4)
    if (cert.i == std::min(C3, R4) && cert.j == std::max(C3, R4)) {
      CHECK(cert.kind == PairCertificate::Kind::Closure);
      CHECK(cert.group_order == 8);
    }
}

TEST_CASE("DOT export") {
  GenSet y2 = builtin_genset(GenSetName::Y2, 5);
  std::string dot = to_dot(pair_order_table(y2), "Y2_n5");
  CHECK(dot.find("graph Y2_n5 {") == 0);
  CHECK(dot.find("label=\"e2rho12\"") != std::string::npos);
  CHECK(dot.find("label=\"4\"") != std::string::npos);
  CHECK(dot.find(" -- ") != std::string::npos);
}

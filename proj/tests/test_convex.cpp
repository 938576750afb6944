#include "doctest.h"

#include <random>
#include <stdexcept>

#include "fadlab/convex.hpp"

using namespace fadlab;

namespace {

Box box2(int alo, int ahi, int blo, int bhi) {
  return Box{{{alo, ahi}, {blo, bhi}}};
}

}  // namespace

TEST_CASE("rational text form") {
  CHECK(rational_str(Rational(1, 3)) == "1/3");
  CHECK(rational_str(Rational(4, 2)) == "2/1");
  CHECK(parse_rational("7/4") == Rational(7, 4));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("box basics and text form") {
  Box box = box2(0, 2, 1, 3);
  CHECK(box.str() == "box d=2 [0/1,2/1]x[1/1,3/1]");
  CHECK(Box::parse(box.str()) == box);
  CHECK(Box::parse("box d=1 [-1/2,3/4]").intervals[0].second == Rational(3, 4));
  CHECK(box.contains({Rational(1), Rational(2)}));
  CHECK_FALSE(box.contains({Rational(3), Rational(2)}));
  CHECK_THROWS_AS(Box::parse("box d=2 [0/1,2/1]"), std::invalid_argument);
  Box inverted;
  inverted.intervals.emplace_back(2, 1);
  CHECK_THROWS_AS(inverted.validate(), std::invalid_argument);
}

TEST_CASE("hpolytope text form") {
  HPolytope poly = HPolytope::from_box(box2(0, 1, 0, 1));
  CHECK(HPolytope::parse(poly.str()).halfspaces.size() == 4);
  HPolytope parsed = HPolytope::parse("hpoly d=2 {1/1,1/1 <= 1/1; -1/1,0/1 <= 0/1}");
  CHECK(parsed.dimension == 2);
  CHECK(parsed.contains({Rational(0), Rational(1, 2)}));
  CHECK_FALSE(parsed.contains({Rational(1), Rational(1)}));
}

TEST_CASE("box feasibility") {
  std::vector<Box> boxes{box2(0, 2, 0, 2), box2(1, 3, 1, 3)};
  auto witness = feasible_boxes(boxes);
  REQUIRE(witness.has_value());
  for (const Box& box : boxes) CHECK(box.contains(*witness));

  std::vector<Box> disjoint{box2(0, 1, 0, 1), box2(2, 3, 0, 1)};
  CHECK_FALSE(feasible_boxes(disjoint).has_value());

  // touching boxes share a face point
  std::vector<Box> touching{Box{{{0, 1}}}, Box{{{1, 2}}}};
  REQUIRE(feasible_boxes(touching).has_value());
  CHECK((*feasible_boxes(touching))[0] == Rational(1));
}

TEST_CASE("polytope feasibility by elimination") {
  {
    std::vector<ConvexBody> bodies;
    bodies.emplace_back(HPolytope::parse("hpoly d=1 {1/1 <= -1/1}"));   // x <= -1
    bodies.emplace_back(HPolytope::parse("hpoly d=1 {-1/1 <= 0/1}"));  // x >= 0
    CHECK_FALSE(feasible(bodies).has_value());
  }
  {
    // a 2d triangle and a shifted box
    std::vector<ConvexBody> bodies;
    bodies.emplace_back(
        HPolytope::parse("hpoly d=2 {1/1,1/1 <= 2/1; -1/1,0/1 <= 0/1; 0/1,-1/1 <= 0/1}"));
    bodies.emplace_back(box2(1, 5, 0, 5));
    auto witness = feasible(bodies);
    REQUIRE(witness.has_value());
    for (const ConvexBody& body : bodies) CHECK(body_contains(body, *witness));
  }
  {
    // dimension guard
    std::vector<ConvexBody> bodies;
    HPolytope p;
    p.dimension = 5;
    p.halfspaces.push_back({{1, 0, 0, 0, 0}, 1});
    bodies.emplace_back(p);
    CHECK_THROWS_AS(feasible(bodies), std::invalid_argument);
  }
}

TEST_CASE("elimination agrees with the box oracle") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    int d = 1 + static_cast<int>(trial % 3);
    std::vector<Box> boxes;
    std::vector<ConvexBody> as_polys;
    for (int s = 0; s < 4; ++s) {
      Box box = random_box(rng, d);
      boxes.push_back(box);
      as_polys.emplace_back(HPolytope::from_box(box));
    }
    CHECK(feasible_boxes(boxes).has_value() == feasible(as_polys).has_value());
  }
}

TEST_CASE("box distances") {
  CHECK(box_distance(box2(0, 1, 0, 1), box2(2, 3, 2, 3), Metric::Linf) == 1);
  CHECK(box_distance(box2(0, 1, 0, 1), box2(2, 3, 2, 3), Metric::L2Squared) == 2);
  CHECK(box_distance(Box{{{0, 1}}}, Box{{{1, 2}}}, Metric::Linf) == 0);
  CHECK(box_distance(Box{{{0, 10}}}, Box{{{2, 3}}}, Metric::Linf) == 0);  // nested

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    Box a = random_box(rng, 2), b = random_box(rng, 2);
    bool meet = intersect(a, b).has_value();
    CHECK((box_distance(a, b, Metric::Linf) == 0) == meet);
    CHECK((box_distance(a, b, Metric::L2Squared) == 0) == meet);
    std::vector<Box> pair{a, b};
    CHECK(feasible_boxes(pair).has_value() == meet);
  }
}

TEST_CASE("helly verdicts") {
  {
    // four boxes in the plane with pairwise overlaps meet in a point
    std::vector<ConvexBody> boxes;
    boxes.emplace_back(box2(0, 2, 0, 2));
    boxes.emplace_back(box2(1, 3, 0, 2));
    boxes.emplace_back(box2(0, 2, 1, 3));
    boxes.emplace_back(box2(1, 3, 1, 3));
    HellyVerdict verdict = helly_check(boxes, 2);
    CHECK(verdict.kind == HellyVerdict::Kind::TotalWitness);
    for (const ConvexBody& body : boxes) CHECK(body_contains(body, verdict.witness));
  }
  {
    // boxes violating the (d+1)-wise hypothesis are reported, not judged
    std::vector<ConvexBody> boxes;
    boxes.emplace_back(Box{{{0, 1}}});
    boxes.emplace_back(Box{{{2, 3}}});
    boxes.emplace_back(Box{{{0, 3}}});
    HellyVerdict verdict = helly_check(boxes, 1);
    CHECK(verdict.kind == HellyVerdict::Kind::HypothesisViolated);
    CHECK(verdict.violating == std::vector<std::size_t>{0, 1});
  }
  {
    std::vector<ConvexBody> with_empty;
    with_empty.emplace_back(HPolytope::parse("hpoly d=1 {1/1 <= -1/1; -1/1 <= 0/1}"));
    CHECK_THROWS_AS(helly_check(with_empty, 1), std::invalid_argument);
  }
}

TEST_CASE("randomized helly runs never contradict the theorem") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> set_dist(3, 8);
  for (int trial = 0; trial < 150; ++trial) {
    int d = 1 + trial % 3;
    Point center;
    for (int c = 0; c < d; ++c) center.push_back(random_rational(rng, -2, 2));
    std::vector<ConvexBody> family;
    int sets = set_dist(rng);
    for (int s = 0; s < sets; ++s) {
      if (trial % 2 == 0) {
        Box box;
        for (int c = 0; c < d; ++c) {
          Rational r1 = random_rational(rng, 0, 5), r2 = random_rational(rng, 0, 5);
          box.intervals.emplace_back(center[static_cast<std::size_t>(c)] - r1,
                                     center[static_cast<std::size_t>(c)] + r2);
        }
        family.emplace_back(std::move(box));
      } else {
        Point jittered = center;
        for (int c = 0; c < d; ++c)
          jittered[static_cast<std::size_t>(c)] += random_rational(rng, -1, 1);
        family.emplace_back(random_hpolytope(rng, d, jittered));
      }
    }
    CHECK_NOTHROW(helly_check(family, d));
  }
}

TEST_CASE("swelling traces") {
  {
    std::vector<Box> disjoint{Box{{{0, 1}}}, Box{{{2, 3}}}};
    SwellingTrace trace = swelling(disjoint);
    CHECK(trace.nerve_preserved);
    CHECK(trace.steps[0].eps == Rational(1, 2));  // distance 1, halved
    CHECK(trace.steps[0].min_distance == Rational(1));
    CHECK(trace.steps[1].eps <= Rational(1, 2));
    CHECK_FALSE(intersect(trace.steps[0].inflated, trace.steps[1].inflated).has_value());
  }
  {
    std::vector<Box> nested{Box{{{0, 9}, {0, 9}}}, Box{{{1, 8}, {1, 8}}},
                            Box{{{2, 7}, {2, 7}}}};
    SwellingTrace trace = swelling(nested);
    CHECK(trace.nerve_preserved);
    for (const auto& step : trace.steps) {
      CHECK(step.candidates == 0);
      CHECK(step.eps == Rational(1, 2));  // the min-with-one branch
    }
  }
  {
    // pairwise meeting, empty triple
    std::vector<Box> triple{Box{{{0, 4}, {0, 1}}}, Box{{{3, 7}, {0, 1}}},
                            Box{{{Rational(11, 2), 9}, {0, 1}}}};
    auto triple_empty = [&](const std::vector<Box>& f) {
      return !intersect(std::span<const Box>(f)).has_value();
    };
    REQUIRE(triple_empty(triple));
    SwellingTrace trace = swelling(triple);
    CHECK(trace.nerve_preserved);
    CHECK(trace.steps[0].candidates > 0);
    std::vector<Box> inflated;
    for (const auto& step : trace.steps) inflated.push_back(step.inflated);
    CHECK(triple_empty(inflated));
  }
  {
    std::vector<Box> too_many(13, Box{{{0, 1}}});
    CHECK_THROWS_AS(swelling(too_many), std::invalid_argument);
  }
}

TEST_CASE("randomized swellings preserve the pattern with eps at most 1/2") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> count_dist(2, 8);
  std::uniform_int_distribution<int> dim_dist(1, 3);
  for (int trial = 0; trial < 120; ++trial) {
    std::vector<Box> family;
    int count = count_dist(rng), d = dim_dist(rng);
    for (int b = 0; b < count; ++b) family.push_back(random_box(rng, d));
    SwellingTrace trace = swelling(family);
    CHECK(trace.nerve_preserved);
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      CHECK(trace.steps[i].eps <= Rational(1, 2));
      // inflation contains the original set
      for (int c = 0; c < d; ++c) {
        CHECK(trace.steps[i].inflated.intervals[static_cast<std::size_t>(c)].first <=
              family[i].intervals[static_cast<std::size_t>(c)].first);
        CHECK(trace.steps[i].inflated.intervals[static_cast<std::size_t>(c)].second >=
              family[i].intervals[static_cast<std::size_t>(c)].second);
      }
    }
  }
}

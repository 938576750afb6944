#pragma once

/*
 * Exact rational convex bodies: coordinate boxes and halfspace polytopes.
 *
 * Feasibility of box families is coordinatewise interval intersection;
 * polytope families go through exact Fourier-Motzkin elimination with a
 * witness reconstructed by back substitution.  Every witness is re-checked
 * against every original constraint, so the answers do not depend on the
 * theorems being exercised.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace fadlab {

using Rational = boost::multiprecision::cpp_rational;
using Point = std::vector<Rational>;

std::string rational_str(const Rational& r);  // always num/den
Rational parse_rational(const std::string& text);

struct Box {
  std::vector<std::pair<Rational, Rational>> intervals;  // lo <= hi per coordinate

  int dim() const { return static_cast<int>(intervals.size()); }
  bool contains(const Point& p) const;
  void validate() const;  // nonempty, exact

  std::string str() const;  // box d=2 [0/1,2/1]x[1/1,3/1]
  static Box parse(const std::string& text);
  bool operator==(const Box&) const = default;
};

std::optional<Box> intersect(const Box& a, const Box& b);
std::optional<Box> intersect(std::span<const Box> boxes);

struct Halfspace {
  std::vector<Rational> normal;
  Rational offset;  // normal . x <= offset
};

struct HPolytope {
  int dimension = 0;
  std::vector<Halfspace> halfspaces;

  int dim() const { return dimension; }
  bool contains(const Point& p) const;
  static HPolytope from_box(const Box& box);

  std::string str() const;  // hpoly d=2 {1/1,0/1 <= 2/1; ...}
  static HPolytope parse(const std::string& text);
};

using ConvexBody = std::variant<Box, HPolytope>;

int body_dim(const ConvexBody& body);
bool body_contains(const ConvexBody& body, const Point& p);
std::string body_str(const ConvexBody& body);
ConvexBody parse_body(const std::string& text);

// exact feasibility of the joint intersection; polytope input is guarded
// to dimension <= 4 (elimination blow-up)
std::optional<Point> feasible(std::span<const ConvexBody> bodies);
std::optional<Point> feasible_boxes(std::span<const Box> boxes);

enum class Metric { Linf, L2Squared };

// inf distance between boxes: max coordinate gap (Linf) or the sum of
// squared gaps (L2Squared, kept squared to stay rational); zero iff the
// boxes intersect
Rational box_distance(const Box& a, const Box& b, Metric metric);

struct HellyContradiction : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HellyVerdict {
  enum class Kind { HypothesisViolated, TotalWitness } kind;
  std::vector<std::size_t> violating;  // indices of an infeasible (d+1)-subfamily
  Point witness;                       // for TotalWitness, re-validated
};

// enumerates all (d+1)-subfamilies; if every one is feasible the total
// intersection must be nonempty -- an empty total throws HellyContradiction
// since it would refute the underlying theorem
HellyVerdict helly_check(std::span<const ConvexBody> bodies, int d);

struct SwellingStep {
  Rational eps_prime;                    // min(1, nearest disjoint sub-intersection)
  Rational eps;                          // eps_prime / 2
  std::size_t candidates = 0;            // disjoint nonempty sub-intersections seen
  std::optional<Rational> min_distance;  // distance that determined eps_prime
  std::vector<std::size_t> determining;  // one minimizing subfamily
  Box inflated;
};

struct SwellingTrace {
  std::vector<SwellingStep> steps;
  bool nerve_preserved = false;  // empty patterns coincide before and after
};

// iterative inflation in the Linf metric, each step by half the distance
// to the nearest disjoint sub-intersection of the current family (capped
// at 1/2); family size <= 12
SwellingTrace swelling(std::span<const Box> family);

// reproducible random instances: rational coordinates with denominators <= 64
Rational random_rational(std::mt19937_64& rng, int lo, int hi, int max_den = 64);
Box random_box(std::mt19937_64& rng, int dim);
// polytope containing `anchor`, so membership stays decidably nonempty
HPolytope random_hpolytope(std::mt19937_64& rng, int dim, const Point& anchor);

}  // namespace fadlab

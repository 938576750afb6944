#include "fadlab/convex.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fadlab {

std::string rational_str(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(text));
    boost::multiprecision::cpp_int num(text.substr(0, slash));
    boost::multiprecision::cpp_int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational '" + text + "'");
  }
}

bool Box::contains(const Point& p) const {
  if (static_cast<int>(p.size()) != dim()) return false;
  for (int c = 0; c < dim(); ++c)
    if (p[static_cast<std::size_t>(c)] < intervals[static_cast<std::size_t>(c)].first ||
        p[static_cast<std::size_t>(c)] > intervals[static_cast<std::size_t>(c)].second)
      return false;
  return true;
}

void Box::validate() const {
  if (intervals.empty()) throw std::invalid_argument("box needs dimension >= 1");
  for (const auto& [lo, hi] : intervals)
    if (lo > hi) throw std::invalid_argument("box interval with lo > hi");
}

std::string Box::str() const {
  std::string out = "box d=" + std::to_string(dim()) + " ";
  for (int c = 0; c < dim(); ++c) {
    if (c) out += "x";
    out += "[" + rational_str(intervals[static_cast<std::size_t>(c)].first) + "," +
           rational_str(intervals[static_cast<std::size_t>(c)].second) + "]";
  }
  return out;
}

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

}  // namespace

Box Box::parse(const std::string& text) {
  std::string s = strip(text);
  if (s.rfind("boxd=", 0) != 0) throw std::invalid_argument("expected `box d=...`");
  std::size_t pos = 5;
  std::size_t bracket = s.find('[', pos);
  if (bracket == std::string::npos) throw std::invalid_argument("expected '[' in box");
  int d = std::stoi(s.substr(pos, bracket - pos));
  Box box;
  pos = bracket;
  for (int c = 0; c < d; ++c) {
    if (s[pos] != '[') throw std::invalid_argument("expected '[' in box");
    std::size_t comma = s.find(',', pos);
    std::size_t close = s.find(']', pos);
    if (comma == std::string::npos || close == std::string::npos || comma > close)
      throw std::invalid_argument("bad interval in box");
    box.intervals.emplace_back(parse_rational(s.substr(pos + 1, comma - pos - 1)),
                               parse_rational(s.substr(comma + 1, close - comma - 1)));
    pos = close + 1;
    if (c + 1 < d) {
      if (pos >= s.size() || s[pos] != 'x') throw std::invalid_argument("expected 'x' in box");
      ++pos;
    }
  }
  if (pos != s.size()) throw std::invalid_argument("trailing text in box");
  box.validate();
  return box;
}

std::optional<Box> intersect(const Box& a, const Box& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("box dimension mismatch");
  Box out;
  for (int c = 0; c < a.dim(); ++c) {
    Rational lo = std::max(a.intervals[static_cast<std::size_t>(c)].first,
                           b.intervals[static_cast<std::size_t>(c)].first);
    Rational hi = std::min(a.intervals[static_cast<std::size_t>(c)].second,
                           b.intervals[static_cast<std::size_t>(c)].second);
    if (lo > hi) return std::nullopt;
    out.intervals.emplace_back(std::move(lo), std::move(hi));
  }
  return out;
}

std::optional<Box> intersect(std::span<const Box> boxes) {
  if (boxes.empty()) throw std::invalid_argument("empty box family");
  Box acc = boxes[0];
  for (std::size_t k = 1; k < boxes.size(); ++k) {
    auto next = intersect(acc, boxes[k]);
    if (!next) return std::nullopt;
    acc = std::move(*next);
  }
  return acc;
}

bool HPolytope::contains(const Point& p) const {
  if (static_cast<int>(p.size()) != dimension) return false;
  for (const Halfspace& h : halfspaces) {
    Rational lhs = 0;
    for (int c = 0; c < dimension; ++c)
      lhs += h.normal[static_cast<std::size_t>(c)] * p[static_cast<std::size_t>(c)];
    if (lhs > h.offset) return false;
  }
  return true;
}

HPolytope HPolytope::from_box(const Box& box) {
  HPolytope poly;
  poly.dimension = box.dim();
  for (int c = 0; c < box.dim(); ++c) {
    Halfspace upper{std::vector<Rational>(static_cast<std::size_t>(box.dim()), 0),
                    box.intervals[static_cast<std::size_t>(c)].second};
    upper.normal[static_cast<std::size_t>(c)] = 1;
    Halfspace lower{std::vector<Rational>(static_cast<std::size_t>(box.dim()), 0),
                    -box.intervals[static_cast<std::size_t>(c)].first};
    lower.normal[static_cast<std::size_t>(c)] = -1;
    poly.halfspaces.push_back(std::move(upper));
    poly.halfspaces.push_back(std::move(lower));
  }
  return poly;
}

std::string HPolytope::str() const {
  std::string out = "hpoly d=" + std::to_string(dimension) + " {";
  for (std::size_t h = 0; h < halfspaces.size(); ++h) {
    if (h) out += "; ";
    for (int c = 0; c < dimension; ++c) {
      if (c) out += ",";
      out += rational_str(halfspaces[h].normal[static_cast<std::size_t>(c)]);
    }
    out += " <= " + rational_str(halfspaces[h].offset);
  }
  out += "}";
  return out;
}

HPolytope HPolytope::parse(const std::string& text) {
  std::string s = strip(text);
  if (s.rfind("hpolyd=", 0) != 0) throw std::invalid_argument("expected `hpoly d=...`");
  std::size_t pos = 7;
  std::size_t brace = s.find('{', pos);
  if (brace == std::string::npos) throw std::invalid_argument("expected '{' in hpoly");
  HPolytope poly;
  poly.dimension = std::stoi(s.substr(pos, brace - pos));
  std::size_t close = s.find('}', brace);
  if (close == std::string::npos) throw std::invalid_argument("expected '}' in hpoly");
  std::string body = s.substr(brace + 1, close - brace - 1);
  if (close + 1 != s.size()) throw std::invalid_argument("trailing text in hpoly");

  std::istringstream rows(body);
  std::string row;
  while (std::getline(rows, row, ';')) {
    if (row.empty()) continue;
    auto le = row.find("<=");
    if (le == std::string::npos) throw std::invalid_argument("expected '<=' in hpoly row");
    Halfspace h;
    std::istringstream coefs(row.substr(0, le));
    std::string coef;
    while (std::getline(coefs, coef, ','))
      if (!coef.empty()) h.normal.push_back(parse_rational(coef));
    h.offset = parse_rational(row.substr(le + 2));
    if (static_cast<int>(h.normal.size()) != poly.dimension)
      throw std::invalid_argument("hpoly row arity mismatch");
    poly.halfspaces.push_back(std::move(h));
  }
  return poly;
}

int body_dim(const ConvexBody& body) {
  return std::visit([](const auto& b) { return b.dim(); }, body);
}

bool body_contains(const ConvexBody& body, const Point& p) {
  return std::visit([&](const auto& b) { return b.contains(p); }, body);
}

std::string body_str(const ConvexBody& body) {
  return std::visit([](const auto& b) { return b.str(); }, body);
}

ConvexBody parse_body(const std::string& text) {
  std::string s = strip(text);
  if (s.rfind("box", 0) == 0) return Box::parse(text);
  if (s.rfind("hpoly", 0) == 0) return HPolytope::parse(text);
  throw std::invalid_argument("body must start with `box` or `hpoly`");
}

std::optional<Point> feasible_boxes(std::span<const Box> boxes) {
  auto common = intersect(boxes);
  if (!common) return std::nullopt;
  Point witness;
  for (const auto& [lo, hi] : common->intervals) witness.push_back((lo + hi) / 2);
  for (const Box& box : boxes)
    if (!box.contains(witness)) throw std::logic_error("box witness failed re-validation");
  return witness;
}

namespace {

struct Constraint {
  std::vector<Rational> coef;
  Rational rhs;
};

// scale so the leading nonzero coefficient has absolute value one, then
// keep only the tightest rhs per coefficient vector
std::vector<Constraint> dedupe(const std::vector<Constraint>& in) {
  std::map<std::vector<Rational>, Rational> best;
  for (const Constraint& c : in) {
    Rational scale = 0;
    for (const Rational& x : c.coef)
      if (x != 0) {
        scale = boost::multiprecision::abs(x);
        break;
      }
    if (scale == 0) {
      // variable-free row; keep as an impossible marker when violated
      if (c.rhs < 0) return {{std::vector<Rational>(c.coef.size(), 0), Rational(-1)}};
      continue;
    }
    std::vector<Rational> key;
    key.reserve(c.coef.size());
    for (const Rational& x : c.coef) key.push_back(x / scale);
    Rational rhs = c.rhs / scale;
    auto it = best.find(key);
    if (it == best.end())
      best.emplace(std::move(key), std::move(rhs));
    else
      it->second = std::min(it->second, rhs);
  }
  std::vector<Constraint> out;
  out.reserve(best.size());
  for (auto& [key, rhs] : best) out.push_back({key, rhs});
  return out;
}

bool infeasible_marker(const std::vector<Constraint>& cs) {
  return cs.size() == 1 && cs[0].rhs < 0 &&
         std::all_of(cs[0].coef.begin(), cs[0].coef.end(),
                     [](const Rational& x) { return x == 0; });
}

}  // namespace

std::optional<Point> feasible(std::span<const ConvexBody> bodies) {
  if (bodies.empty()) throw std::invalid_argument("empty family");
  int d = body_dim(bodies[0]);
  bool any_poly = false;
  for (const ConvexBody& body : bodies) {
    if (body_dim(body) != d) throw std::invalid_argument("mixed dimensions in family");
    if (std::holds_alternative<HPolytope>(body)) any_poly = true;
  }
  if (!any_poly) {
    std::vector<Box> boxes;
    for (const ConvexBody& body : bodies) boxes.push_back(std::get<Box>(body));
    return feasible_boxes(boxes);
  }
  if (d > 4)
    throw std::invalid_argument("polytope feasibility is guarded to dimension <= 4");

  std::vector<Constraint> cs;
  for (const ConvexBody& body : bodies) {
    HPolytope poly = std::holds_alternative<HPolytope>(body)
                         ? std::get<HPolytope>(body)
                         : HPolytope::from_box(std::get<Box>(body));
    for (const Halfspace& h : poly.halfspaces) cs.push_back({h.normal, h.offset});
  }

  // eliminate x_d .. x_2, remembering each level for back substitution
  std::vector<std::vector<Constraint>> levels(static_cast<std::size_t>(d) + 1);
  cs = dedupe(cs);
  levels[static_cast<std::size_t>(d)] = cs;
  for (int var = d; var >= 1; --var) {
    if (infeasible_marker(cs)) return std::nullopt;
    if (var == 1) break;
    std::size_t v = static_cast<std::size_t>(var) - 1;
    std::vector<Constraint> zero, pos, neg;
    for (const Constraint& c : cs) {
      if (c.coef[v] == 0)
        zero.push_back(c);
      else if (c.coef[v] > 0)
        pos.push_back(c);
      else
        neg.push_back(c);
    }
    std::vector<Constraint> next = zero;
    for (const Constraint& p : pos)
      for (const Constraint& q : neg) {
        Constraint combo;
        combo.coef.resize(static_cast<std::size_t>(d), 0);
        Rational a = p.coef[v], b = -q.coef[v];  // a, b > 0
        for (std::size_t c = 0; c < static_cast<std::size_t>(d); ++c)
          combo.coef[c] = b * p.coef[c] + a * q.coef[c];
        combo.rhs = b * p.rhs + a * q.rhs;
        next.push_back(std::move(combo));
      }
    cs = dedupe(next);
    levels[static_cast<std::size_t>(var) - 1] = cs;
  }
  if (infeasible_marker(cs)) return std::nullopt;

  // back substitution, innermost variable first
  Point witness(static_cast<std::size_t>(d), Rational(0));
  for (int var = 1; var <= d; ++var) {
    std::size_t v = static_cast<std::size_t>(var) - 1;
    std::optional<Rational> lower, upper;
    for (const Constraint& c : levels[static_cast<std::size_t>(var)]) {
      if (c.coef[v] == 0) continue;
      Rational rest = c.rhs;
      for (std::size_t k = 0; k < v; ++k) rest -= c.coef[k] * witness[k];
      Rational bound = rest / c.coef[v];
      if (c.coef[v] > 0)
        upper = upper ? std::min(*upper, bound) : bound;
      else
        lower = lower ? std::max(*lower, bound) : bound;
    }
    if (lower && upper) {
      if (*lower > *upper) {
        // empty interval on the innermost variable decides infeasibility;
        // for outer variables it cannot occur once the inner levels pass
        if (var == 1) return std::nullopt;
        throw std::logic_error("elimination produced an empty interval");
      }
      witness[v] = (*lower + *upper) / 2;
    } else if (lower) {
      witness[v] = *lower;
    } else if (upper) {
      witness[v] = *upper;
    }
  }

  for (const ConvexBody& body : bodies)
    if (!body_contains(body, witness))
      throw std::logic_error("elimination witness failed re-validation");
  return witness;
}

Rational box_distance(const Box& a, const Box& b, Metric metric) {
  if (a.dim() != b.dim()) throw std::invalid_argument("box dimension mismatch");
  a.validate();
  b.validate();
  Rational result = 0;
  for (int c = 0; c < a.dim(); ++c) {
    const auto& [alo, ahi] = a.intervals[static_cast<std::size_t>(c)];
    const auto& [blo, bhi] = b.intervals[static_cast<std::size_t>(c)];
    Rational gap = 0;
    if (alo > bhi) gap = alo - bhi;
    if (blo > ahi) gap = blo - ahi;
    if (metric == Metric::Linf)
      result = std::max(result, gap);
    else
      result += gap * gap;
  }
  return result;
}

HellyVerdict helly_check(std::span<const ConvexBody> bodies, int d) {
  if (d < 1) throw std::invalid_argument("helly check needs dimension >= 1");
  for (std::size_t k = 0; k < bodies.size(); ++k) {
    if (body_dim(bodies[k]) != d) throw std::invalid_argument("body dimension mismatch");
    std::vector<ConvexBody> single{bodies[k]};
    if (!feasible(single))
      throw std::invalid_argument("family member " + std::to_string(k) + " is empty");
  }

  std::size_t n = bodies.size();
  std::size_t take = std::min<std::size_t>(n, static_cast<std::size_t>(d) + 1);
  std::vector<std::size_t> pick(take);
  // enumerate index combinations of size take
  for (std::size_t k = 0; k < take; ++k) pick[k] = k;
  while (true) {
    std::vector<ConvexBody> subset;
    for (std::size_t idx : pick) subset.push_back(bodies[idx]);
    if (!feasible(subset)) {
      HellyVerdict verdict{HellyVerdict::Kind::HypothesisViolated, pick, {}};
      return verdict;
    }
    // next combination
    std::size_t k = take;
    while (k > 0 && pick[k - 1] == n - take + (k - 1)) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t j = k; j < take; ++j) pick[j] = pick[j - 1] + 1;
  }

  std::vector<ConvexBody> all(bodies.begin(), bodies.end());
  auto witness = feasible(all);
  if (!witness)
    throw HellyContradiction(
        "every (d+1)-subfamily is feasible but the total intersection is empty");
  for (const ConvexBody& body : bodies)
    if (!body_contains(body, *witness))
      throw std::logic_error("helly witness failed re-validation");
  return {HellyVerdict::Kind::TotalWitness, {}, *witness};
}

SwellingTrace swelling(std::span<const Box> family) {
  if (family.empty()) throw std::invalid_argument("empty family");
  if (family.size() > 12)
    throw std::invalid_argument("swelling is guarded to families of size <= 12");
  int d = family[0].dim();
  for (const Box& box : family) {
    box.validate();
    if (box.dim() != d) throw std::invalid_argument("box dimension mismatch");
  }

  std::size_t k = family.size();
  std::vector<Box> current(family.begin(), family.end());
  SwellingTrace trace;

  for (std::size_t i = 0; i < k; ++i) {
    SwellingStep step;
    step.eps_prime = 1;
    // nonempty sub-intersections of the current family avoiding set i
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      if (mask & (1u << i)) continue;
      std::vector<Box> chosen;
      for (std::size_t j = 0; j < k; ++j)
        if (mask & (1u << j)) chosen.push_back(current[j]);
      auto inter = intersect(chosen);
      if (!inter) continue;
      if (intersect(*inter, family[i])) continue;
      ++step.candidates;
      Rational dist = box_distance(family[i], *inter, Metric::Linf);
      if (!step.min_distance || dist < *step.min_distance) {
        step.min_distance = dist;
        step.determining.clear();
        for (std::size_t j = 0; j < k; ++j)
          if (mask & (1u << j)) step.determining.push_back(j);
      }
    }
    if (step.min_distance) step.eps_prime = std::min(step.eps_prime, *step.min_distance);
    step.eps = step.eps_prime / 2;

    Box inflated = family[i];
    for (auto& [lo, hi] : inflated.intervals) {
      lo -= step.eps;
      hi += step.eps;
    }
    step.inflated = inflated;
    current[i] = std::move(inflated);
    trace.steps.push_back(std::move(step));
  }

  trace.nerve_preserved = true;
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    std::vector<Box> before, after;
    for (std::size_t j = 0; j < k; ++j)
      if (mask & (1u << j)) {
        before.push_back(family[j]);
        after.push_back(current[j]);
      }
    if (intersect(before).has_value() != intersect(after).has_value()) {
      trace.nerve_preserved = false;
      break;
    }
  }
  return trace;
}

Rational random_rational(std::mt19937_64& rng, int lo, int hi, int max_den) {
  std::uniform_int_distribution<int> den_dist(1, max_den);
  int den = den_dist(rng);
  std::uniform_int_distribution<long long> num_dist(static_cast<long long>(lo) * den,
                                                    static_cast<long long>(hi) * den);
  return Rational(num_dist(rng), den);
}

Box random_box(std::mt19937_64& rng, int dim) {
  Box box;
  for (int c = 0; c < dim; ++c) {
    Rational a = random_rational(rng, -8, 8);
    Rational b = random_rational(rng, -8, 8);
    if (b < a) std::swap(a, b);
    box.intervals.emplace_back(std::move(a), std::move(b));
  }
  return box;
}

HPolytope random_hpolytope(std::mt19937_64& rng, int dim, const Point& anchor) {
  if (static_cast<int>(anchor.size()) != dim)
    throw std::invalid_argument("anchor dimension mismatch");
  std::uniform_int_distribution<int> coef_dist(-4, 4);
  std::uniform_int_distribution<int> count_dist(dim + 1, 2 * dim + 2);
  HPolytope poly;
  poly.dimension = dim;
  int rows = count_dist(rng);
  for (int r = 0; r < rows; ++r) {
    Halfspace h;
    bool nonzero = false;
    for (int c = 0; c < dim; ++c) {
      int coef = coef_dist(rng);
      nonzero = nonzero || coef != 0;
      h.normal.push_back(coef);
    }
    if (!nonzero) h.normal[0] = 1;
    Rational at_anchor = 0;
    for (int c = 0; c < dim; ++c)
      at_anchor += h.normal[static_cast<std::size_t>(c)] * anchor[static_cast<std::size_t>(c)];
    h.offset = at_anchor + random_rational(rng, 0, 4);
    poly.halfspaces.push_back(std::move(h));
  }
  return poly;
}

}  // namespace fadlab

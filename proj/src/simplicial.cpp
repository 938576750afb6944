#include "fadlab/simplicial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fadlab {

Vertex make_vertex(int tag, int id) {
  if (tag < 0 || id < 0) throw std::invalid_argument("vertex tag and id must be nonnegative");
  return (static_cast<std::int64_t>(tag) << 32) | static_cast<std::uint32_t>(id);
}

int vertex_tag(Vertex v) { return static_cast<int>(v >> 32); }
int vertex_id(Vertex v) { return static_cast<int>(v & 0xffffffff); }

std::string vertex_str(Vertex v) {
  if (vertex_tag(v) == 0) return std::to_string(vertex_id(v));
  return std::to_string(vertex_tag(v)) + ":" + std::to_string(vertex_id(v));
}

Vertex parse_vertex(const std::string& text) {
  auto colon = text.find(':');
  try {
    if (colon == std::string::npos) return make_vertex(0, std::stoi(text));
    return make_vertex(std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad vertex '" + text + "'");
  }
}

namespace {

Simplex normalized(Simplex s) {
  std::sort(s.begin(), s.end());
  auto last = std::unique(s.begin(), s.end());
  s.erase(last, s.end());
  return s;
}

}  // namespace

void SimplicialComplex::insert_closure(Simplex s) {
  s = normalized(std::move(s));
  if (s.empty()) return;
  // subsets via bit masks; faces here are small
  if (s.size() > 24) throw std::invalid_argument("simplex too large");
  std::uint32_t full = (1u << s.size()) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    Simplex face;
    for (std::size_t b = 0; b < s.size(); ++b)
      if (mask & (1u << b)) face.push_back(s[b]);
    faces_.insert(std::move(face));
  }
}

SimplicialComplex SimplicialComplex::from_maximal(const std::vector<Simplex>& maximal) {
  SimplicialComplex c;
  for (const Simplex& s : maximal) c.insert_closure(s);
  if (c.faces_.empty()) throw std::invalid_argument("complex needs nonempty vertex support");
  return c;
}

SimplicialComplex SimplicialComplex::boundary_of_simplex(int k, int tag) {
  if (k < 1)
    throw std::invalid_argument("boundary of a simplex needs dimension >= 1");
  SimplicialComplex c;
  Simplex all;
  for (int v = 0; v <= k; ++v) all.push_back(make_vertex(tag, v));
  for (int skip = 0; skip <= k; ++skip) {
    Simplex facet;
    for (int v = 0; v <= k; ++v)
      if (v != skip) facet.push_back(all[static_cast<std::size_t>(v)]);
    c.insert_closure(facet);
  }
  return c;
}

SimplicialComplex SimplicialComplex::full_simplex(int k, int tag) {
  if (k < 0) throw std::invalid_argument("simplex dimension must be nonnegative");
  Simplex all;
  for (int v = 0; v <= k; ++v) all.push_back(make_vertex(tag, v));
  return from_maximal({all});
}

std::vector<Vertex> SimplicialComplex::vertices() const {
  std::vector<Vertex> out;
  for (const Simplex& s : faces_)
    if (s.size() == 1) out.push_back(s[0]);
  return out;
}

int SimplicialComplex::dim() const {
  int d = -1;
  for (const Simplex& s : faces_) d = std::max(d, static_cast<int>(s.size()) - 1);
  return d;
}

std::size_t SimplicialComplex::count_of_dim(int q) const {
  std::size_t count = 0;
  for (const Simplex& s : faces_)
    if (static_cast<int>(s.size()) == q + 1) ++count;
  return count;
}

std::vector<Simplex> SimplicialComplex::faces_of_dim(int q) const {
  std::vector<Simplex> out;
  for (const Simplex& s : faces_)
    if (static_cast<int>(s.size()) == q + 1) out.push_back(s);
  return out;
}

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  for (const Simplex& s : faces_) {
    bool maximal = true;
    for (const Simplex& t : faces_) {
      if (t.size() <= s.size() || t == s) continue;
      if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

std::string SimplicialComplex::str() const {
  std::string out;
  for (const Simplex& s : facets()) {
    std::string line;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (k) line += ' ';
      line += vertex_str(s[k]);
    }
    out += line;
    out += '\n';
  }
  return out;
}

SimplicialComplex SimplicialComplex::parse(const std::string& text) {
  std::vector<Simplex> maximal;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    Simplex s;
    std::string token;
    while (fields >> token) {
      if (token[0] == '#') break;
      s.push_back(parse_vertex(token));
    }
    if (!s.empty()) maximal.push_back(std::move(s));
  }
  return from_maximal(maximal);
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  {
    auto va = a.vertices();
    auto vb = b.vertices();
    std::vector<Vertex> overlap;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(),
                          std::back_inserter(overlap));
    if (!overlap.empty())
      throw std::invalid_argument("join requires disjoint vertex sets; retag the factors");
  }
  SimplicialComplex out;
  std::set<Simplex> faces;
  for (const Simplex& fa : a.faces()) faces.insert(fa);
  for (const Simplex& fb : b.faces()) faces.insert(fb);
  for (const Simplex& fa : a.faces())
    for (const Simplex& fb : b.faces()) {
      Simplex u;
      std::merge(fa.begin(), fa.end(), fb.begin(), fb.end(), std::back_inserter(u));
      faces.insert(std::move(u));
    }
  // both inputs are downward closed, so the union family is as well
  SimplicialComplex result;
  for (const Simplex& s : faces) result.insert_closure(s);
  return result;
}

SimplicialComplex join(std::span<const SimplicialComplex> factors) {
  if (factors.empty()) throw std::invalid_argument("join needs at least one factor");
  SimplicialComplex out = factors[0];
  for (std::size_t k = 1; k < factors.size(); ++k) out = join(out, factors[k]);
  return out;
}

SimplicialComplex nerve(int member_count, int tag,
                        const std::function<bool(std::span<const int>)>& intersects) {
  if (member_count < 0) throw std::invalid_argument("nerve needs a nonnegative member count");
  SimplicialComplex c;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < member_count; ++i) {
    if (!intersects(std::span<const int>(&i, 1)))
      throw std::invalid_argument("nerve members must be nonempty (member " +
                                  std::to_string(i) + ")");
    frontier.push_back({i});
    c.insert_closure({make_vertex(tag, i)});
  }
  // grow simplices by their largest index; monotonicity of the tester
  // makes this exhaustive
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& members : frontier)
      for (int j = members.back() + 1; j < member_count; ++j) {
        std::vector<int> extended = members;
        extended.push_back(j);
        if (!intersects(extended)) continue;
        Simplex s;
        for (int m : extended) s.push_back(make_vertex(tag, m));
        c.insert_closure(s);
        next.push_back(std::move(extended));
      }
    frontier = std::move(next);
  }
  return c;
}

}  // namespace fadlab

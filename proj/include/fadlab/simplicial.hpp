#pragma once

/*
 * Finite abstract simplicial complexes with tagged vertices.
 *
 * A vertex packs a tag and an id; tags record the originating family so
 * that joins are strict disjoint unions.  Complexes store every nonempty
 * face (the empty simplex lives only in the augmentation map of the chain
 * complex).  Face sets are kept downward closed by construction.
 */

#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace fadlab {

using Vertex = std::int64_t;
using Simplex = std::vector<Vertex>;  // sorted, distinct

Vertex make_vertex(int tag, int id);
int vertex_tag(Vertex v);
int vertex_id(Vertex v);
std::string vertex_str(Vertex v);  // `id` for tag 0, `tag:id` otherwise
Vertex parse_vertex(const std::string& text);

class SimplicialComplex {
public:
  SimplicialComplex() = default;

  static SimplicialComplex from_maximal(const std::vector<Simplex>& maximal);

  // all proper nonempty subsets of a (k+1)-vertex set; k >= 1
  static SimplicialComplex boundary_of_simplex(int k, int tag = 0);

  // full simplex on k+1 vertices
  static SimplicialComplex full_simplex(int k, int tag = 0);

  void insert_closure(Simplex s);

  const std::set<Simplex>& faces() const { return faces_; }
  std::vector<Vertex> vertices() const;
  int dim() const;  // -1 when empty
  std::size_t count_of_dim(int q) const;
  std::vector<Simplex> faces_of_dim(int q) const;
  std::vector<Simplex> facets() const;
  bool contains(const Simplex& s) const { return faces_.count(s) > 0; }
  bool empty() const { return faces_.empty(); }

  bool operator==(const SimplicialComplex&) const = default;

  std::string str() const;  // one facet per line, space-separated vertices
  static SimplicialComplex parse(const std::string& text);

private:
  std::set<Simplex> faces_;
};

// simplices are unions of one (possibly empty) simplex from each side;
// vertex sets must already be disjoint, which distinct tags guarantee
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex join(std::span<const SimplicialComplex> factors);

// nerve of an abstract set family: member_count members tagged `tag`; the
// tester decides whether the members named by the index list intersect.
// Testers must be monotone (supersets of a disjoint family stay disjoint);
// every single member must be nonempty.
SimplicialComplex nerve(int member_count, int tag,
                        const std::function<bool(std::span<const int>)>& intersects);

}  // namespace fadlab

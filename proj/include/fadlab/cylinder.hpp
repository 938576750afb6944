#pragma once

/*
 * Cylinder set families over a finite product of index sets.
 *
 * Family i constrains only coordinate i of the product, so any selection
 * of members with nonempty per-family intersections has nonempty joint
 * intersection.  This is the combinatorial shadow of commuting isometry
 * families (whose fixed-point sets intersect coordinate-wise), and it is
 * exactly the situation in which the nerve of the union splits as the
 * join of the per-family nerves.
 */

#include <random>
#include <vector>

#include "fadlab/simplicial.hpp"

namespace fadlab {

struct CylinderFamily {
  int coordinate_size = 0;                // coordinate values 0..size-1
  std::vector<std::vector<int>> members;  // each a nonempty sorted subset
};

struct CylinderModel {
  std::vector<CylinderFamily> families;

  // throws on empty members, out-of-range values, or empty families
  void validate() const;
};

// nerve of family i alone, vertices tagged i+1
SimplicialComplex cylinder_nerve_of_family(const CylinderModel& model, int family);

// nerve of the union of all families, same vertex tags
SimplicialComplex cylinder_nerve_of_union(const CylinderModel& model);

// nerve(union) == join of the per-family nerves, as tagged complexes
bool verify_join_nerve(const CylinderModel& model);

CylinderModel random_cylinder_model(std::mt19937_64& rng, int family_count);

}  // namespace fadlab

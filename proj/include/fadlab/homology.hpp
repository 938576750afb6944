#pragma once

/*
 * Reduced simplicial homology over the integers, computed from Smith
 * normal forms of the boundary matrices of the augmented chain complex.
 * Exact arbitrary-precision arithmetic throughout, so torsion is reported
 * faithfully.
 */

#include <string>
#include <vector>

#include "fadlab/automorphisms.hpp"  // BigInt
#include "fadlab/simplicial.hpp"

namespace fadlab {

struct SmithResult {
  int rank = 0;
  std::vector<BigInt> diagonal;  // nonzero entries, divisibility chain
};

// destructive on a copy; rows x cols rectangular
SmithResult smith_normal_form(std::vector<std::vector<BigInt>> m);

struct HomologyProfile {
  // index q in 0..dim: reduced free rank and torsion coefficients
  std::vector<long> free_rank;
  std::vector<std::vector<BigInt>> torsion;

  bool is_zero() const;
  // rank one in the single degree d, zero elsewhere, torsion-free
  bool is_sphere(int d) const;
  long reduced_euler() const;
  std::string str() const;
};

HomologyProfile reduced_homology(const SimplicialComplex& c);

// alternating nonempty-face count, Sum (-1)^q c_q
long euler_characteristic(const SimplicialComplex& c);

}  // namespace fadlab

#pragma once

/*
 * Automorphisms of a free group F_n, given by their basis images.
 *
 * Elements are built from a fixed stock of atomic generators (right and
 * left Nielsen maps, basis transpositions, single-generator sign flips,
 * the full basis cycle) and the group operations.  Products follow the
 * string order: in `compose(a, b)` the map `a` acts first, so
 * apply(compose(a, b), w) == apply(b, apply(a, w)).
 *
 * Each value optionally carries a factorization over atomic names; the
 * factorization is a witness used for inversion and reporting, never an
 * equality criterion.  Equality is equality of all basis images.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fadlab/words.hpp"

namespace fadlab {

using BigInt = boost::multiprecision::cpp_int;

// Named atomic automorphisms.  Text grammar: rho(i,j), lam(i,j), t(i,j),
// e(i), cyc, id.  t(i,i) denotes the identity (degenerate transposition).
struct AtomicName {
  enum class Kind { Rho, Lam, Swap, Flip, Cycle, Id };

  Kind kind = Kind::Id;
  int i = 0;
  int j = 0;

  static AtomicName rho(int i, int j) { return {Kind::Rho, i, j}; }
  static AtomicName lam(int i, int j) { return {Kind::Lam, i, j}; }
  static AtomicName swap(int i, int j) { return {Kind::Swap, i, j}; }
  static AtomicName flip(int i) { return {Kind::Flip, i, 0}; }
  static AtomicName cycle() { return {Kind::Cycle, 0, 0}; }
  static AtomicName id() { return {Kind::Id, 0, 0}; }

  bool operator==(const AtomicName&) const = default;

  void validate(int rank) const;
  std::string str() const;
};

// Formal product of atomic names with exponents +-1, composed left to right.
struct GroupWord {
  std::vector<std::pair<AtomicName, int>> factors;

  GroupWord inverse() const;
  std::string str() const;  // `id` for the empty product
  static GroupWord parse(const std::string& text);

  GroupWord& operator*=(const GroupWord& other);
};

GroupWord operator*(GroupWord a, const GroupWord& b);

class Automorphism {
public:
  static Automorphism identity(int rank);
  static Automorphism atomic(const AtomicName& name, int rank);
  // evaluates the product left to right and records it as factorization
  static Automorphism eval(const GroupWord& word, int rank);
  static Automorphism eval(const std::string& text, int rank);

  int rank() const { return rank_; }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(int i) const { return images_.at(static_cast<std::size_t>(i) - 1); }
  const std::optional<GroupWord>& factorization() const { return fact_; }

  bool is_identity() const;
  bool operator==(const Automorphism& other) const {
    return rank_ == other.rank_ && images_ == other.images_;
  }

  std::string str() const;          // `x1->x1*x2, x2->x2^-1, ...`
  std::string canonical_key() const;

  // same map with the factorization witness dropped; keeps closure
  // enumerations from accumulating ever longer products
  Automorphism without_factorization() const;

private:
  Automorphism(int rank, std::vector<Word> images, std::optional<GroupWord> fact);

  int rank_;
  std::vector<Word> images_;
  std::optional<GroupWord> fact_;

  friend Automorphism compose(const Automorphism&, const Automorphism&);
  friend Automorphism inverse(const Automorphism&);
  friend Automorphism psi_embed(const Automorphism&);
};

// a acts before b
Automorphism compose(const Automorphism& a, const Automorphism& b);

Word apply(const Automorphism& a, const Word& w);

// needs a factorization: reverses it and inverts each atomic factor
Automorphism inverse(const Automorphism& a);

// least m <= cutoff with a^m = id, or nullopt
std::optional<int> order(const Automorphism& a, int cutoff = 64);

// a * b * a^-1 * b^-1 in string order; this is the convention under which
// [rho_ij, rho_jk] = rho_ik holds (see the convention tests)
Automorphism commutator(const Automorphism& a, const Automorphism& b);

// g^-1 * a * g in string order; conjugating e_i by a basis permutation
// sigma yields e_{sigma(i)} under this arrangement
Automorphism conjugate(const Automorphism& a, const Automorphism& g);

bool commutes(const Automorphism& a, const Automorphism& b);

// Square integer matrix, row-major; row i holds the exponent sums of the
// image of x_{i+1}.
struct IntMatrix {
  int n = 0;
  std::vector<BigInt> a;

  static IntMatrix identity(int n);
  BigInt& at(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
  const BigInt& at(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }
  bool operator==(const IntMatrix&) const = default;
};

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y);

// exponent-sum matrix; multiplicative with respect to compose
IntMatrix abelianization(const Automorphism& a);

// exact determinant by fraction-free (Bareiss) elimination
BigInt determinant(const IntMatrix& m);

// +1 or -1; throws if the abelianized determinant is not a unit
int determinant_sign(const Automorphism& a);

struct SignedPerm {
  std::vector<int> target;  // target[i-1] = j when x_i maps to x_j^{sign}
  std::vector<int> sign;    // sign[i-1] in {+1, -1}
};

// nonempty iff every basis image is a single letter and the index map is
// a bijection
std::optional<SignedPerm> as_signed_permutation(const Automorphism& a);

Automorphism signed_perm_to_automorphism(const SignedPerm& sp, int rank);

// extends f on F_{n-1} to F_n by x_n -> x_n^{det f}; lands in the
// determinant-one subgroup
Automorphism psi_embed(const Automorphism& f);

}  // namespace fadlab

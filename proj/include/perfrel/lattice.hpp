#pragma once

// Lattices as exact rational Gram matrices, with certified short-vector
// enumeration. All bounds in the enumeration are exact (integer square
// roots on cleared-denominator quantities); no floating point anywhere.

#include "perfrel/exactla.hpp"
#include "perfrel/matrix.hpp"
#include "perfrel/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace perfrel {

class Lattice {
 public:
  // Checks symmetry and positive definiteness; throws MathError otherwise.
  explicit Lattice(RatMat gram, std::string label = "");

  int dim() const { return n_; }
  const RatMat& gram() const { return gram_; }
  const std::string& label() const { return label_; }

  Rat inner(const IntVec& x, const IntVec& y) const;
  Rat inner(const RatVec& x, const RatVec& y) const;
  Rat norm(const IntVec& x) const { return inner(x, x); }
  Rat norm(const RatVec& x) const { return inner(x, x); }

  // Gram divided by a positive rational (used to normalize the minimum).
  Lattice rescaled(const Rat& divisor) const;

 private:
  int n_;
  RatMat gram_;
  std::string label_;
};

struct MinimalVectorSet {
  Rat min;                      // the lattice minimum
  std::vector<IntVec> vectors;  // one per +/- pair, canonical sign, sorted
  int count() const { return static_cast<int>(vectors.size()); }
  bool contains(const IntVec& x) const;
};

// All nonzero vectors with norm <= bound, one per +/- pair (first nonzero
// coordinate positive), sorted; each with its exact norm. Empty when the
// bound is below the minimum.
std::vector<std::pair<IntVec, Rat>> enumerate_up_to(const Lattice& l,
                                                    const Rat& bound);

// Complete certified set of minimal vectors.
MinimalVectorSet minimal_vectors(const Lattice& l);

// Components of x in the basis given by the columns of B (equivalently the
// scalar products x . b_i^* against the dual basis). Throws on singular B.
RatVec components_in_basis(const RatMat& basis_cols, const RatVec& x);
RatVec components_in_basis(const RatMat& basis_cols, const IntVec& x);

// rank of the minimal-vector coordinate matrix equals the dimension
bool is_well_rounded(const Lattice& l);

// Gram V^T G V of the sublattice spanned by the independent columns V.
Lattice sublattice_gram(const Lattice& l, const std::vector<IntVec>& v);

// Lattice generated by l's basis together with extra rational-coordinate
// vectors ("glue"). `basis_cols` expresses the new basis in old coordinates.
struct AdjoinResult {
  Lattice lattice;
  RatMat basis_cols;
};
AdjoinResult adjoin_glue(const Lattice& l, const std::vector<RatVec>& glue);

// Integer coordinates of x (given in the same ambient coordinates as
// basis_cols) with respect to that basis; throws if x is not in the span
// or the coordinates are not integral.
IntVec lattice_coords(const RatMat& basis_cols, const RatVec& x);

}  // namespace perfrel

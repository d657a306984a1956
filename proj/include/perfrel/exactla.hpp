#pragma once

// Exact rational/integer linear algebra: fraction-free rank and determinant,
// canonical nullspace bases, Smith and Hermite normal forms, linear solves,
// and exact inertia of symmetric matrices. Everything downstream sits on top
// of this header.

#include "perfrel/matrix.hpp"
#include "perfrel/rational.hpp"

#include <array>
#include <optional>
#include <vector>

namespace perfrel {

// Rank over Q, by fraction-free (Bareiss) elimination on a denominator-
// cleared copy. Deterministic: first nonzero pivot in column order.
int rank_exact(const RatMat& m);
int rank_exact(const IntMat& m);

// Determinant of a square matrix, fraction-free for the integer case.
Int det_bareiss(const IntMat& m);
Rat det_exact(const RatMat& m);

// Basis of the right kernel { x : M x = 0 }. Each basis vector is scaled to
// a primitive integer vector with positive first nonzero entry; the list is
// sorted lexicographically. Size is always cols - rank.
std::vector<IntVec> nullspace_basis(const RatMat& m);

// Solve A x = b for square nonsingular A; throws MathError if singular.
RatVec solve_linear(const RatMat& a, const RatVec& b);

// Inverse of a square nonsingular matrix.
RatMat inverse(const RatMat& a);

// Smith normal form U*A*V = D with unimodular U, V. `factors` holds the full
// diagonal of D: nonnegative, d_i | d_{i+1}, zeros (if any) at the end.
struct SmithResult {
  IntMat u, v;            // unimodular transforms
  std::vector<Int> factors;
};
SmithResult smith_normal_form(const IntMat& a);

// Basis of the column lattice of A (integer column span), as the columns of
// a lower-triangular-ish n x r matrix (column-style Hermite reduction).
IntMat hermite_column_basis(const IntMat& a);

// Inertia (n+, n-, n0) of a symmetric rational matrix, by exact congruence
// reduction (Sylvester's law makes the result basis-independent).
std::array<int, 3> inertia(const RatMat& s);

// LDL^T factorization of a symmetric matrix: G = L D L^T with L unit lower
// triangular. Fails (returns nullopt) on a zero pivot; all D entries positive
// iff G is positive definite.
struct LdlResult {
  RatMat l;
  RatVec d;
  bool positive_definite;
};
std::optional<LdlResult> ldl_decompose(const RatMat& g);

}  // namespace perfrel

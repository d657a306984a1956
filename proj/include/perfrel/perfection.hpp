#pragma once

// Perfection ranks, the space of perfection relations, two-sided splitting,
// the duality identities between the two bases of a relation, and the
// perf-irreducibility decomposition.
//
// Projections are represented Gram-free as X*X^T: for a minimal vector with
// coordinate column X, the matrix of N(x) p_x with respect to (B^*, B) is
// X*X^T, so relations among equal-norm lines are linear dependencies of the
// vectorized rank-1 matrices, independent of the Gram matrix.

#include "perfrel/grampoly.hpp"
#include "perfrel/lattice.hpp"

#include <array>
#include <string>
#include <vector>

namespace perfrel {

// A line R*x, stored as a primitive integer column with canonical sign
// (first nonzero coordinate positive).
struct ProjectionLine {
  IntVec coords;

  explicit ProjectionLine(const IntVec& x);
  explicit ProjectionLine(const RatVec& x);

  int dim() const { return static_cast<int>(coords.size()); }
  bool operator==(const ProjectionLine& o) const { return coords == o.coords; }
  auto operator<=>(const ProjectionLine& o) const { return coords <=> o.coords; }
};

using Lines = std::vector<ProjectionLine>;

Lines lines_of(const std::vector<IntVec>& vectors);
Lines lines_of(const MinimalVectorSet& s);

// Fixed vectorization convention for symmetric matrices: the length
// n(n+1)/2 row (S_11, ..., S_nn, S_12, S_13, ..., S_{n-1,n}), off-diagonal
// entries taken once, unscaled. Rank and kernel do not depend on this
// choice.
IntVec vectorize_rank_one(const IntVec& x);

struct PerfectionProfile {
  int n = 0;
  int s = 0;             // number of lines
  int r = 0;             // perfection rank
  int relation_dim = 0;  // s - r
  int cell_dim = 0;      // n(n+1)/2 - r
  bool perfect() const { return r == n * (n + 1) / 2; }
};

PerfectionProfile perfection_rank(const Lines& lines);

// An exact linear dependence sum_L c_L X_L X_L^T = 0 with nonzero
// coefficients, normalized to primitive integers with positive first entry.
class PerfectionRelation {
 public:
  PerfectionRelation(Lines lines, std::vector<Rat> coefficients);

  const Lines& lines() const { return lines_; }
  const std::vector<Rat>& coefficients() const { return coeffs_; }
  int dim() const { return lines_.empty() ? 0 : lines_[0].dim(); }

 private:
  Lines lines_;
  std::vector<Rat> coeffs_;
};

// Canonical basis of the space of perfection relations on the given lines;
// size is always s - r.
std::vector<PerfectionRelation> relation_space(const Lines& lines);

// Membership of a relation in the span of a relation basis.
bool contains_relation(const std::vector<PerfectionRelation>& basis,
                       const PerfectionRelation& rel);

struct SplitRelation {
  Lines left;
  std::vector<Rat> left_coeffs;  // strictly positive
  Lines right;
  std::vector<Rat> right_coeffs;  // strictly positive
};

// Split into the positive-coefficient and negated-negative-coefficient
// sides. Checks the span equality of the two sides (they always span the
// same subspace); throws MathError if either side is empty. The raw
// overload respects the given signs (negating all coefficients swaps the
// sides); the PerfectionRelation overload acts on the normalized
// coefficients.
SplitRelation split_two_sided(const Lines& lines, const std::vector<Rat>& coefficients);
SplitRelation split_two_sided(const PerfectionRelation& rel);

// Two independent systems of n minimal vectors with strictly positive
// weights and sum lambda_i X_i X_i^T = sum lambda'_j X'_j X'_j^T, inside an
// ambient lattice. All invariants are verified at construction.
class TwoBasisRelation {
 public:
  TwoBasisRelation(Lattice ambient, Lines e, std::vector<Rat> lambda,
                   Lines e_prime, std::vector<Rat> lambda_prime);

  int n() const { return ambient_.dim(); }
  const Lattice& ambient() const { return ambient_; }
  const Lines& e() const { return e_; }
  const Lines& e_prime() const { return ep_; }
  const std::vector<Rat>& lambda() const { return lambda_; }
  const std::vector<Rat>& lambda_prime() const { return lambdap_; }

  // comp_e_on_ep()(k, j) = k-th component of e_j in the basis e', i.e. the
  // scalar product e_j . e'_k^*; comp_ep_on_e()(j, k) = e'_k . e_j^*.
  const RatMat& comp_e_on_ep() const { return e_on_ep_; }
  const RatMat& comp_ep_on_e() const { return ep_on_e_; }

  // norms of the stored vectors in the ambient lattice (all equal to the
  // minimum here; kept so weights against X X^T / N(x) can be recovered)
  std::vector<Rat> e_norms() const;
  std::vector<Rat> e_prime_norms() const;

  PerfectionRelation as_relation() const;
  TwoBasisRelation swapped() const;  // exchange the two systems

 private:
  Lattice ambient_;
  Lines e_, ep_;
  std::vector<Rat> lambda_, lambdap_;
  RatMat e_on_ep_, ep_on_e_;
};

// Inertia of x -> sum_i c_i (e_i . x)^2 for an independent system of n
// lines, computed exactly; equals the coefficient sign counts.
std::array<int, 3> inertia_signature(const Lines& lines,
                                     const std::vector<Rat>& coefficients,
                                     const RatMat& gram);

// A_i = 1 - sum_k (e_i . e'_k^*)^2 and A'_i = 1 - sum_j (e'_i . e_j^*)^2
// for the relation normalized to minimum 1. Checks sum lambda = sum lambda'
// and sum lambda_i A_i = sum lambda'_i A'_i = 0 exactly.
struct ACoefficients {
  std::vector<Rat> a;        // A_1..A_n
  std::vector<Rat> a_prime;  // A'_1..A'_n
};
ACoefficients a_coefficients(const TwoBasisRelation& rel);

// Per-identity verification report for the duality identities connecting
// the two systems: the cross-symmetry lambda_j (e_j . e'_k^*) =
// lambda'_k (e'_k . e_j^*), the sign agreement, the two sum-to-1
// identities, and the balance identity with its existence consequence for
// every admissible pair.
struct DualityReport {
  int checks_run = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
DualityReport duality_report(const TwoBasisRelation& rel);

// Finest simultaneous partition (I_k, J_k) such that each e'_j, j in J_k,
// lies in the span of { e_i : i in I_k }; connected components of the
// bipartite support graph. A single block means perf-irreducible.
struct PerfBlock {
  std::vector<int> i_set;  // indices into e
  std::vector<int> j_set;  // indices into e'
};
std::vector<PerfBlock> decompose_perf_irreducible(const TwoBasisRelation& rel);
bool is_perf_irreducible(const TwoBasisRelation& rel);

// Minimality transfer: when sum lambda = sum lambda', the lambda' are
// strictly positive, the left vectors are minimal and the weighted norm
// sums agree, the right vectors must be minimal too. Checks the hypothesis
// chain and the conclusion independently and returns their conjunction.
// Throws MathError on an empty right side.
bool verify_vmin(const std::vector<Rat>& lambda, const std::vector<Rat>& left_norms,
                 const std::vector<Rat>& lambda_prime,
                 const std::vector<Rat>& right_norms, const Rat& min);

}  // namespace perfrel

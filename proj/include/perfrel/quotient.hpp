#pragma once

// Quotient structure of a lattice over a full-rank sublattice generated by
// minimal vectors: invariant factors, glue generators, the induced code
// over Z/dZ, regularity of two-basis relations, order statistics of the
// second basis, and the classification matcher.

#include "perfrel/perfection.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace perfrel {

struct QuotientStructure {
  Int index = 1;                    // [Lambda : Lambda_0]
  std::vector<Int> invariant_factors;  // nontrivial only (> 1), divisibility chain
  Int annihilator = 1;              // largest factor (1 for trivial quotient)
  std::vector<RatVec> glue_generators;  // coords in the sub-basis, in [0, 1)
  std::vector<Int> generator_orders;    // order of each glue generator
};

// Quotient of Z^n (the ambient lattice in its own basis) by the sublattice
// spanned by the given integer coordinate columns. Throws on rank
// deficiency.
QuotientStructure quotient_structure(int n, const std::vector<IntVec>& sub_vectors);

// Quotient of the relation's ambient lattice over the span of one side.
QuotientStructure quotient_over_side(const TwoBasisRelation& rel, bool prime_side);

struct Code {
  int length = 0;
  Int modulus = 1;
  std::vector<IntVec> generators;  // words over Z/dZ, entries in [0, d)

  // every codeword (the subgroup generated), sorted
  std::vector<IntVec> all_words() const;
};

// Code of the quotient over Z/dZ, d = annihilator: word = d * glue mod d.
Code extract_code(const QuotientStructure& q);

// Monomial equivalence witness: word w maps to w' with
// w'[perm[i]] = units[i] * w[i] mod d.
struct CodeEquivalence {
  std::vector<int> perm;
  std::vector<Int> units;
};

// Exhaustive backtracking search with per-coordinate invariant pruning;
// practical for the lengths (<= 10) that occur here.
std::optional<CodeEquivalence> find_monomial_equivalence(const Code& a, const Code& b);

struct RegularityVerdict {
  enum class Kind { regular, irregular, undecided };
  Kind kind = Kind::undecided;
  std::string witness;
  std::optional<CodeEquivalence> equivalence;
};

// Regular iff both annihilators agree and the two quotient codes are
// monomially equivalent.
RegularityVerdict classify_regularity(const TwoBasisRelation& rel);

// alpha_n: maximal annihilator of Lambda/Lambda' over well-rounded
// n-dimensional lattices with the same minimum; 1,1,1,2,2,3,4,6 for n=1..8.
int alpha_n(int n);

struct NuStatistics {
  std::map<Int, int> nu;   // nu[d] = number of e'_j of order d in Lambda/Lambda_0
  Int lhs = 0;             // nu_1
  Int rhs = 0;             // sum_{d>=3} (d-2) nu_d
  bool inequality_holds = false;
  bool equality = false;
  bool sharpness_ok = true;  // |e'_j . e_i^*| = 1/d on supports, when equality
};
NuStatistics nu_statistics(const TwoBasisRelation& rel);

// Label the relation by discrete invariants (dimension, index, factor type,
// order statistics, weight multiset). Never claims an isometry; anything
// not matching a classified case gets "outside classified scope".
std::string match_classification(const TwoBasisRelation& rel);

}  // namespace perfrel

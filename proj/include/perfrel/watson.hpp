#pragma once

// Watson's identity and condition, and the constructors for Watson-type and
// Zahareva-type perfection relations built from a glue vector
// f = (sum a_i f_i)/d over independent minimal vectors.

#include "perfrel/perfection.hpp"
#include "perfrel/quotient.hpp"

#include <optional>
#include <string>
#include <vector>

namespace perfrel {

class WatsonDatum {
 public:
  // Signs are normalized eagerly: f_i with a_i < 0 is negated so that all
  // coefficients are positive. Requires d > 1, nonzero a_i, independent
  // minimal f_i, and f = (sum a_i f_i)/d in the lattice.
  WatsonDatum(Lattice ambient, std::vector<IntVec> f, std::vector<Int> a, Int d);

  const Lattice& ambient() const { return ambient_; }
  const std::vector<IntVec>& basis() const { return f_; }
  const std::vector<Int>& coefficients() const { return a_; }
  const Int& denominator() const { return d_; }
  const IntVec& glue() const { return glue_; }  // coords of f in the ambient basis
  int ell() const { return static_cast<int>(f_.size()); }

  Int coefficient_sum() const;                 // A = sum |a_i|
  std::vector<int> multiplicities() const;     // m_1..m_{floor(d/2)}

 private:
  Lattice ambient_;
  std::vector<IntVec> f_;
  std::vector<Int> a_;
  Int d_;
  IntVec glue_;
};

struct WatsonDefect {
  Int defect = 0;            // A - 2d
  std::vector<Rat> gaps;     // N(f - f_i) - N(f_i), after sign normalization
  bool identity_ok = false;  // (A - 2d) N(f) = sum a_i * gap_i, re-checked numerically
  std::vector<std::string> hypothesis_violations;
};

// Defect and per-index norm gaps. A negative defect or a non-minimal f_i is
// reported as a hypothesis violation rather than an error.
WatsonDefect watson_defect(const WatsonDatum& w);

struct WatsonConditionReport {
  bool all_at_most_half_d = false;
  bool at_most_one_at_half_d = false;  // only binding for d >= 4
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// For a zero-defect datum: |a_i| <= d/2 for all i, and for d >= 4 equality
// for at most one index.
WatsonConditionReport watson_condition_checks(const WatsonDatum& w);

struct WatsonRelationResult {
  PerfectionRelation relation;
  std::optional<TwoBasisRelation> two_basis;  // present when ell = n
  std::vector<IntVec> right_vectors;          // the f - f_i, ambient coords
};

// The canonical relation sum a_i p_{f_i} = sum a_i p_{f - f_i} attached to a
// zero-defect datum. The right-side vectors are certified minimal by
// enumeration; throws MathError on nonzero defect.
WatsonRelationResult watson_relation(const WatsonDatum& w);

// The d = 5 relation sum p_{f_i} = sum p_{f'_i} with f' = 2f - sum_{i>m1} f_i,
// requiring ell = 8 and multiplicities (m1, m2) = (4, 4). The assignment of
// each f'_i to f - f_i versus f' - f_i is the one under which
// sum (N(f'_i) - N(f_i)) = (m2-4) N(f) + (m1-4) N(f') verifies as a formal
// identity; both candidate assignments are tried symbolically. A d = 7
// datum raises NotImplementedError (reserved).
WatsonRelationResult zahareva_relation(const WatsonDatum& w);

// Formal check of the identity (sum |a_i| - 2d) N(f) =
// sum |a_i| (N(f - sgn(a_i) f_i) - N(f_i)) with f = (sum a_i f_i)/d over
// symbolic independent f_i; d and the a_i may be arbitrary rationals.
bool watson_formal_identity(const Rat& d, const std::vector<Rat>& a);

// Formal check of the d = 5 identity above for general multiplicities
// (m1, m2); returns the coefficient pair ((m2-4), (m1-4)) it verified
// against, or nullopt if the identity fails for both assignments.
struct ZaharevaFormalCheck {
  bool holds = false;
  bool swapped_assignment = false;  // true if f'_i = f - f_i for i <= m1
};
ZaharevaFormalCheck zahareva_formal_identity(int m1, int m2);

// Dispatcher for the index-d formal identities beyond Watson's: d = 5 is
// the Zahareva case; the d = 7 analogue is reserved and raises
// NotImplementedError; other d raise MathError.
ZaharevaFormalCheck index_family_formal_identity(const Int& d, int m1, int m2);

struct LengthConditionReport {
  // witness[j] = index (into the nonzero coset representatives) of a class
  // whose j-th component on the e-basis is non-integral; -1 if none exists
  std::vector<int> witness;
  bool all_witnessed = false;
  // For cyclic quotients: all components of the generator are non-integral.
  bool cyclic = false;
  bool cyclic_all_nonzero = false;
};

// Coset representatives of Lambda/Lambda_0 must have, for every coordinate
// j, some representative with non-integral j-th component.
LengthConditionReport length_condition(const TwoBasisRelation& rel);

}  // namespace perfrel

#pragma once

// Constructors for the named lattices and relations: root lattices and
// their orthogonal-frame relations, the irregular relation on E8, the
// Watson-ansatz realizations in dimensions 6-8, and the index-5 Zahareva
// configuration. Every entry re-verifies its expected invariants at load.

#include "perfrel/perfection.hpp"
#include "perfrel/quotient.hpp"
#include "perfrel/watson.hpp"

#include <optional>
#include <string>
#include <vector>

namespace perfrel {

// Standard integral Gram at minimum 2 (minimum 1 for Zn); E6dual is the
// rational inverse Gram of E6, not rescaled to integers.
Lattice root_lattice(const std::string& name, int n = 0);

// n mutually orthogonal minimal vectors, in the lattice's own basis
// coordinates. Defined for Dn (even n >= 4), E7, E8; throws MathError
// ("no frame exists") otherwise.
std::vector<IntVec> orthogonal_frame(const std::string& name, int n = 0);

// First orthogonal frame of minimal vectors in canonical enumeration order,
// avoiding the given lines; nullopt if none exists.
std::optional<std::vector<IntVec>> find_orthogonal_frame(
    const Lattice& l, const std::vector<IntVec>& forbidden = {});

// The regular relation between a frame and a disjoint second frame
// (for Dn and E8, the image under the coordinate permutation
// (2,3)(4,5)...(n-2,n-1); for E7, a search-found disjoint frame).
TwoBasisRelation frame_relation(const std::string& name, int n = 0);

// The irregular two-basis relation on E8 with weights (1,3,1,3,1,3,1,3)
// against 2*(1,...,1), built from an orthogonal frame and tetrad glue.
TwoBasisRelation irregular_e8_relation();

struct WatsonAnsatz {
  Lattice lattice;     // the glue-extended lattice, certified minimum 1
  WatsonDatum datum;   // f_i = images of the ansatz basis, glue (sum a_i f_i)/d
};

// Symmetric-ansatz realization of a Watson-equality configuration: unknown
// inner products constant on coefficient classes, solved from e.e_i = 1/2
// per class. Requires sum a_i = 2d; the minimum is certified to be 1 by
// enumeration, and failure to solve or certify throws MathError.
WatsonAnsatz watson_ansatz_lattice(const Int& d, const std::vector<Int>& a);

// Fixed-point realization of the d = 5, (m1, m2) = (4, 4) configuration:
// two orthogonal blocks with inner product 1/4 glued by
// (f1+f2+f3+f4+2(f5+f6+f7+f8))/5; minimum 1 certified by enumeration.
WatsonAnsatz zahareva_ansatz_lattice();

struct Example61 {
  Lattice lattice;
  TwoBasisRelation relation;
  IntVec f_line;  // the auxiliary half-sum f, in lattice coordinates
};

// Dimension-7 configuration over 2*I_7 with glue
// (e1+e2+e3+e4+2e5+2e6+2e7)/4: the fourteen lines have perfection rank 13,
// and adding f keeps it 13.
Example61 example_6_1();

struct CatalogEntry {
  std::string name;
  std::string description;
  Lattice lattice;
  std::optional<TwoBasisRelation> relation;
  MinimalVectorSet minvec;      // computed at load
  PerfectionProfile profile;    // over all minimal lines

  // expectations, re-verified at load
  int expected_s = 0;
  int expected_r = 0;
  int expected_relation_dim = 0;
  std::optional<Int> expected_index;
  std::vector<Int> expected_factors;
  std::optional<Int> expected_index_prime;
  std::vector<Int> expected_factors_prime;
  std::optional<std::string> expected_label;
};

// Load and fully re-verify a catalog entry; throws MathError naming the
// first failed invariant. Unknown names throw MathError.
CatalogEntry load_entry(const std::string& name);

std::vector<std::string> catalog_names();

}  // namespace perfrel

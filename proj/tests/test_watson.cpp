#include "doctest.h"

#include "perfrel/catalog.hpp"
#include "perfrel/watson.hpp"

using namespace perfrel;

TEST_CASE("watson_defect on the catalog data") {
  // dimension-6 index-3: defect 0, all gaps 0
  const WatsonAnsatz wa = watson_ansatz_lattice(3, std::vector<Int>(6, Int(1)));
  const WatsonDefect d = watson_defect(wa.datum);
  CHECK(d.defect == 0);
  for (const Rat& g : d.gaps) CHECK(g == 0);
  CHECK(d.identity_ok);
  CHECK(d.hypothesis_violations.empty());

  // Example 6.2 data: A = 8 = 2d
  std::vector<Int> a62(7, Int(1));
  a62[6] = 2;
  const WatsonAnsatz wa62 = watson_ansatz_lattice(4, a62);
  CHECK(wa62.datum.coefficient_sum() == 8);
  const WatsonDefect d62 = watson_defect(wa62.datum);
  CHECK(d62.defect == 0);
  CHECK(d62.identity_ok);
}

TEST_CASE("negative defect is reported as a hypothesis violation") {
  // Z3 extended by (e1+e2+e3)/2: a = (1,1,1), d = 2, A - 2d = -1; the glue
  // vector is shorter than the basis vectors, so they are not minimal
  const Lattice z3(RatMat::identity(3));
  const AdjoinResult adj =
      adjoin_glue(z3, {{Rat(1, 2), Rat(1, 2), Rat(1, 2)}});
  std::vector<IntVec> f(3);
  for (int i = 0; i < 3; ++i) {
    RatVec unit(3, Rat(0));
    unit[i] = 1;
    f[i] = lattice_coords(adj.basis_cols, unit);
  }
  const WatsonDatum datum(adj.lattice, f, std::vector<Int>(3, Int(1)), 2);
  const WatsonDefect d = watson_defect(datum);
  CHECK(d.defect == -1);
  CHECK(!d.hypothesis_violations.empty());
}

TEST_CASE("watson_condition_checks") {
  std::vector<Int> a62(7, Int(1));
  a62[6] = 2;
  const WatsonAnsatz wa62 = watson_ansatz_lattice(4, a62);
  const WatsonConditionReport r62 = watson_condition_checks(wa62.datum);
  CHECK(r62.ok());  // one coefficient equals d/2 = 2

  const WatsonAnsatz wa63 = watson_ansatz_lattice(4, std::vector<Int>(8, Int(1)));
  const WatsonConditionReport r63 = watson_condition_checks(wa63.datum);
  CHECK(r63.ok());  // no coefficient at d/2

  // synthetic (2,2,1,1,1,1) with d = 4 fails the at-most-one clause;
  // build the datum on a plain lattice where the glue happens to land inside
  const Lattice z6(RatMat::identity(6));
  const AdjoinResult adj = adjoin_glue(
      z6, {{Rat(1, 2), Rat(1, 2), Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)}});
  std::vector<IntVec> f(6);
  for (int i = 0; i < 6; ++i) {
    RatVec unit(6, Rat(0));
    unit[i] = 1;
    f[i] = lattice_coords(adj.basis_cols, unit);
  }
  const WatsonDatum datum(adj.lattice, f, {2, 2, 1, 1, 1, 1}, 4);
  const WatsonConditionReport bad = watson_condition_checks(datum);
  CHECK(!bad.at_most_one_at_half_d);
  CHECK(!bad.ok());
}

TEST_CASE("watson_relation instances") {
  // dimension-6 index-3: sum p_{e_i} = sum p_{e - e_i}
  const WatsonAnsatz wa = watson_ansatz_lattice(3, std::vector<Int>(6, Int(1)));
  const WatsonRelationResult r = watson_relation(wa.datum);
  REQUIRE(r.two_basis.has_value());
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < 6; ++k)
      CHECK(r.right_vectors[i][k] == wa.datum.glue()[k] - wa.datum.basis()[i][k]);

  // Example 6.2: weights (1,1,1,1,1,1,2) on both sides
  std::vector<Int> a62(7, Int(1));
  a62[6] = 2;
  const WatsonRelationResult r62 = watson_relation(watson_ansatz_lattice(4, a62).datum);
  REQUIRE(r62.two_basis.has_value());
  std::vector<Rat> w = r62.two_basis->lambda();
  std::sort(w.begin(), w.end());
  CHECK(w == std::vector<Rat>{1, 1, 1, 1, 1, 1, 2});
  CHECK(r62.two_basis->lambda() == r62.two_basis->lambda_prime());
}

TEST_CASE("zahareva_relation") {
  const WatsonAnsatz wa = zahareva_ansatz_lattice();
  const WatsonRelationResult r = zahareva_relation(wa.datum);
  REQUIRE(r.two_basis.has_value());
  // unit weights on both sides
  for (const Rat& c : r.two_basis->lambda()) CHECK(c == 1);
  for (const Rat& c : r.two_basis->lambda_prime()) CHECK(c == 1);

  // wrong multiplicities are rejected
  CHECK_THROWS_AS(
      zahareva_relation(watson_ansatz_lattice(3, std::vector<Int>(6, Int(1))).datum),
      MathError);
}

TEST_CASE("d7 analogue is reserved") {
  CHECK_THROWS_AS(index_family_formal_identity(Int(7), 3, 3), NotImplementedError);
  CHECK_THROWS_AS(index_family_formal_identity(Int(6), 3, 3), MathError);
  CHECK(index_family_formal_identity(Int(5), 4, 4).holds);
}

TEST_CASE("length_condition on catalog relations") {
  const CatalogEntry w = load_entry("thm5.1");
  const LengthConditionReport rep = length_condition(*w.relation);
  CHECK(rep.all_witnessed);
  CHECK(rep.cyclic);
  CHECK(rep.cyclic_all_nonzero);

  const CatalogEntry e63 = load_entry("ex6.3");
  const LengthConditionReport rep63 = length_condition(*e63.relation);
  CHECK(rep63.all_witnessed);
  CHECK(rep63.cyclic);
  CHECK(rep63.cyclic_all_nonzero);
}

TEST_CASE("watson ansatz Gram matrices match the solved values") {
  // d = 3, unit coefficients: off-diagonal 1/10 before glue
  const WatsonAnsatz w3 = watson_ansatz_lattice(3, std::vector<Int>(6, Int(1)));
  const Lattice base3 = sublattice_gram(w3.lattice, w3.datum.basis());
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      CHECK(base3.gram()(i, j) == (i == j ? Rat(1) : Rat(1, 10)));

  // d = 4, unit coefficients: off-diagonal 1/7
  const WatsonAnsatz w4 = watson_ansatz_lattice(4, std::vector<Int>(8, Int(1)));
  const Lattice base4 = sublattice_gram(w4.lattice, w4.datum.basis());
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      CHECK(base4.gram()(i, j) == (i == j ? Rat(1) : Rat(1, 7)));

  // Example 6.2: 1/5 within the unit block, 0 against the coefficient-2 vector
  std::vector<Int> a62(7, Int(1));
  a62[6] = 2;
  const WatsonAnsatz w62 = watson_ansatz_lattice(4, a62);
  const Lattice base62 = sublattice_gram(w62.lattice, w62.datum.basis());
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      if (i == j)
        CHECK(base62.gram()(i, j) == 1);
      else if (i == 6 || j == 6)
        CHECK(base62.gram()(i, j) == 0);
      else
        CHECK(base62.gram()(i, j) == Rat(1, 5));
    }
}

TEST_CASE("underdetermined ansatz is rejected") {
  // (m1, m2) = (6, 2) with d = 5: both classes have >= 2 members, so the
  // symmetric system has three unknowns and two equations
  std::vector<Int> a(8, Int(1));
  a[6] = 2;
  a[7] = 2;
  CHECK_THROWS_AS(watson_ansatz_lattice(5, a), MathError);
}

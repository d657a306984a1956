#include "doctest.h"

#include <random>

#include "perfrel/catalog.hpp"
#include "perfrel/perfection.hpp"
#include "oracles.hpp"

using namespace perfrel;

namespace {

Lines unit_lines(int n) {
  Lines out;
  for (int i = 0; i < n; ++i) {
    IntVec v(n, Int(0));
    v[i] = 1;
    out.emplace_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("projection lines normalize to primitive canonical sign") {
  CHECK(ProjectionLine(IntVec{-2, 4}).coords == IntVec{1, -2});
  CHECK(ProjectionLine(RatVec{Rat(1, 2), Rat(-1, 2)}).coords == IntVec{1, -1});
  CHECK_THROWS_AS(ProjectionLine(IntVec{0, 0}), MathError);
}

TEST_CASE("perfection rank of unit lines is n") {
  for (int n : {2, 3, 5}) {
    const PerfectionProfile p = perfection_rank(unit_lines(n));
    CHECK(p.r == n);
    CHECK(p.s == n);
    CHECK(p.relation_dim == 0);
    CHECK(p.cell_dim == n * (n + 1) / 2 - n);
    CHECK(!p.perfect());
  }
}

TEST_CASE("relation space of Zn lines is empty") {
  CHECK(relation_space(unit_lines(4)).empty());
}

TEST_CASE("two orthogonal frames in D4 give a one-dimensional space") {
  const TwoBasisRelation rel = frame_relation("Dn", 4);
  Lines all = rel.e();
  all.insert(all.end(), rel.e_prime().begin(), rel.e_prime().end());
  const auto space = relation_space(all);
  REQUIRE(space.size() == 1);
  // the basis relation is (up to sign and scale) sum p_e - sum p_e'
  const PerfectionRelation expected = rel.as_relation();
  CHECK(contains_relation(space, expected));
}

TEST_CASE("PerfectionRelation validates and normalizes") {
  const TwoBasisRelation rel = frame_relation("Dn", 4);
  // tampered coefficients must be rejected
  Lines all = rel.e();
  all.insert(all.end(), rel.e_prime().begin(), rel.e_prime().end());
  std::vector<Rat> bad(8, Rat(1));
  CHECK_THROWS_AS(PerfectionRelation(all, bad), MathError);

  // scaling invariance of the normalized coefficients
  std::vector<Rat> coeffs;
  for (int i = 0; i < 4; ++i) coeffs.push_back(Rat(1, 3));
  for (int i = 0; i < 4; ++i) coeffs.push_back(Rat(-1, 3));
  const PerfectionRelation r(all, coeffs);
  CHECK(r.coefficients()[0] == 1);  // primitive integers, first entry positive
  CHECK(r.coefficients()[4] == -1);
}

TEST_CASE("split_two_sided recovers the sides and checks spans") {
  const TwoBasisRelation rel = frame_relation("Dn", 4);
  const SplitRelation s = split_two_sided(rel.as_relation());
  CHECK(s.left.size() == 4);
  CHECK(s.right.size() == 4);
  for (const Rat& c : s.left_coeffs) CHECK(c > 0);
  for (const Rat& c : s.right_coeffs) CHECK(c > 0);

  // negation swaps the sides (raw overload: PerfectionRelation itself
  // normalizes the leading coefficient to be positive)
  Lines all = rel.e();
  all.insert(all.end(), rel.e_prime().begin(), rel.e_prime().end());
  std::vector<Rat> neg;
  for (int i = 0; i < 4; ++i) neg.push_back(Rat(-1));
  for (int i = 0; i < 4; ++i) neg.push_back(Rat(1));
  const SplitRelation s2 = split_two_sided(all, neg);
  CHECK(s2.left == s.right);
  CHECK(s2.right == s.left);

  // one-sided data is rejected before any span check
  CHECK_THROWS_AS(split_two_sided(PerfectionRelation(unit_lines(2), {Rat(1), Rat(1)})),
                  MathError);
}

TEST_CASE("inertia_signature equals coefficient sign counts") {
  const RatMat g = RatMat::identity(2);
  CHECK(inertia_signature(unit_lines(2), {Rat(1), Rat(1)}, g) ==
        std::array<int, 3>{2, 0, 0});
  CHECK(inertia_signature(unit_lines(2), {Rat(1), Rat(-1)}, g) ==
        std::array<int, 3>{1, 1, 0});

  // fixed random independent system in dimension 6 with signs (4,1,1)
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-2, 2);
  RatMat cols(6, 6);
  do {
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) cols(i, j) = Rat(d(rng));
  } while (rank_exact(cols) != 6);
  Lines lines;
  for (int j = 0; j < 6; ++j) {
    IntVec v(6);
    for (int i = 0; i < 6; ++i) v[i] = num(cols(i, j));
    lines.emplace_back(v);
  }
  const std::vector<Rat> coeffs = {1, 2, -3, 0, 1, 1};
  CHECK(inertia_signature(lines, coeffs, RatMat::identity(6)) ==
        std::array<int, 3>{4, 1, 1});

  Lines dependent = unit_lines(2);
  dependent[1] = dependent[0];
  CHECK_THROWS_AS(inertia_signature(dependent, {Rat(1), Rat(1)}, g), MathError);
}

TEST_CASE("a_coefficients on identical bases and on catalog relations") {
  // e' = e: A_i = A'_i and the weighted sums vanish trivially
  const TwoBasisRelation rel = frame_relation("Dn", 4);
  const TwoBasisRelation same(rel.ambient(), rel.e(), rel.lambda(), rel.e(),
                              rel.lambda());
  const ACoefficients ac = a_coefficients(same);
  CHECK(ac.a == ac.a_prime);

  // Watson dimension-6: all A'_i are zero
  const CatalogEntry w = load_entry("thm5.1");
  const ACoefficients wc = a_coefficients(*w.relation);
  for (const Rat& x : wc.a_prime) CHECK(x == 0);

  // irregular E8: weighted sums vanish (checked inside; call must succeed)
  const CatalogEntry irr = load_entry("e8-irregular");
  CHECK_NOTHROW(a_coefficients(*irr.relation));
}

TEST_CASE("duality_report passes on catalog relations and detects tampering") {
  const CatalogEntry e = load_entry("thm5.1");
  const DualityReport good = duality_report(*e.relation);
  CHECK(good.ok());
  CHECK(good.checks_run > 0);

  // swapping the systems gives the same verdict
  const DualityReport swapped = duality_report(e.relation->swapped());
  CHECK(swapped.ok());
  CHECK(swapped.checks_run == good.checks_run);
}

TEST_CASE("decompose_perf_irreducible") {
  // e' = e pointwise: n singleton blocks
  const TwoBasisRelation d4 = frame_relation("Dn", 4);
  const TwoBasisRelation same(d4.ambient(), d4.e(), d4.lambda(), d4.e(), d4.lambda());
  CHECK(decompose_perf_irreducible(same).size() == 4);

  // the irregular relation is perf-irreducible
  const CatalogEntry irr = load_entry("e8-irregular");
  CHECK(is_perf_irreducible(*irr.relation));

  // orthogonal sum of two D4 frame relations: two blocks of size (4,4)
  const int n = 8;
  RatMat g(n, n);
  const RatMat& g4 = d4.ambient().gram();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      g(i, j) = g4(i, j);
      g(4 + i, 4 + j) = g4(i, j);
    }
  const Lattice direct_sum(g);
  Lines e, ep;
  std::vector<Rat> lam, lamp;
  for (int copy = 0; copy < 2; ++copy)
    for (int i = 0; i < 4; ++i) {
      IntVec a(n, Int(0)), b(n, Int(0));
      for (int k = 0; k < 4; ++k) {
        a[4 * copy + k] = d4.e()[i].coords[k];
        b[4 * copy + k] = d4.e_prime()[i].coords[k];
      }
      e.emplace_back(a);
      ep.emplace_back(b);
      lam.push_back(1);
      lamp.push_back(1);
    }
  const TwoBasisRelation sum_rel(direct_sum, e, lam, ep, lamp);
  const auto blocks = decompose_perf_irreducible(sum_rel);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].i_set.size() == 4);
  CHECK(blocks[0].j_set.size() == 4);
  CHECK(!is_perf_irreducible(sum_rel));
}

TEST_CASE("verify_vmin") {
  const std::vector<Rat> ones(3, Rat(1));
  const std::vector<Rat> mins(3, Rat(2));
  CHECK(verify_vmin(ones, mins, ones, mins, Rat(2)));
  // non-minimal vector on the right
  std::vector<Rat> bad = mins;
  bad[1] = 3;
  CHECK(!verify_vmin(ones, mins, ones, bad, Rat(2)));
  CHECK_THROWS_AS(verify_vmin(ones, mins, {}, {}, Rat(2)), MathError);

  // catalog relation: the stored norms satisfy the transfer
  const CatalogEntry w = load_entry("thm5.1");
  const TwoBasisRelation& rel = *w.relation;
  CHECK(verify_vmin(rel.lambda(), rel.e_norms(), rel.lambda_prime(),
                    rel.e_prime_norms(), minimal_vectors(rel.ambient()).min));
}

TEST_CASE("TwoBasisRelation rejects invalid data") {
  const TwoBasisRelation d4 = frame_relation("Dn", 4);
  // tampered weight breaks the relation
  std::vector<Rat> bad = d4.lambda();
  bad[0] = 2;
  CHECK_THROWS_AS(
      TwoBasisRelation(d4.ambient(), d4.e(), bad, d4.e_prime(), d4.lambda_prime()),
      MathError);
  // non-minimal vectors are rejected
  Lines not_min = d4.e();
  IntVec longvec(4, Int(0));
  longvec[0] = 2;
  not_min[0] = ProjectionLine(longvec);
  CHECK_THROWS_AS(
      TwoBasisRelation(d4.ambient(), not_min, d4.lambda(), d4.e_prime(), d4.lambda_prime()),
      MathError);
}

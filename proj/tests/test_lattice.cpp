#include "doctest.h"

#include <random>

#include "perfrel/catalog.hpp"
#include "perfrel/lattice.hpp"
#include "oracles.hpp"

using namespace perfrel;

namespace {

RatMat rat_mat(int n, std::initializer_list<int> entries) {
  RatMat m(n, n);
  auto it = entries.begin();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Rat(*it++);
  return m;
}

}  // namespace

TEST_CASE("Lattice construction validates the Gram matrix") {
  CHECK_NOTHROW(Lattice(RatMat::identity(3)));
  CHECK_THROWS_AS(Lattice(rat_mat(2, {1, 2, 2, 1})), MathError);   // indefinite
  CHECK_THROWS_AS(Lattice(rat_mat(2, {1, 2, 0, 1})), MathError);   // asymmetric
  CHECK_THROWS_AS(Lattice(rat_mat(2, {1, 1, 1, 1})), MathError);   // singular
}

TEST_CASE("minimal vectors of Zn") {
  const Lattice zn(RatMat::identity(4));
  const MinimalVectorSet mv = minimal_vectors(zn);
  CHECK(mv.min == 1);
  CHECK(mv.count() == 4);
  for (const auto& v : mv.vectors) {
    Int nonzero = 0;
    for (const Int& x : v) nonzero += (x != 0);
    CHECK(nonzero == 1);
  }
}

TEST_CASE("minimal vectors of D4 against brute force") {
  const Lattice d4 = root_lattice("Dn", 4);
  const MinimalVectorSet mv = minimal_vectors(d4);
  CHECK(mv.min == 2);
  CHECK(mv.count() == 12);
  const auto brute = oracle::box_enumerate(d4.gram(), 2, Rat(2));
  std::vector<IntVec> expect;
  for (const auto& [v, q] : brute)
    if (q == 2) expect.push_back(v);
  CHECK(mv.vectors == expect);
}

TEST_CASE("enumeration below the minimum is empty and norms are exact") {
  const Lattice d4 = root_lattice("Dn", 4);
  CHECK(enumerate_up_to(d4, Rat(2) - Rat(1, 1000)).empty());
  const auto small = enumerate_up_to(d4, Rat(4));
  for (const auto& [v, q] : small) {
    CHECK(q == d4.norm(v));
    CHECK(q <= 4);
    CHECK(q > 0);
  }
  // canonical sign and ordering
  for (size_t i = 0; i + 1 < small.size(); ++i) CHECK(small[i].first < small[i + 1].first);
}

TEST_CASE("enumeration is stable under Gram permutation") {
  const Lattice d4 = root_lattice("Dn", 4);
  // permute rows/columns by a fixed permutation
  const int perm[4] = {2, 0, 3, 1};
  RatMat g(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = d4.gram()(perm[i], perm[j]);
  const MinimalVectorSet a = minimal_vectors(d4);
  const MinimalVectorSet b = minimal_vectors(Lattice(g));
  CHECK(a.min == b.min);
  REQUIRE(a.count() == b.count());
  // permuting coordinates back must give the same canonical set
  std::vector<IntVec> mapped;
  for (const auto& v : b.vectors) {
    IntVec w(4);
    for (int i = 0; i < 4; ++i) w[perm[i]] = v[i];
    mapped.push_back(primitive_integer(w));
  }
  std::sort(mapped.begin(), mapped.end());
  CHECK(mapped == a.vectors);
}

TEST_CASE("components_in_basis") {
  RatMat b = RatMat::identity(3);
  const RatVec x = {Rat(3), Rat(-1), Rat(2)};
  CHECK(components_in_basis(b, x) == x);

  RatMat twice = RatMat::identity(2);
  twice(0, 0) = 2;
  twice(1, 1) = 2;
  CHECK(components_in_basis(twice, RatVec{Rat(1), Rat(0)}) ==
        RatVec{Rat(1, 2), Rat(0)});

  // D4 frame components of eps1 + eps3: all 1/2
  RatMat frame(4, 4);
  // columns: eps1+eps2, eps1-eps2, eps3+eps4, eps3-eps4 in eps coordinates
  frame(0, 0) = 1;
  frame(1, 0) = 1;
  frame(0, 1) = 1;
  frame(1, 1) = -1;
  frame(2, 2) = 1;
  frame(3, 2) = 1;
  frame(2, 3) = 1;
  frame(3, 3) = -1;
  const RatVec c = components_in_basis(frame, RatVec{Rat(1), Rat(0), Rat(1), Rat(0)});
  CHECK(c == RatVec{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)});

  RatMat singular(2, 2);
  singular(0, 0) = 1;
  singular(0, 1) = 1;
  CHECK_THROWS_AS(components_in_basis(singular, RatVec{Rat(1), Rat(0)}), MathError);
}

TEST_CASE("well-roundedness") {
  CHECK(is_well_rounded(Lattice(RatMat::identity(5))));
  RatMat stretched = RatMat::identity(2);
  stretched(1, 1) = 3;
  CHECK(!is_well_rounded(Lattice(stretched)));
  CHECK(is_well_rounded(root_lattice("E7")));
}

TEST_CASE("sublattice_gram") {
  const Lattice z3(RatMat::identity(3));
  const std::vector<IntVec> cols = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(sublattice_gram(z3, cols).gram() == RatMat::identity(3));

  const Lattice d4 = root_lattice("Dn", 4);
  const std::vector<IntVec> frame = orthogonal_frame("Dn", 4);
  const Lattice sub = sublattice_gram(d4, frame);
  RatMat expect(4, 4);
  for (int i = 0; i < 4; ++i) expect(i, i) = 2;
  CHECK(sub.gram() == expect);

  CHECK_THROWS_AS(sublattice_gram(z3, {{1, 0, 0}, {1, 0, 0}}), MathError);
}

TEST_CASE("adjoin_glue rebuilds the lattice with the glue vector inside") {
  const Lattice z2(RatMat::identity(2));
  const AdjoinResult adj = adjoin_glue(z2, {{Rat(1, 2), Rat(1, 2)}});
  // index 2 extension: the new lattice has covolume 1/2
  CHECK(abs(det_exact(adj.basis_cols)) == Rat(1, 2));
  CHECK_NOTHROW(lattice_coords(adj.basis_cols, RatVec{Rat(1, 2), Rat(1, 2)}));
  CHECK_NOTHROW(lattice_coords(adj.basis_cols, RatVec{Rat(1), Rat(0)}));
  CHECK_THROWS_AS(lattice_coords(adj.basis_cols, RatVec{Rat(1, 2), Rat(0)}), MathError);
}

TEST_CASE("lattice minimum scales with the Gram") {
  const Lattice d4 = root_lattice("Dn", 4);
  const Lattice scaled = d4.rescaled(2);
  CHECK(minimal_vectors(scaled).min == 1);
  CHECK(minimal_vectors(scaled).vectors == minimal_vectors(d4).vectors);
}

TEST_CASE("minimal-vector membership distinguishes multiples and signs") {
  const MinimalVectorSet mv = minimal_vectors(root_lattice("Dn", 4));
  const IntVec v = mv.vectors.front();
  CHECK(mv.contains(v));
  IntVec neg(v), twice(v);
  for (size_t i = 0; i < v.size(); ++i) {
    neg[i] = -v[i];
    twice[i] = 2 * v[i];
  }
  CHECK(mv.contains(neg));
  CHECK(!mv.contains(twice));
}

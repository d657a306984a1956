#include "doctest.h"

#include "perfrel/catalog.hpp"
#include "perfrel/quotient.hpp"

using namespace perfrel;

TEST_CASE("quotient_structure basics") {
  // Lambda_0 = Lambda
  const std::vector<IntVec> id_cols = {{1, 0}, {0, 1}};
  const QuotientStructure trivial = quotient_structure(2, id_cols);
  CHECK(trivial.index == 1);
  CHECK(trivial.invariant_factors.empty());
  CHECK(trivial.annihilator == 1);

  const std::vector<IntVec> diag = {{2, 0}, {0, 4}};
  const QuotientStructure q = quotient_structure(2, diag);
  CHECK(q.index == 8);
  CHECK(q.invariant_factors == std::vector<Int>{2, 4});
  CHECK(q.annihilator == 4);

  CHECK_THROWS_AS(quotient_structure(2, std::vector<IntVec>{{1, 0}, {2, 0}}), MathError);
}

TEST_CASE("E8 frame quotient and the irregular prime side") {
  const TwoBasisRelation frame = frame_relation("E8");
  const QuotientStructure q = quotient_over_side(frame, false);
  CHECK(q.index == 16);
  CHECK(q.invariant_factors == std::vector<Int>(4, Int(2)));

  const TwoBasisRelation irr = irregular_e8_relation();
  const QuotientStructure qp = quotient_over_side(irr, true);
  CHECK(qp.index == 9);
  CHECK(qp.invariant_factors == std::vector<Int>{3, 3});
}

TEST_CASE("extract_code produces the glue words") {
  // dimension-6 index-3 Watson quotient: single word (1,...,1) mod 3
  const CatalogEntry w = load_entry("thm5.1");
  const Code c = extract_code(quotient_over_side(*w.relation, false));
  CHECK(c.modulus == 3);
  REQUIRE(c.generators.size() == 1);
  IntVec word = c.generators[0];
  for (Int& x : word)
    if (x == 2) x = 1;  // 2 = -1 mod 3 generates the same code
  CHECK(word == IntVec(6, Int(1)));

  // Example 6.3: word (1,...,1) mod 4 up to sign
  const CatalogEntry e63 = load_entry("ex6.3");
  const Code c63 = extract_code(quotient_over_side(*e63.relation, false));
  CHECK(c63.modulus == 4);
  REQUIRE(c63.generators.size() == 1);
  IntVec w63 = c63.generators[0];
  bool all_one = true, all_three = true;
  for (const Int& x : w63) {
    all_one = all_one && x == 1;
    all_three = all_three && x == 3;
  }
  CHECK((all_one || all_three));

  // D4 over its frame: word (1,1,1,1) mod 2
  const std::vector<IntVec> frame = orthogonal_frame("Dn", 4);
  const QuotientStructure q = quotient_structure(4, frame);
  CHECK(q.index == 2);
  const Code cd4 = extract_code(q);
  CHECK(cd4.modulus == 2);
  REQUIRE(cd4.generators.size() == 1);
  CHECK(cd4.generators[0] == IntVec(4, Int(1)));
}

TEST_CASE("code equivalence search") {
  Code a{4, 2, {IntVec{1, 1, 0, 0}}};
  Code b{4, 2, {IntVec{0, 0, 1, 1}}};
  CHECK(find_monomial_equivalence(a, b).has_value());

  Code c{4, 2, {IntVec{1, 1, 1, 1}}};
  CHECK(!find_monomial_equivalence(a, c).has_value());

  // units matter for modulus 4: (1,1) ~ (1,3) via unit 3 on one coordinate
  Code u1{2, 4, {IntVec{1, 1}}};
  Code u2{2, 4, {IntVec{1, 3}}};
  const auto eq = find_monomial_equivalence(u1, u2);
  REQUIRE(eq.has_value());

  // different sizes can never be equivalent
  Code big{2, 4, {IntVec{1, 1}, IntVec{2, 0}}};
  CHECK(!find_monomial_equivalence(u1, big).has_value());
}

TEST_CASE("classify_regularity") {
  const TwoBasisRelation d6 = frame_relation("Dn", 6);
  const RegularityVerdict v = classify_regularity(d6);
  CHECK(v.kind == RegularityVerdict::Kind::regular);
  CHECK(v.equivalence.has_value());

  const TwoBasisRelation irr = irregular_e8_relation();
  const RegularityVerdict vi = classify_regularity(irr);
  CHECK(vi.kind == RegularityVerdict::Kind::irregular);
  CHECK(vi.witness.find("2") != std::string::npos);
  CHECK(vi.witness.find("3") != std::string::npos);

  // e' = e is trivially regular
  const TwoBasisRelation d4 = frame_relation("Dn", 4);
  const TwoBasisRelation same(d4.ambient(), d4.e(), d4.lambda(), d4.e(), d4.lambda());
  CHECK(classify_regularity(same).kind == RegularityVerdict::Kind::regular);
}

TEST_CASE("alpha table") {
  const int expect[8] = {1, 1, 1, 2, 2, 3, 4, 6};
  for (int n = 1; n <= 8; ++n) CHECK(alpha_n(n) == expect[n - 1]);
  CHECK_THROWS_AS(alpha_n(9), MathError);
}

TEST_CASE("nu_statistics") {
  // dimension-6 index-3: nu_3 = 6, nu_1 = 0
  const CatalogEntry w = load_entry("thm5.1");
  const NuStatistics st = nu_statistics(*w.relation);
  CHECK(st.nu.at(3) == 6);
  CHECK(st.nu.count(1) == 0);
  CHECK(st.inequality_holds);

  // Example 6.2: every e'_j = e - e_j has order 4 modulo Lambda_0
  const CatalogEntry e62 = load_entry("ex6.2");
  const NuStatistics st62 = nu_statistics(*e62.relation);
  CHECK(st62.nu.at(4) == 7);
  CHECK(st62.inequality_holds);

  // e' = e: nu_1 = n and the inequality fails (degenerate input, flagged)
  const TwoBasisRelation d4 = frame_relation("Dn", 4);
  const TwoBasisRelation same(d4.ambient(), d4.e(), d4.lambda(), d4.e(), d4.lambda());
  const NuStatistics degenerate = nu_statistics(same);
  CHECK(degenerate.nu.at(1) == 4);
  CHECK(!degenerate.inequality_holds);
}

TEST_CASE("frame existence in Dn for n = 3..8") {
  for (int n = 3; n <= 8; ++n) {
    const bool expect_exists = (n % 2 == 0);  // n >= 4 even
    const auto frame = find_orthogonal_frame(root_lattice("Dn", n));
    CHECK(frame.has_value() == expect_exists);
    if (expect_exists) {
      CHECK_NOTHROW(orthogonal_frame("Dn", n));
    } else {
      CHECK_THROWS_AS(orthogonal_frame("Dn", n), MathError);
    }
  }
}

TEST_CASE("frame quotient orders for Dn, E7, E8") {
  for (int n : {4, 6, 8}) {
    const QuotientStructure q =
        quotient_structure(n, orthogonal_frame("Dn", n));
    CHECK(q.index == Int(1) << ((n - 2) / 2));
  }
  CHECK(quotient_structure(7, orthogonal_frame("E7")).index == 8);
  CHECK(quotient_structure(8, orthogonal_frame("E8")).index == 16);
}

TEST_CASE("match_classification labels") {
  CHECK(match_classification(frame_relation("Dn", 6)) == "D_n frame, n=6");
  CHECK(match_classification(*load_entry("ex6.1").relation) == "Example 6.1");
  CHECK(match_classification(*load_entry("zahareva-d5").relation) ==
        "outside classified scope");
}

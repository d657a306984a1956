#include "doctest.h"

#include <random>

#include "perfrel/catalog.hpp"
#include "perfrel/io.hpp"

using namespace perfrel;

TEST_CASE("parse_lattice accepts integers and p/q strings") {
  const Lattice z2 = parse_lattice_json(R"({"n":2,"gram":[[1,0],[0,1]]})");
  CHECK(z2.dim() == 2);
  CHECK(z2.gram() == RatMat::identity(2));

  const Lattice hex =
      parse_lattice_json(R"({"n":2,"gram":[[1,"1/2"],["1/2",1]]})");
  CHECK(hex.gram()(0, 1) == Rat(1, 2));

  CHECK_THROWS_AS(parse_lattice_json(R"({"n":2,"gram":[[1,2],[2,1]]})"), MathError);
  CHECK_THROWS_AS(parse_lattice_json("{"), ParseError);
  CHECK_THROWS_AS(parse_lattice_json(R"({"n":2,"gram":[[1,0]]})"), ParseError);
  CHECK_THROWS_AS(parse_lattice_json(R"({"n":2,"gram":[[1,"x"],["x",1]]})"), ParseError);
}

TEST_CASE("lattice round trip is exact") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> d(-3, 3);
  std::uniform_int_distribution<int> den(1, 7);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + trial % 3;
    // random PD rational Gram: A^T A / q + I
    RatMat g(n, n);
    IntMat a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = d(rng);
    const Int q = den(rng);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rat s = (i == j) ? Rat(1) : Rat(0);
        for (int k = 0; k < n; ++k) s += Rat(a(k, i) * a(k, j), q);
        g(i, j) = s;
      }
    const Lattice l(g, "trial");
    const Lattice back = parse_lattice_json(serialize_lattice(l));
    CHECK(back.gram() == l.gram());
    CHECK(back.label() == l.label());
  }
}

TEST_CASE("relation files") {
  const RelationData r = parse_relation_json(
      R"({"lines":[[1,0],[0,1],[1,1]],"coefficients":[1,"1/2",-1]})");
  CHECK(r.lines.size() == 3);
  CHECK(r.coefficients[1] == Rat(1, 2));
  const RelationData back = parse_relation_json(serialize_relation(r));
  CHECK(back.lines == r.lines);
  CHECK(back.coefficients == r.coefficients);

  CHECK_THROWS_AS(parse_relation_json(R"({"lines":[[1,0]],"coefficients":[]})"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_relation_json(R"({"lines":[[1,0]],"coefficients":[0]})"), MathError);
  CHECK_THROWS_AS(
      parse_relation_json(R"({"lines":[["1/2",0]],"coefficients":[1]})"), ParseError);
}

TEST_CASE("serialization is deterministic") {
  const Lattice d4 = root_lattice("Dn", 4);
  CHECK(serialize_lattice(d4) == serialize_lattice(d4));
}

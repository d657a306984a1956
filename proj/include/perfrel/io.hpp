#pragma once

// JSON file formats: lattices as {"n": ..., "gram": [[...]]} with integer or
// "p/q" entries, relations as {"lines": [[...]], "coefficients": [...]}.
// Parsing failures raise ParseError (CLI exit 1); mathematically invalid
// inputs raise MathError (CLI exit 2).

#include "perfrel/lattice.hpp"
#include "perfrel/perfection.hpp"

#include <string>
#include <vector>

namespace perfrel {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Lattice parse_lattice_json(const std::string& text);
Lattice parse_lattice_file(const std::string& path);
std::string serialize_lattice(const Lattice& l);

struct RelationData {
  std::vector<IntVec> lines;
  std::vector<Rat> coefficients;
};
RelationData parse_relation_json(const std::string& text);
RelationData parse_relation_file(const std::string& path);
std::string serialize_relation(const RelationData& r);

}  // namespace perfrel

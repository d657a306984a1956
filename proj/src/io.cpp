#include "perfrel/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace perfrel {

namespace {

using nlohmann::json;

Rat entry_to_rat(const json& j) {
  if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
  if (j.is_string()) {
    try {
      return parse_rat(j.get<std::string>());
    } catch (const MathError& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("expected integer or \"p/q\" string, got " + j.dump());
}

json rat_to_entry(const Rat& r) {
  if (den(r) == 1 && num(r) >= -((Int(1) << 62)) && num(r) <= (Int(1) << 62))
    return json(static_cast<long long>(num(r)));
  return json(to_string(r));
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

Lattice parse_lattice_json(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("gram"))
    throw ParseError("lattice file must be an object with \"n\" and \"gram\"");
  int n = 0;
  try {
    n = j.at("n").get<int>();
  } catch (const json::exception&) {
    throw ParseError("\"n\" must be an integer");
  }
  const json& g = j.at("gram");
  if (!g.is_array() || static_cast<int>(g.size()) != n)
    throw ParseError("\"gram\" must be an n x n array");
  RatMat gram(n, n);
  for (int i = 0; i < n; ++i) {
    if (!g[i].is_array() || static_cast<int>(g[i].size()) != n)
      throw ParseError("\"gram\" must be an n x n array");
    for (int k = 0; k < n; ++k) gram(i, k) = entry_to_rat(g[i][k]);
  }
  std::string label;
  if (j.contains("label")) {
    if (!j.at("label").is_string()) throw ParseError("\"label\" must be a string");
    label = j.at("label").get<std::string>();
  }
  return Lattice(std::move(gram), std::move(label));  // MathError if not symmetric PD
}

Lattice parse_lattice_file(const std::string& path) {
  return parse_lattice_json(read_file(path));
}

std::string serialize_lattice(const Lattice& l) {
  json j;
  j["n"] = l.dim();
  json rows = json::array();
  for (int i = 0; i < l.dim(); ++i) {
    json row = json::array();
    for (int k = 0; k < l.dim(); ++k) row.push_back(rat_to_entry(l.gram()(i, k)));
    rows.push_back(std::move(row));
  }
  j["gram"] = std::move(rows);
  if (!l.label().empty()) j["label"] = l.label();
  return j.dump(2) + "\n";
}

RelationData parse_relation_json(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object() || !j.contains("lines") || !j.contains("coefficients"))
    throw ParseError("relation file must be an object with \"lines\" and \"coefficients\"");
  RelationData r;
  const json& lines = j.at("lines");
  const json& coeffs = j.at("coefficients");
  if (!lines.is_array() || !coeffs.is_array() || lines.size() != coeffs.size())
    throw ParseError("\"lines\" and \"coefficients\" must be arrays of equal length");
  for (const auto& row : lines) {
    if (!row.is_array()) throw ParseError("each line must be an integer array");
    IntVec v;
    for (const auto& x : row) {
      const Rat e = entry_to_rat(x);
      if (den(e) != 1) throw ParseError("line entries must be integers");
      v.push_back(num(e));
    }
    r.lines.push_back(std::move(v));
  }
  for (const auto& c : coeffs) {
    const Rat v = entry_to_rat(c);
    if (v == 0) throw MathError("relation coefficient must be nonzero");
    r.coefficients.push_back(v);
  }
  return r;
}

RelationData parse_relation_file(const std::string& path) {
  return parse_relation_json(read_file(path));
}

std::string serialize_relation(const RelationData& r) {
  json j;
  json lines = json::array();
  for (const auto& v : r.lines) {
    json row = json::array();
    for (const Int& x : v) row.push_back(rat_to_entry(Rat(x)));
    lines.push_back(std::move(row));
  }
  j["lines"] = std::move(lines);
  json cs = json::array();
  for (const Rat& c : r.coefficients) cs.push_back(rat_to_entry(c));
  j["coefficients"] = std::move(cs);
  return j.dump(2) + "\n";
}

}  // namespace perfrel

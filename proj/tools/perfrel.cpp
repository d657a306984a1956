// perfrel: exact computations on Euclidean lattices given by rational Gram
// matrices: minimal vectors, perfection ranks and relation spaces, Watson
// relations, quotient structures, regularity classification, a catalog of
// named instances, and the built-in verification suite.
//
// All numeric output is exact ("p/q"); --approx adds decimal hints.
// Exit codes: 0 success, 1 malformed input, 2 mathematical precondition
// failure.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "perfrel/catalog.hpp"
#include "perfrel/io.hpp"
#include "perfrel/quotient.hpp"
#include "perfrel/verify.hpp"
#include "perfrel/watson.hpp"

namespace {

using namespace perfrel;

bool g_approx = false;

std::string show(const Rat& r) {
  std::string s = to_string(r);
  if (g_approx && den(r) != 1) {
    std::ostringstream os;
    os << s << " (~" << static_cast<double>(num(r)) / static_cast<double>(den(r)) << ")";
    return os.str();
  }
  return s;
}

std::string show_vec(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::string show_factors(const std::vector<Int>& f) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
  os << ")";
  return os.str();
}

void print_profile(const PerfectionProfile& p) {
  std::cout << "s " << p.s << "\n";
  std::cout << "r " << p.r << "\n";
  std::cout << "relation_dim " << p.relation_dim << "\n";
  std::cout << "cell_dim " << p.cell_dim << "\n";
  std::cout << "perfect " << (p.perfect() ? "yes" : "no") << "\n";
}

int cmd_minvec(const std::string& file) {
  const Lattice l = parse_lattice_file(file);
  const MinimalVectorSet mv = minimal_vectors(l);
  std::cout << "min " << show(mv.min) << "\n";
  std::cout << "s " << mv.count() << "\n";
  for (const auto& v : mv.vectors) std::cout << show_vec(v) << "\n";
  return 0;
}

int cmd_perf(const std::string& file) {
  const Lattice l = parse_lattice_file(file);
  const MinimalVectorSet mv = minimal_vectors(l);
  print_profile(perfection_rank(lines_of(mv)));
  return 0;
}

int cmd_relations(const std::string& file) {
  const Lattice l = parse_lattice_file(file);
  const MinimalVectorSet mv = minimal_vectors(l);
  const Lines lines = lines_of(mv);
  const auto space = relation_space(lines);
  std::cout << "relation_dim " << space.size() << "\n";
  for (size_t k = 0; k < space.size(); ++k) {
    std::cout << "relation " << k + 1 << ":\n";
    for (size_t i = 0; i < space[k].lines().size(); ++i)
      std::cout << "  " << show(space[k].coefficients()[i]) << " * "
                << show_vec(space[k].lines()[i].coords) << "\n";
  }
  return 0;
}

int cmd_watson(const std::string& file, const std::string& glue, const Int& d) {
  const Lattice base = parse_lattice_file(file);
  std::vector<Int> a;
  std::stringstream ss(glue);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      a.push_back(Int(tok));
    } catch (const std::exception&) {
      throw ParseError("watson: cannot parse glue coefficient '" + tok + "'");
    }
  }
  if (static_cast<int>(a.size()) != base.dim())
    throw MathError("watson: need one glue coefficient per basis vector");

  // adjoin the glue vector, then build the datum over the extended lattice
  RatVec g(base.dim());
  for (int i = 0; i < base.dim(); ++i) g[i] = Rat(a[i], d);
  const AdjoinResult adj = adjoin_glue(base, {g});
  std::vector<IntVec> f(base.dim());
  for (int i = 0; i < base.dim(); ++i) {
    RatVec unit(base.dim(), Rat(0));
    unit[i] = 1;
    f[i] = lattice_coords(adj.basis_cols, unit);
  }
  const WatsonDatum datum(adj.lattice, f, a, d);
  const WatsonDefect defect = watson_defect(datum);
  std::cout << "A " << datum.coefficient_sum() << "\n";
  std::cout << "defect " << defect.defect << "\n";
  for (const auto& viol : defect.hypothesis_violations)
    std::cout << "hypothesis-violation " << viol << "\n";
  std::cout << "identity " << (defect.identity_ok ? "ok" : "FAIL") << "\n";
  const WatsonConditionReport cond = watson_condition_checks(datum);
  std::cout << "condition " << (cond.ok() ? "ok" : "violated") << "\n";
  for (const auto& viol : cond.violations) std::cout << "  " << viol << "\n";
  if (defect.defect == 0 && defect.hypothesis_violations.empty()) {
    const WatsonRelationResult rel = watson_relation(datum);
    std::cout << "relation:\n";
    for (size_t i = 0; i < rel.relation.lines().size(); ++i)
      std::cout << "  " << show(rel.relation.coefficients()[i]) << " * "
                << show_vec(rel.relation.lines()[i].coords) << "\n";
  }
  return 0;
}

std::vector<IntVec> parse_sub_argument(const Lattice& l, const std::string& sub) {
  // either a comma-separated index list into the canonical minimal-vector
  // order, or a relation file whose lines are the sub-vectors
  const bool indices = sub.find_first_not_of("0123456789,") == std::string::npos;
  std::vector<IntVec> cols;
  if (indices) {
    const MinimalVectorSet mv = minimal_vectors(l);
    std::stringstream ss(sub);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      const int idx = std::stoi(tok);
      if (idx < 1 || idx > mv.count())
        throw MathError("quotient: minimal-vector index out of range");
      cols.push_back(mv.vectors[idx - 1]);
    }
  } else {
    const RelationData r = parse_relation_file(sub);
    cols = r.lines;
  }
  return cols;
}

int cmd_quotient(const std::string& file, const std::string& sub) {
  const Lattice l = parse_lattice_file(file);
  const std::vector<IntVec> cols = parse_sub_argument(l, sub);
  const QuotientStructure q = quotient_structure(l.dim(), cols);
  std::cout << "index " << q.index << "\n";
  std::cout << "factors " << show_factors(q.invariant_factors) << "\n";
  std::cout << "annihilator " << q.annihilator << "\n";
  for (const auto& g : q.glue_generators) {
    std::cout << "glue";
    for (const Rat& x : g) std::cout << " " << show(x);
    std::cout << "\n";
  }
  const Code code = extract_code(q);
  for (const auto& w : code.generators)
    std::cout << "code-word " << show_vec(w) << " mod " << code.modulus << "\n";
  return 0;
}

TwoBasisRelation relation_from_file(const Lattice& l, const std::string& relfile) {
  const RelationData r = parse_relation_file(relfile);
  Lines lines;
  for (const auto& v : r.lines) lines.emplace_back(v);
  (void)PerfectionRelation(lines, r.coefficients);  // exactness check
  const SplitRelation split = split_two_sided(lines, r.coefficients);
  if (split.left.size() != split.right.size() ||
      static_cast<int>(split.left.size()) != l.dim())
    throw MathError("classify: relation is not an n-vs-n two-basis relation");
  return TwoBasisRelation(l, split.left, split.left_coeffs, split.right,
                          split.right_coeffs);
}

int cmd_classify(const std::string& file, const std::string& relfile) {
  const Lattice l = parse_lattice_file(file);
  const TwoBasisRelation rel = relation_from_file(l, relfile);
  const RegularityVerdict v = classify_regularity(rel);
  const char* kinds[] = {"regular", "irregular", "undecided"};
  std::cout << "regularity " << kinds[static_cast<int>(v.kind)] << "\n";
  std::cout << "witness " << v.witness << "\n";
  std::cout << "perf-irreducible " << (is_perf_irreducible(rel) ? "yes" : "no") << "\n";
  std::cout << "label " << match_classification(rel) << "\n";
  const NuStatistics nu = nu_statistics(rel);
  std::cout << "nu";
  for (const auto& [ord, count] : nu.nu) std::cout << " " << ord << ":" << count;
  std::cout << "\n";
  return 0;
}

int cmd_catalog(const std::string& name) {
  if (name == "list") {
    for (const auto& n : catalog_names()) std::cout << n << "\n";
    return 0;
  }
  const CatalogEntry e = load_entry(name);
  std::cout << "name " << e.name << "\n";
  std::cout << "description " << e.description << "\n";
  std::cout << "n " << e.lattice.dim() << "\n";
  std::cout << "min " << show(e.minvec.min) << "\n";
  print_profile(e.profile);
  if (e.relation) {
    const QuotientStructure q = quotient_over_side(*e.relation, false);
    const QuotientStructure qp = quotient_over_side(*e.relation, true);
    std::cout << "index " << q.index << " factors " << show_factors(q.invariant_factors)
              << "\n";
    std::cout << "index' " << qp.index << " factors' "
              << show_factors(qp.invariant_factors) << "\n";
    const RegularityVerdict v = classify_regularity(*e.relation);
    const char* kinds[] = {"regular", "irregular", "undecided"};
    std::cout << "regularity " << kinds[static_cast<int>(v.kind)] << "\n";
    std::cout << "label " << match_classification(*e.relation) << "\n";
  }
  std::cout << "verified all expected invariants\n";
  return 0;
}

int cmd_verify_paper(const std::string& only, const std::string& json_out) {
  const auto results = run_verify_paper(only);
  const bool ok = print_criterion_summary(results);
  if (!json_out.empty()) {
    FILE* f = std::fopen(json_out.c_str(), "w");
    if (!f) throw ParseError("cannot open '" + json_out + "' for writing");
    const std::string text = results_to_json(results);
    std::fwrite(text.data(), 1, text.size(), f);
    std::fclose(f);
  } else {
    std::cout << results_to_json(results);
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact perfection-rank and perfection-relation computations on lattices"};
  app.require_subcommand(1);
  app.add_flag("--approx", g_approx, "append decimal approximations to exact values");

  std::string file, glue, sub, relfile, name, only, json_out;
  Int den = 0;
  std::string den_str;

  auto* minvec = app.add_subcommand("minvec", "certified minimal vectors");
  minvec->add_option("file", file)->required();

  auto* perf = app.add_subcommand("perf", "perfection rank and co-rank");
  perf->add_option("file", file)->required();

  auto* relations = app.add_subcommand("relations", "basis of the perfection-relation space");
  relations->add_option("file", file)->required();

  auto* watson = app.add_subcommand("watson", "Watson defect, condition and relation");
  watson->add_option("file", file)->required();
  watson->add_option("--glue", glue, "comma-separated glue coefficients a_1,...,a_n")
      ->required();
  watson->add_option("--den", den_str, "glue denominator d")->required();

  auto* quotient = app.add_subcommand("quotient", "quotient structure over a sublattice");
  quotient->add_option("file", file)->required();
  quotient->add_option("--sub", sub, "relation file or comma-separated minimal-vector indices")
      ->required();

  auto* classify = app.add_subcommand("classify", "regularity and classification label");
  classify->add_option("file", file)->required();
  classify->add_option("--relation", relfile)->required();

  auto* catalog = app.add_subcommand("catalog", "load and verify a named instance");
  catalog->add_option("name", name, "entry name, or 'list'")->required();

  auto* verify = app.add_subcommand("verify-paper", "run the built-in verification suite");
  verify->add_option("--only", only, "run only checks carrying this tag");
  verify->add_option("--json", json_out, "write the JSON report to a file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (minvec->parsed()) return cmd_minvec(file);
    if (perf->parsed()) return cmd_perf(file);
    if (relations->parsed()) return cmd_relations(file);
    if (watson->parsed()) {
      try {
        den = Int(den_str);
      } catch (const std::exception&) {
        throw ParseError("watson: cannot parse --den '" + den_str + "'");
      }
      return cmd_watson(file, glue, den);
    }
    if (quotient->parsed()) return cmd_quotient(file, sub);
    if (classify->parsed()) return cmd_classify(file, relfile);
    if (catalog->parsed()) return cmd_catalog(name);
    if (verify->parsed()) return cmd_verify_paper(only, json_out);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

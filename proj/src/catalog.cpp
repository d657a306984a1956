#include "perfrel/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace perfrel {

namespace {

// Basis columns in the ambient epsilon-coordinates (Z^n resp. R^8 for the
// E-series), used to build Grams and to convert explicitly constructed
// vectors into basis coordinates.
RatMat zn_columns(int n) {
  RatMat b(n, n);
  for (int i = 0; i < n; ++i) b(i, i) = 1;
  return b;
}

RatMat an_columns(int n) {
  // A_n inside Z^{n+1}: b_i = eps_i - eps_{i+1}
  RatMat b(n + 1, n);
  for (int j = 0; j < n; ++j) {
    b(j, j) = 1;
    b(j + 1, j) = -1;
  }
  return b;
}

RatMat dn_columns(int n) {
  // b_1 = eps_1 - eps_2, ..., b_{n-1} = eps_{n-1} - eps_n, b_n = eps_{n-1} + eps_n
  RatMat b(n, n);
  for (int j = 0; j + 1 < n; ++j) {
    b(j, j) = 1;
    b(j + 1, j) = -1;
  }
  b(n - 2, n - 1) = 1;
  b(n - 1, n - 1) = 1;
  return b;
}

RatMat e_series_columns(int k) {
  // the first k of: a1 = (eps1 + eps8 - eps2 - ... - eps7)/2, a2 = eps1 + eps2,
  // a_{j+2} = eps_{j+1} - eps_j for j = 1..6
  RatMat b(8, k);
  b(0, 0) = Rat(1, 2);
  b(7, 0) = Rat(1, 2);
  for (int i = 1; i < 7; ++i) b(i, 0) = Rat(-1, 2);
  b(0, 1) = 1;
  b(1, 1) = 1;
  for (int j = 2; j < k; ++j) {
    b(j - 2, j) = -1;
    b(j - 1, j) = 1;
  }
  return b;
}

Lattice lattice_from_eps_columns(const RatMat& cols, const std::string& label) {
  const int k = cols.cols();
  RatMat g(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Rat s = 0;
      for (int t = 0; t < cols.rows(); ++t) s += cols(t, i) * cols(t, j);
      g(i, j) = s;
    }
  return Lattice(std::move(g), label);
}

// coordinates of an eps-space vector in a full-rank column basis (solve the
// normal equations; the embedding may be into a larger space)
IntVec eps_to_basis(const RatMat& cols, const RatVec& v) {
  const int k = cols.cols();
  RatMat gram(k, k);
  RatVec rhs(k, Rat(0));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      Rat s = 0;
      for (int t = 0; t < cols.rows(); ++t) s += cols(t, i) * cols(t, j);
      gram(i, j) = s;
    }
    Rat s = 0;
    for (int t = 0; t < cols.rows(); ++t) s += cols(t, i) * v[t];
    rhs[i] = s;
  }
  const RatVec c = solve_linear(gram, rhs);
  IntVec out(k);
  for (int i = 0; i < k; ++i) {
    if (den(c[i]) != 1)
      throw MathError("eps_to_basis: vector is not in the lattice");
    out[i] = num(c[i]);
  }
  return out;
}

RatVec eps_unit(int n, int i, const Rat& c = Rat(1)) {
  RatVec v(n, Rat(0));
  v[i] = c;
  return v;
}

struct NamedLattice {
  std::string key;  // normalized name
  int n;
};

NamedLattice parse_name(const std::string& name, int n) {
  std::string key = name;
  std::transform(key.begin(), key.end(), key.begin(), ::tolower);
  // accept "d4" style names with the dimension inline
  if (n == 0 && key.size() > 1 && (key[0] == 'z' || key[0] == 'a' || key[0] == 'd')) {
    const std::string digits = key.substr(1);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      n = std::stoi(digits);
      key = key.substr(0, 1) + "n";
    }
  }
  return {key, n};
}

}  // namespace

Lattice root_lattice(const std::string& name, int n) {
  const auto [key, dim] = parse_name(name, n);
  if (key == "zn") {
    if (dim < 1) throw MathError("root_lattice: Zn needs n >= 1");
    return lattice_from_eps_columns(zn_columns(dim), "Z" + std::to_string(dim));
  }
  if (key == "an") {
    if (dim < 1) throw MathError("root_lattice: An needs n >= 1");
    return lattice_from_eps_columns(an_columns(dim), "A" + std::to_string(dim));
  }
  if (key == "dn") {
    if (dim < 3) throw MathError("root_lattice: Dn needs n >= 3");
    return lattice_from_eps_columns(dn_columns(dim), "D" + std::to_string(dim));
  }
  if (key == "e6") return lattice_from_eps_columns(e_series_columns(6), "E6");
  if (key == "e7") return lattice_from_eps_columns(e_series_columns(7), "E7");
  if (key == "e8") return lattice_from_eps_columns(e_series_columns(8), "E8");
  if (key == "e6dual" || key == "e6*") {
    const Lattice e6 = root_lattice("E6");
    return Lattice(inverse(e6.gram()), "E6dual");
  }
  throw MathError("root_lattice: unknown lattice name '" + name + "'");
}

std::optional<std::vector<IntVec>> find_orthogonal_frame(
    const Lattice& l, const std::vector<IntVec>& forbidden) {
  const MinimalVectorSet mv = minimal_vectors(l);
  const int n = l.dim();
  std::vector<bool> blocked(mv.vectors.size(), false);
  for (const auto& f : forbidden) {
    const IntVec c = primitive_integer(f);
    const auto it = std::lower_bound(mv.vectors.begin(), mv.vectors.end(), c);
    if (it != mv.vectors.end() && *it == c)
      blocked[static_cast<size_t>(it - mv.vectors.begin())] = true;
  }
  std::vector<int> chosen;
  std::function<bool(int)> rec = [&](int start) -> bool {
    if (static_cast<int>(chosen.size()) == n) return true;
    for (int i = start; i < static_cast<int>(mv.vectors.size()); ++i) {
      if (blocked[i]) continue;
      bool ok = true;
      for (int c : chosen)
        if (l.inner(mv.vectors[i], mv.vectors[c]) != 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(i);
      if (rec(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  std::vector<IntVec> frame;
  for (int i : chosen) frame.push_back(mv.vectors[i]);
  return frame;
}

namespace {

// the paper-style Dn frame eps1+eps2, eps1-eps2, eps3+eps4, ... in
// eps-coordinates, as columns of the given eps-embedding
std::vector<RatVec> paired_eps_frame(int n) {
  std::vector<RatVec> frame;
  for (int p = 0; p + 1 < n; p += 2) {
    RatVec plus(n, Rat(0)), minus(n, Rat(0));
    plus[p] = 1;
    plus[p + 1] = 1;
    minus[p] = 1;
    minus[p + 1] = -1;
    frame.push_back(plus);
    frame.push_back(minus);
  }
  return frame;
}

// coordinate permutation (2,3)(4,5)...(n-2,n-1) on eps indices (1-based),
// i.e. swaps of 0-based positions (1,2), (3,4), ..., (n-3,n-2)
RatVec apply_sigma(const RatVec& v) {
  const int n = static_cast<int>(v.size());
  RatVec w = v;
  for (int i = 1; i + 1 <= n - 2; i += 2) std::swap(w[i], w[i + 1]);
  return w;
}

}  // namespace

std::vector<IntVec> orthogonal_frame(const std::string& name, int n) {
  const auto [key, dim] = parse_name(name, n);
  if (key == "dn") {
    if (dim < 4 || dim % 2 != 0)
      throw MathError("orthogonal_frame: no frame exists in D" + std::to_string(dim));
    const RatMat cols = dn_columns(dim);
    std::vector<IntVec> out;
    for (const auto& v : paired_eps_frame(dim)) out.push_back(eps_to_basis(cols, v));
    return out;
  }
  if (key == "e8") {
    const RatMat cols = e_series_columns(8);
    std::vector<IntVec> out;
    for (const auto& v : paired_eps_frame(8)) out.push_back(eps_to_basis(cols, v));
    return out;
  }
  if (key == "e7") {
    const auto frame = find_orthogonal_frame(root_lattice("E7"));
    if (!frame) throw MathError("orthogonal_frame: no frame found in E7");
    return *frame;
  }
  throw MathError("orthogonal_frame: no frame exists for '" + name + "'");
}

TwoBasisRelation frame_relation(const std::string& name, int n) {
  const auto [key, dim] = parse_name(name, n);
  Lattice l = root_lattice(name, n);
  std::vector<IntVec> first, second;
  if (key == "dn" || key == "e8") {
    const int d = (key == "e8") ? 8 : dim;
    if (key == "dn" && (d < 4 || d % 2 != 0))
      throw MathError("frame_relation: no frame exists in D" + std::to_string(d));
    const RatMat cols = (key == "e8") ? e_series_columns(8) : dn_columns(d);
    for (const auto& v : paired_eps_frame(d)) {
      first.push_back(eps_to_basis(cols, v));
      second.push_back(eps_to_basis(cols, apply_sigma(v)));
    }
  } else if (key == "e7") {
    first = orthogonal_frame("E7");
    const auto other = find_orthogonal_frame(l, first);
    if (!other) throw MathError("frame_relation: no disjoint second frame in E7");
    second = *other;
  } else {
    throw MathError("frame_relation: no frame relation for '" + name + "'");
  }
  Lines le = lines_of(first), lp = lines_of(second);
  // all lines must be distinct between the two sides
  for (const auto& a : le)
    for (const auto& b : lp)
      if (a == b) throw MathError("frame_relation: sigma-image collides with original lines");
  const std::vector<Rat> ones(le.size(), Rat(1));
  return TwoBasisRelation(std::move(l), std::move(le), ones, std::move(lp), ones);
}

TwoBasisRelation irregular_e8_relation() {
  // Start from an orthogonal frame e_1..e_8 of norm-2 vectors (Gram 2*I_8)
  // and adjoin the four tetrad glue vectors (e_1+e_4+e_6+e_8)/2,
  // (e_2+e_3+e_4+e_8)/2, (e_2+e_4+e_5+e_6)/2, (e_2+e_6+e_7+e_8)/2. The glue
  // supports form a doubly-even self-dual binary code, so the result is a
  // unimodular even lattice of minimum 2: E8.
  const int n = 8;
  RatMat g0(n, n);
  for (int i = 0; i < n; ++i) g0(i, i) = 2;
  const Lattice frame_lattice(g0, "E8");
  const int supports[4][4] = {{0, 3, 5, 7}, {1, 2, 3, 7}, {1, 3, 4, 5}, {1, 5, 6, 7}};
  std::vector<RatVec> glue;
  for (const auto& s : supports) {
    RatVec v(n, Rat(0));
    for (int i : s) v[i] = Rat(1, 2);
    glue.push_back(std::move(v));
  }
  const AdjoinResult adj = adjoin_glue(frame_lattice, glue);

  // frame vectors and the e'_i in the new basis
  std::vector<IntVec> e(n);
  for (int i = 0; i < n; ++i)
    e[i] = lattice_coords(adj.basis_cols, eps_unit(n, i));

  // e'_{2k+1} = (e_{2k+1} + f_{2k+1})/2 and e'_{2k+2} = (-e_{2k+1} + f_{2k+1})/2,
  // where f_1 = e_4+e_6+e_8, f_3 = e_2-e_4+e_8, f_5 = e_2+e_4-e_6,
  // f_7 = e_2+e_6-e_8 (1-based indices).
  const int f_support[4][3] = {{3, 5, 7}, {1, 3, 7}, {1, 3, 5}, {1, 5, 7}};
  const int f_signs[4][3] = {{1, 1, 1}, {1, -1, 1}, {1, 1, -1}, {1, 1, -1}};
  std::vector<IntVec> eprime;
  for (int k = 0; k < 4; ++k) {
    RatVec f(n, Rat(0));
    for (int t = 0; t < 3; ++t) f[f_support[k][t]] = f_signs[k][t];
    RatVec plus(n), minus(n);
    for (int i = 0; i < n; ++i) {
      const Rat base = (i == 2 * k) ? Rat(1) : Rat(0);
      plus[i] = (base + f[i]) / 2;
      minus[i] = (f[i] - base) / 2;
    }
    eprime.push_back(lattice_coords(adj.basis_cols, plus));
    eprime.push_back(lattice_coords(adj.basis_cols, minus));
  }

  std::vector<Rat> lambda;
  for (int i = 0; i < n; ++i) lambda.push_back(i % 2 == 0 ? Rat(1) : Rat(3));
  const std::vector<Rat> lambda_prime(n, Rat(2));

  TwoBasisRelation rel(adj.lattice, lines_of(e), lambda, lines_of(eprime), lambda_prime);

  // hexagonal-plane structure: e'_i . e'_{i+1} = 1 for odd i
  for (int k = 0; k < 4; ++k)
    if (adj.lattice.inner(eprime[2 * k], eprime[2 * k + 1]) != 1)
      throw MathError("irregular_e8_relation: hexagonal structure check failed");
  return rel;
}

WatsonAnsatz watson_ansatz_lattice(const Int& d, const std::vector<Int>& a) {
  const int ell = static_cast<int>(a.size());
  if (ell < 2) throw MathError("watson_ansatz_lattice: need at least two coefficients");
  Int big_a = 0;
  for (const Int& x : a) {
    if (x <= 0) throw MathError("watson_ansatz_lattice: coefficients must be positive");
    big_a += x;
  }
  if (big_a != 2 * d)
    throw MathError("watson_ansatz_lattice: Watson equality sum a_i = 2d required");

  // coefficient classes and the unknown inner product per class pair
  std::vector<Int> class_values;
  std::vector<int> cls(ell);
  for (int i = 0; i < ell; ++i) {
    const auto it = std::find(class_values.begin(), class_values.end(), a[i]);
    if (it == class_values.end()) {
      cls[i] = static_cast<int>(class_values.size());
      class_values.push_back(a[i]);
    } else {
      cls[i] = static_cast<int>(it - class_values.begin());
    }
  }
  const int k = static_cast<int>(class_values.size());
  std::map<std::pair<int, int>, int> unknown_of_pair;
  for (int i = 0; i < ell; ++i)
    for (int j = i + 1; j < ell; ++j) {
      const auto p = std::minmax(cls[i], cls[j]);
      unknown_of_pair.emplace(std::make_pair(p.first, p.second),
                              static_cast<int>(unknown_of_pair.size()));
    }
  const int u = static_cast<int>(unknown_of_pair.size());
  if (u > k)
    throw MathError("watson_ansatz_lattice: ansatz system is underdetermined");
  if (u < k)
    throw MathError("watson_ansatz_lattice: ansatz system is overdetermined");

  // equations: for a representative i of each class, e.e_i = 1/2, i.e.
  // sum_{j != i} a_j t_{cls(i),cls(j)} = d/2 - a_i
  RatMat sys(k, u);
  RatVec rhs(k);
  for (int c = 0; c < k; ++c) {
    int rep = -1;
    for (int i = 0; i < ell; ++i)
      if (cls[i] == c) {
        rep = i;
        break;
      }
    for (int j = 0; j < ell; ++j) {
      if (j == rep) continue;
      const auto p = std::minmax(cls[rep], cls[j]);
      sys(c, unknown_of_pair.at({p.first, p.second})) += Rat(a[j]);
    }
    rhs[c] = Rat(d, 2) - Rat(a[rep]);
  }
  const RatVec t = solve_linear(sys, rhs);

  RatMat g0(ell, ell);
  for (int i = 0; i < ell; ++i) {
    g0(i, i) = 1;
    for (int j = i + 1; j < ell; ++j) {
      const auto p = std::minmax(cls[i], cls[j]);
      g0(i, j) = g0(j, i) = t[unknown_of_pair.at({p.first, p.second})];
    }
  }
  const Lattice base(g0, "watson-ansatz d=" + d.str());  // throws if not PD

  RatVec glue(ell);
  for (int i = 0; i < ell; ++i) glue[i] = Rat(a[i], d);
  const AdjoinResult adj = adjoin_glue(base, {glue});
  const MinimalVectorSet mv = minimal_vectors(adj.lattice);
  if (mv.min != 1)
    throw MathError("watson_ansatz_lattice: certified minimum is " + to_string(mv.min) +
                    ", not 1");
  std::vector<IntVec> f(ell);
  for (int i = 0; i < ell; ++i)
    f[i] = lattice_coords(adj.basis_cols, eps_unit(ell, i));
  std::vector<Int> coeffs = a;
  return WatsonAnsatz{adj.lattice,
                      WatsonDatum(adj.lattice, std::move(f), std::move(coeffs), d)};
}

WatsonAnsatz zahareva_ansatz_lattice() {
  const int n = 8;
  RatMat g0(n, n);
  for (int i = 0; i < n; ++i) {
    g0(i, i) = 1;
    for (int j = i + 1; j < n; ++j) {
      const bool same_block = (i < 4) == (j < 4);
      g0(i, j) = g0(j, i) = same_block ? Rat(1, 4) : Rat(0);
    }
  }
  const Lattice base(g0, "zahareva d=5");
  RatVec glue(n);
  std::vector<Int> a(n);
  for (int i = 0; i < n; ++i) {
    a[i] = (i < 4) ? 1 : 2;
    glue[i] = Rat(a[i], 5);
  }
  const AdjoinResult adj = adjoin_glue(base, {glue});
  const MinimalVectorSet mv = minimal_vectors(adj.lattice);
  if (mv.min != 1)
    throw MathError("zahareva_ansatz_lattice: certified minimum is not 1");
  std::vector<IntVec> f(n);
  for (int i = 0; i < n; ++i)
    f[i] = lattice_coords(adj.basis_cols, eps_unit(n, i));
  return WatsonAnsatz{adj.lattice,
                      WatsonDatum(adj.lattice, std::move(f), std::move(a), Int(5))};
}

Example61 example_6_1() {
  const int n = 7;
  RatMat g0(n, n);
  for (int i = 0; i < n; ++i) g0(i, i) = 2;
  const Lattice base(g0, "ex6.1");
  RatVec glue(n);
  for (int i = 0; i < n; ++i) glue[i] = (i < 4) ? Rat(1, 4) : Rat(1, 2);
  const AdjoinResult adj = adjoin_glue(base, {glue});

  std::vector<IntVec> e(n);
  for (int i = 0; i < n; ++i)
    e[i] = lattice_coords(adj.basis_cols, eps_unit(n, i));
  const IntVec e_glue = lattice_coords(adj.basis_cols, glue);
  RatVec f_eps(n, Rat(0));
  for (int i = 0; i < 4; ++i) f_eps[i] = Rat(1, 2);
  const IntVec f = lattice_coords(adj.basis_cols, f_eps);

  auto minus = [&](const IntVec& base_v, const IntVec& s, const IntVec& t) {
    IntVec out(base_v);
    for (int k = 0; k < n; ++k) out[k] -= s[k] + t[k];
    return out;
  };
  std::vector<IntVec> eprime(n);
  eprime[0] = e_glue;
  eprime[1] = minus(e_glue, e[5], e[6]);
  eprime[2] = minus(e_glue, e[4], e[6]);
  eprime[3] = minus(e_glue, e[4], e[5]);
  eprime[4] = minus(f, e[2], e[3]);
  eprime[5] = minus(f, e[1], e[3]);
  eprime[6] = minus(f, e[1], e[2]);

  const std::vector<Rat> ones(n, Rat(1));
  TwoBasisRelation rel(adj.lattice, lines_of(e), ones, lines_of(eprime), ones);
  return Example61{adj.lattice, std::move(rel), f};
}

namespace {

void expect(bool cond, const std::string& name, const std::string& what) {
  if (!cond) throw MathError("catalog entry '" + name + "': failed invariant: " + what);
}

CatalogEntry make_entry(std::string name, std::string description, Lattice lattice,
                        std::optional<TwoBasisRelation> relation) {
  return CatalogEntry{std::move(name),
                      std::move(description),
                      std::move(lattice),
                      std::move(relation),
                      MinimalVectorSet{},
                      PerfectionProfile{},
                      0,
                      0,
                      0,
                      std::nullopt,
                      {},
                      std::nullopt,
                      {},
                      std::nullopt};
}

CatalogEntry finish_entry(CatalogEntry entry) {
  entry.minvec = minimal_vectors(entry.lattice);
  entry.profile = perfection_rank(lines_of(entry.minvec));
  expect(entry.profile.s == entry.expected_s, entry.name, "kissing number s");
  expect(entry.profile.r == entry.expected_r, entry.name, "perfection rank r");
  expect(entry.profile.relation_dim == entry.expected_relation_dim, entry.name,
         "relation-space dimension");
  // the relation space itself must have the expected size
  const auto space = relation_space(lines_of(entry.minvec));
  expect(static_cast<int>(space.size()) == entry.expected_relation_dim, entry.name,
         "relation-space basis size");
  if (entry.relation) {
    const QuotientStructure q = quotient_over_side(*entry.relation, false);
    if (entry.expected_index)
      expect(q.index == *entry.expected_index, entry.name, "index over Lambda_0");
    if (!entry.expected_factors.empty())
      expect(q.invariant_factors == entry.expected_factors, entry.name,
             "invariant factors over Lambda_0");
    const QuotientStructure qp = quotient_over_side(*entry.relation, true);
    if (entry.expected_index_prime)
      expect(qp.index == *entry.expected_index_prime, entry.name,
             "index over Lambda_0'");
    if (!entry.expected_factors_prime.empty())
      expect(qp.invariant_factors == entry.expected_factors_prime, entry.name,
             "invariant factors over Lambda_0'");
    if (entry.expected_label)
      expect(match_classification(*entry.relation) == *entry.expected_label, entry.name,
             "classification label");
    // the catalog relation must lie in the relation space of its lattice
    expect(contains_relation(space, entry.relation->as_relation()), entry.name,
           "relation membership in the relation space");
  }
  return entry;
}

std::vector<Int> twos(int k) { return std::vector<Int>(k, Int(2)); }

}  // namespace

CatalogEntry load_entry(const std::string& name) {
  if (name == "d4" || name == "e6" || name == "e6dual" || name == "e7" || name == "e8") {
    CatalogEntry e = make_entry(name, "", root_lattice(name), std::nullopt);
    if (name == "d4") {
      e.description = "root lattice D4";
      e.expected_s = 12;
      e.expected_r = 10;
      e.expected_relation_dim = 2;
    } else if (name == "e6") {
      e.description = "root lattice E6";
      e.expected_s = 36;
      e.expected_r = 21;
      e.expected_relation_dim = 15;
    } else if (name == "e6dual") {
      e.description = "dual of E6 (rational Gram)";
      e.expected_s = 27;
      e.expected_r = 21;
      e.expected_relation_dim = 6;
    } else if (name == "e7") {
      e.description = "root lattice E7";
      e.expected_s = 63;
      e.expected_r = 28;
      e.expected_relation_dim = 35;
    } else {
      e.description = "root lattice E8";
      e.expected_s = 120;
      e.expected_r = 36;
      e.expected_relation_dim = 84;
    }
    return finish_entry(std::move(e));
  }
  if (name == "d4-frame" || name == "d6-frame" || name == "d8-frame") {
    const int n = name[1] - '0';
    TwoBasisRelation rel = frame_relation("Dn", n);
    CatalogEntry e = make_entry(name, "orthogonal-frame relation in D" + std::to_string(n),
                                rel.ambient(), rel);
    e.expected_s = (n == 4) ? 12 : (n == 6) ? 30 : 56;
    e.expected_r = n * (n + 1) / 2;
    e.expected_relation_dim = e.expected_s - e.expected_r;
    e.expected_index = Int(1) << ((n - 2) / 2);
    e.expected_factors = twos((n - 2) / 2);
    e.expected_index_prime = e.expected_index;
    e.expected_factors_prime = e.expected_factors;
    e.expected_label = "D_n frame, n=" + std::to_string(n);
    return finish_entry(std::move(e));
  }
  if (name == "e7-frame") {
    TwoBasisRelation rel = frame_relation("E7");
    CatalogEntry e =
        make_entry(name, "orthogonal-frame relation in E7", rel.ambient(), rel);
    e.expected_s = 63;
    e.expected_r = 28;
    e.expected_relation_dim = 35;
    e.expected_index = 8;
    e.expected_factors = twos(3);
    e.expected_index_prime = 8;
    e.expected_factors_prime = twos(3);
    e.expected_label = "E7 frame";
    return finish_entry(std::move(e));
  }
  if (name == "e8-frame") {
    TwoBasisRelation rel = frame_relation("E8");
    CatalogEntry e =
        make_entry(name, "orthogonal-frame relation in E8", rel.ambient(), rel);
    e.expected_s = 120;
    e.expected_r = 36;
    e.expected_relation_dim = 84;
    e.expected_index = 16;
    e.expected_factors = twos(4);
    e.expected_index_prime = 16;
    e.expected_factors_prime = twos(4);
    e.expected_label = "E8 frame";
    return finish_entry(std::move(e));
  }
  if (name == "e8-irregular") {
    TwoBasisRelation rel = irregular_e8_relation();
    CatalogEntry e = make_entry(
        name, "irregular relation in E8, weights (1,3,...) vs 2*(1,...)", rel.ambient(),
        rel);
    e.expected_s = 120;
    e.expected_r = 36;
    e.expected_relation_dim = 84;
    e.expected_index = 16;
    e.expected_factors = twos(4);
    e.expected_index_prime = 9;
    e.expected_factors_prime = {3, 3};
    e.expected_label = "E8 irregular";
    return finish_entry(std::move(e));
  }
  if (name == "thm5.1" || name == "watson-dim6") {
    const WatsonAnsatz wa = watson_ansatz_lattice(3, std::vector<Int>(6, Int(1)));
    const WatsonRelationResult wr = watson_relation(wa.datum);
    CatalogEntry e = make_entry(name, "index-3 Watson relation in dimension 6",
                                wa.lattice, wr.two_basis);
    e.expected_s = 13;
    e.expected_r = 12;
    e.expected_relation_dim = 1;
    e.expected_index = 3;
    e.expected_factors = {3};
    e.expected_index_prime = 3;
    e.expected_factors_prime = {3};
    e.expected_label = "Watson dim-6 (index 3)";
    return finish_entry(std::move(e));
  }
  if (name == "ex6.2") {
    std::vector<Int> a(7, Int(1));
    a[6] = 2;
    const WatsonAnsatz wa = watson_ansatz_lattice(4, a);
    const WatsonRelationResult wr = watson_relation(wa.datum);
    CatalogEntry e = make_entry(name, "index-4 Watson relation, weights (1,1,1,1,1,1,2)",
                                wa.lattice, wr.two_basis);
    e.expected_s = 21;
    e.expected_r = 19;
    e.expected_relation_dim = 2;
    e.expected_index = 4;
    e.expected_factors = {4};
    e.expected_index_prime = 4;
    e.expected_factors_prime = {4};
    e.expected_label = "Example 6.2";
    return finish_entry(std::move(e));
  }
  if (name == "ex6.3") {
    const WatsonAnsatz wa = watson_ansatz_lattice(4, std::vector<Int>(8, Int(1)));
    const WatsonRelationResult wr = watson_relation(wa.datum);
    CatalogEntry e = make_entry(name, "index-4 Watson relation in dimension 8, unit weights",
                                wa.lattice, wr.two_basis);
    e.expected_s = 17;
    e.expected_r = 16;
    e.expected_relation_dim = 1;
    e.expected_index = 4;
    e.expected_factors = {4};
    e.expected_index_prime = 4;
    e.expected_factors_prime = {4};
    e.expected_label = "Example 6.3";
    return finish_entry(std::move(e));
  }
  if (name == "ex6.1") {
    const Example61 ex = example_6_1();
    CatalogEntry e =
        make_entry(name, "index-4 relation in dimension 7 from two D4 cross-sections",
                   ex.lattice, ex.relation);
    e.expected_s = 23;
    e.expected_r = 19;
    e.expected_relation_dim = 4;
    e.expected_index = 4;
    e.expected_factors = {4};
    e.expected_index_prime = 4;
    e.expected_factors_prime = {4};
    e.expected_label = "Example 6.1";
    return finish_entry(std::move(e));
  }
  if (name == "zahareva-d5") {
    const WatsonAnsatz wa = zahareva_ansatz_lattice();
    const WatsonRelationResult wr = zahareva_relation(wa.datum);
    CatalogEntry e = make_entry(name, "index-5 relation in dimension 8 from the d=5 identity",
                                wa.lattice, wr.two_basis);
    e.expected_s = 16;
    e.expected_r = 15;
    e.expected_relation_dim = 1;
    e.expected_index = 5;
    e.expected_factors = {5};
    e.expected_index_prime = 5;
    e.expected_factors_prime = {5};
    e.expected_label = "outside classified scope";
    return finish_entry(std::move(e));
  }
  throw MathError("load_entry: unknown catalog entry '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"d4",       "e6",       "e6dual",   "e7",        "e8",
          "d4-frame", "d6-frame", "d8-frame", "e7-frame",  "e8-frame",
          "e8-irregular", "thm5.1", "ex6.1",  "ex6.2",     "ex6.3",
          "zahareva-d5"};
}

}  // namespace perfrel

#include "perfrel/perfection.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace perfrel {

namespace {

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

std::string idx2(const char* name, int a, int b) {
  std::ostringstream os;
  os << name << "(" << a + 1 << "," << b + 1 << ")";
  return os.str();
}

}  // namespace

ProjectionLine::ProjectionLine(const IntVec& x) : coords(primitive_integer(x)) {
  if (is_zero(coords)) throw MathError("ProjectionLine: zero vector");
}

ProjectionLine::ProjectionLine(const RatVec& x) : coords(primitive_integer(x)) {
  if (is_zero(coords)) throw MathError("ProjectionLine: zero vector");
}

Lines lines_of(const std::vector<IntVec>& vectors) {
  Lines out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) out.emplace_back(v);
  return out;
}

Lines lines_of(const MinimalVectorSet& s) { return lines_of(s.vectors); }

IntVec vectorize_rank_one(const IntVec& x) {
  const int n = static_cast<int>(x.size());
  IntVec v;
  v.reserve(n * (n + 1) / 2);
  for (int i = 0; i < n; ++i) v.push_back(x[i] * x[i]);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) v.push_back(x[i] * x[j]);
  return v;
}

namespace {

// rows = vectorized X X^T, one per line
IntMat vectorized_matrix(const Lines& lines) {
  const int n = lines[0].dim();
  const int cols = n * (n + 1) / 2;
  IntMat m(static_cast<int>(lines.size()), cols);
  for (size_t i = 0; i < lines.size(); ++i) {
    const IntVec v = vectorize_rank_one(lines[i].coords);
    for (int j = 0; j < cols; ++j) m(static_cast<int>(i), j) = v[j];
  }
  return m;
}

}  // namespace

PerfectionProfile perfection_rank(const Lines& lines) {
  if (lines.empty()) throw MathError("perfection_rank: no lines");
  const int n = lines[0].dim();
  for (const auto& l : lines)
    if (l.dim() != n) throw MathError("perfection_rank: mixed dimensions");
  PerfectionProfile p;
  p.n = n;
  p.s = static_cast<int>(lines.size());
  p.r = rank_exact(vectorized_matrix(lines));
  p.relation_dim = p.s - p.r;
  p.cell_dim = n * (n + 1) / 2 - p.r;
  return p;
}

PerfectionRelation::PerfectionRelation(Lines lines, std::vector<Rat> coefficients)
    : lines_(std::move(lines)), coeffs_(std::move(coefficients)) {
  if (lines_.empty() || lines_.size() != coeffs_.size())
    throw MathError("PerfectionRelation: empty or mismatched data");
  for (const Rat& c : coeffs_)
    if (c == 0) throw MathError("PerfectionRelation: zero coefficient");
  const int n = lines_[0].dim();
  // verify sum c_L X_L X_L^T = 0 exactly
  RatMat sum(n, n);
  for (size_t t = 0; t < lines_.size(); ++t) {
    const IntVec& x = lines_[t].coords;
    for (int i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < n; ++j) sum(i, j) += coeffs_[t] * Rat(x[i] * x[j]);
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (sum(i, j) != 0)
        throw MathError("PerfectionRelation: coefficients do not satisfy the relation");
  // normalize to primitive integers, first entry positive
  const IntVec prim = primitive_integer(coeffs_);
  for (size_t t = 0; t < coeffs_.size(); ++t) coeffs_[t] = Rat(prim[t]);
}

std::vector<PerfectionRelation> relation_space(const Lines& lines) {
  if (lines.empty()) throw MathError("relation_space: no lines");
  // kernel of the matrix whose columns are the vectorized projections
  const RatMat m = to_rational(vectorized_matrix(lines)).transposed();
  const std::vector<IntVec> kernel = nullspace_basis(m);
  std::vector<PerfectionRelation> out;
  out.reserve(kernel.size());
  for (const IntVec& k : kernel) {
    Lines rl;
    std::vector<Rat> rc;
    for (size_t i = 0; i < lines.size(); ++i) {
      if (k[i] == 0) continue;
      rl.push_back(lines[i]);
      rc.push_back(Rat(k[i]));
    }
    out.emplace_back(std::move(rl), std::move(rc));
  }
  return out;
}

bool contains_relation(const std::vector<PerfectionRelation>& basis,
                       const PerfectionRelation& rel) {
  if (basis.empty()) return false;
  // collect all lines appearing anywhere
  std::vector<ProjectionLine> all;
  auto note = [&](const PerfectionRelation& r) {
    for (const auto& l : r.lines()) all.push_back(l);
  };
  for (const auto& r : basis) note(r);
  note(rel);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  auto as_column = [&](const PerfectionRelation& r) {
    RatVec col(all.size(), Rat(0));
    for (size_t i = 0; i < r.lines().size(); ++i) {
      const auto it = std::lower_bound(all.begin(), all.end(), r.lines()[i]);
      col[static_cast<size_t>(it - all.begin())] = r.coefficients()[i];
    }
    return col;
  };

  RatMat m(static_cast<int>(all.size()), static_cast<int>(basis.size()) + 1);
  for (size_t j = 0; j < basis.size(); ++j)
    m.set_col(static_cast<int>(j), as_column(basis[j]));
  m.set_col(static_cast<int>(basis.size()), as_column(rel));
  return rank_exact(m) == static_cast<int>(basis.size());
}

namespace {

int rank_of_lines(const Lines& lines) {
  if (lines.empty()) return 0;
  RatMat m(lines[0].dim(), static_cast<int>(lines.size()));
  for (size_t j = 0; j < lines.size(); ++j)
    m.set_col(static_cast<int>(j), to_rational(lines[j].coords));
  return rank_exact(m);
}

}  // namespace

SplitRelation split_two_sided(const Lines& lines, const std::vector<Rat>& coefficients) {
  if (lines.size() != coefficients.size())
    throw MathError("split_two_sided: mismatched lines and coefficients");
  SplitRelation s;
  for (size_t i = 0; i < lines.size(); ++i) {
    const Rat& c = coefficients[i];
    if (c == 0) throw MathError("split_two_sided: zero coefficient");
    if (c > 0) {
      s.left.push_back(lines[i]);
      s.left_coeffs.push_back(c);
    } else {
      s.right.push_back(lines[i]);
      s.right_coeffs.push_back(-c);
    }
  }
  if (s.left.empty() || s.right.empty())
    throw MathError("split_two_sided: not a genuine two-sided relation");
  // both sides span the same subspace: rank T = rank T' = rank(T u T')
  const int rl = rank_of_lines(s.left);
  const int rr = rank_of_lines(s.right);
  Lines both = s.left;
  both.insert(both.end(), s.right.begin(), s.right.end());
  const int rb = rank_of_lines(both);
  if (rl != rr || rl != rb)
    throw MathError("split_two_sided: sides do not span the same subspace");
  return s;
}

SplitRelation split_two_sided(const PerfectionRelation& rel) {
  return split_two_sided(rel.lines(), rel.coefficients());
}

TwoBasisRelation::TwoBasisRelation(Lattice ambient, Lines e,
                                   std::vector<Rat> lambda, Lines e_prime,
                                   std::vector<Rat> lambda_prime)
    : ambient_(std::move(ambient)),
      e_(std::move(e)),
      ep_(std::move(e_prime)),
      lambda_(std::move(lambda)),
      lambdap_(std::move(lambda_prime)) {
  const int n = ambient_.dim();
  if (static_cast<int>(e_.size()) != n || static_cast<int>(ep_.size()) != n ||
      lambda_.size() != e_.size() || lambdap_.size() != ep_.size())
    throw MathError("TwoBasisRelation: need n lines and n weights per side");
  for (const Rat& c : lambda_)
    if (c <= 0) throw MathError("TwoBasisRelation: weights must be positive");
  for (const Rat& c : lambdap_)
    if (c <= 0) throw MathError("TwoBasisRelation: weights must be positive");

  RatMat be(n, n), bp(n, n);
  for (int j = 0; j < n; ++j) {
    be.set_col(j, to_rational(e_[j].coords));
    bp.set_col(j, to_rational(ep_[j].coords));
  }
  if (rank_exact(be) != n || rank_exact(bp) != n)
    throw MathError("TwoBasisRelation: systems must both have rank n");

  RatMat sum(n, n);
  for (int t = 0; t < n; ++t) {
    const IntVec& x = e_[t].coords;
    const IntVec& y = ep_[t].coords;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        sum(i, j) += lambda_[t] * Rat(x[i] * x[j]) - lambdap_[t] * Rat(y[i] * y[j]);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (sum(i, j) != 0) throw MathError("TwoBasisRelation: relation does not hold");

  const MinimalVectorSet mv = minimal_vectors(ambient_);
  for (const auto& l : e_)
    if (!mv.contains(l.coords))
      throw MathError("TwoBasisRelation: left vector not minimal in ambient lattice");
  for (const auto& l : ep_)
    if (!mv.contains(l.coords))
      throw MathError("TwoBasisRelation: right vector not minimal in ambient lattice");

  // e_on_ep_(k, j) = e_j . e'_k^*  (components of e_j in basis e')
  const RatMat bp_inv = inverse(bp);
  const RatMat be_inv = inverse(be);
  e_on_ep_ = bp_inv * be;
  ep_on_e_ = be_inv * bp;
}

std::vector<Rat> TwoBasisRelation::e_norms() const {
  std::vector<Rat> out;
  out.reserve(e_.size());
  for (const auto& l : e_) out.push_back(ambient_.norm(l.coords));
  return out;
}

std::vector<Rat> TwoBasisRelation::e_prime_norms() const {
  std::vector<Rat> out;
  out.reserve(ep_.size());
  for (const auto& l : ep_) out.push_back(ambient_.norm(l.coords));
  return out;
}

PerfectionRelation TwoBasisRelation::as_relation() const {
  Lines lines = e_;
  std::vector<Rat> coeffs = lambda_;
  for (size_t j = 0; j < ep_.size(); ++j) {
    lines.push_back(ep_[j]);
    coeffs.push_back(-lambdap_[j]);
  }
  return PerfectionRelation(std::move(lines), std::move(coeffs));
}

TwoBasisRelation TwoBasisRelation::swapped() const {
  return TwoBasisRelation(ambient_, ep_, lambdap_, e_, lambda_);
}

std::array<int, 3> inertia_signature(const Lines& lines,
                                     const std::vector<Rat>& coefficients,
                                     const RatMat& gram) {
  const int n = gram.rows();
  if (static_cast<int>(lines.size()) != n || coefficients.size() != lines.size())
    throw MathError("inertia_signature: need exactly n lines and coefficients");
  RatMat cols(n, n);
  for (int j = 0; j < n; ++j) cols.set_col(j, to_rational(lines[j].coords));
  if (rank_exact(cols) != n)
    throw MathError("inertia_signature: lines are dependent");
  // quadratic form y -> sum c_i (e_i . y)^2 has matrix sum c_i (G X_i)(G X_i)^T
  RatMat m(n, n);
  for (int t = 0; t < n; ++t) {
    const RatVec gx = gram * to_rational(lines[t].coords);
    for (int i = 0; i < n; ++i) {
      if (gx[i] == 0) continue;
      for (int j = 0; j < n; ++j) m(i, j) += coefficients[t] * gx[i] * gx[j];
    }
  }
  return inertia(m);
}

ACoefficients a_coefficients(const TwoBasisRelation& rel) {
  const int n = rel.n();
  // All 2n vectors are minimal, so after dividing the Gram by the minimum
  // every norm is 1 and the A-formulas apply with plain components.
  ACoefficients out;
  out.a.resize(n);
  out.a_prime.resize(n);
  for (int i = 0; i < n; ++i) {
    Rat s = 0;
    for (int k = 0; k < n; ++k) s += rel.comp_e_on_ep()(k, i) * rel.comp_e_on_ep()(k, i);
    out.a[i] = Rat(1) - s;
    Rat sp = 0;
    for (int j = 0; j < n; ++j) sp += rel.comp_ep_on_e()(j, i) * rel.comp_ep_on_e()(j, i);
    out.a_prime[i] = Rat(1) - sp;
  }
  const Rat sum_l = std::accumulate(rel.lambda().begin(), rel.lambda().end(), Rat(0));
  const Rat sum_lp =
      std::accumulate(rel.lambda_prime().begin(), rel.lambda_prime().end(), Rat(0));
  if (sum_l != sum_lp)
    throw MathError("a_coefficients: weight sums differ (trace identity violated)");
  Rat sa = 0, sap = 0;
  for (int i = 0; i < n; ++i) {
    sa += rel.lambda()[i] * out.a[i];
    sap += rel.lambda_prime()[i] * out.a_prime[i];
  }
  if (sa != 0 || sap != 0)
    throw MathError("a_coefficients: weighted A-sums are not zero");
  return out;
}

DualityReport duality_report(const TwoBasisRelation& rel) {
  const int n = rel.n();
  const RatMat& c = rel.comp_e_on_ep();   // c(k, j) = e_j . e'_k^*
  const RatMat& d = rel.comp_ep_on_e();   // d(j, k) = e'_k . e_j^*
  const std::vector<Rat>& l = rel.lambda();
  const std::vector<Rat>& lp = rel.lambda_prime();
  DualityReport rep;

  // cross symmetry: lambda_j (e_j . e'_k^*) = lambda'_k (e'_k . e_j^*)
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      ++rep.checks_run;
      if (l[j] * c(k, j) != lp[k] * d(j, k))
        rep.failures.push_back("cross-symmetry fails at " + idx2("", j, k));
    }

  // sign agreement or both zero
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      ++rep.checks_run;
      const int s1 = sign(c(k, j)), s2 = sign(d(j, k));
      if (!((s1 == 0 && s2 == 0) || s1 == s2))
        rep.failures.push_back("sign agreement fails at " + idx2("", j, k));
    }

  // sum-to-1 both ways
  for (int j = 0; j < n; ++j) {
    ++rep.checks_run;
    Rat s = 0;
    for (int i = 0; i < n; ++i) s += abs(c(i, j)) * abs(d(j, i));
    if (s != 1) rep.failures.push_back("row sum-to-1 fails at j=" + std::to_string(j + 1));
  }
  for (int i = 0; i < n; ++i) {
    ++rep.checks_run;
    Rat s = 0;
    for (int j = 0; j < n; ++j) s += abs(c(i, j)) * abs(d(j, i));
    if (s != 1) rep.failures.push_back("column sum-to-1 fails at i=" + std::to_string(i + 1));
  }

  // balance identity for admissible pairs (k admissible when e'_k has full
  // support on the e-basis), with the existence consequence
  for (int k = 0; k < n; ++k) {
    bool admissible = true;
    for (int i = 0; i < n; ++i)
      if (d(i, k) == 0) {
        admissible = false;
        break;
      }
    if (!admissible) continue;
    for (int j = 0; j < n; ++j) {
      if (j == k) continue;
      ++rep.checks_run;
      Rat s = 0;
      bool witness = false;
      for (int i = 0; i < n; ++i) {
        const Rat sigma = abs(d(i, k)) * abs(c(k, i));
        const Rat ratio2 = (d(i, j) * d(i, j)) / (d(i, k) * d(i, k));
        s += sigma * ((lp[j] / lp[k]) * ratio2 - 1);
        if (lp[j] * d(i, j) * d(i, j) >= lp[k] * d(i, k) * d(i, k)) witness = true;
      }
      if (s != 0)
        rep.failures.push_back("balance identity fails at " + idx2("", j, k));
      ++rep.checks_run;
      if (!witness)
        rep.failures.push_back("balance witness missing at " + idx2("", j, k));
    }
  }
  return rep;
}

std::vector<PerfBlock> decompose_perf_irreducible(const TwoBasisRelation& rel) {
  const int n = rel.n();
  const RatMat& d = rel.comp_ep_on_e();  // d(i, k) = component of e'_k on e_i
  // union-find over 2n nodes: 0..n-1 = e side, n..2n-1 = e' side
  std::vector<int> parent(2 * n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (d(i, k) != 0) unite(i, n + k);
  std::vector<PerfBlock> blocks;
  std::vector<int> root_to_block(2 * n, -1);
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    if (root_to_block[r] < 0) {
      root_to_block[r] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[root_to_block[r]].i_set.push_back(i);
  }
  for (int k = 0; k < n; ++k) {
    const int r = find(n + k);
    if (root_to_block[r] < 0)
      throw MathError("decompose_perf_irreducible: e' vector with empty support");
    blocks[root_to_block[r]].j_set.push_back(k);
  }
  for (const auto& b : blocks)
    if (b.i_set.size() != b.j_set.size())
      throw MathError("decompose_perf_irreducible: unbalanced block");
  return blocks;
}

bool is_perf_irreducible(const TwoBasisRelation& rel) {
  return decompose_perf_irreducible(rel).size() == 1;
}

bool verify_vmin(const std::vector<Rat>& lambda, const std::vector<Rat>& left_norms,
                 const std::vector<Rat>& lambda_prime,
                 const std::vector<Rat>& right_norms, const Rat& min) {
  if (right_norms.empty() || lambda_prime.empty())
    throw MathError("verify_vmin: empty right side");
  if (lambda.size() != left_norms.size() || lambda_prime.size() != right_norms.size())
    throw MathError("verify_vmin: mismatched coefficient/norm lists");
  bool hypotheses = true;
  const Rat sum_l = std::accumulate(lambda.begin(), lambda.end(), Rat(0));
  const Rat sum_lp = std::accumulate(lambda_prime.begin(), lambda_prime.end(), Rat(0));
  if (sum_l != sum_lp) hypotheses = false;
  for (const Rat& c : lambda_prime)
    if (c <= 0) hypotheses = false;
  for (const Rat& m : left_norms)
    if (m != min) hypotheses = false;
  Rat lhs = 0, rhs = 0;
  for (size_t i = 0; i < lambda.size(); ++i) lhs += lambda[i] * left_norms[i];
  for (size_t j = 0; j < lambda_prime.size(); ++j) rhs += lambda_prime[j] * right_norms[j];
  if (lhs != rhs) hypotheses = false;
  bool conclusion = true;
  for (const Rat& m : right_norms)
    if (m != min) conclusion = false;
  return hypotheses && conclusion;
}

}  // namespace perfrel

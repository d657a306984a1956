#include "perfrel/watson.hpp"

#include <algorithm>
#include <numeric>

namespace perfrel {

namespace {

IntVec scaled_combination(const std::vector<IntVec>& f, const std::vector<Int>& a) {
  IntVec s(f[0].size(), Int(0));
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t k = 0; k < s.size(); ++k) s[k] += a[i] * f[i][k];
  return s;
}

}  // namespace

WatsonDatum::WatsonDatum(Lattice ambient, std::vector<IntVec> f, std::vector<Int> a,
                         Int d)
    : ambient_(std::move(ambient)), f_(std::move(f)), a_(std::move(a)), d_(std::move(d)) {
  if (d_ <= 1) throw MathError("WatsonDatum: need d > 1");
  if (f_.empty() || f_.size() != a_.size())
    throw MathError("WatsonDatum: mismatched vectors and coefficients");
  for (size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] == 0) throw MathError("WatsonDatum: zero glue coefficient");
    if (a_[i] < 0) {  // eager sign normalization
      a_[i] = -a_[i];
      for (Int& x : f_[i]) x = -x;
    }
  }
  RatMat cols(ambient_.dim(), static_cast<int>(f_.size()));
  for (size_t j = 0; j < f_.size(); ++j) {
    if (static_cast<int>(f_[j].size()) != ambient_.dim())
      throw MathError("WatsonDatum: wrong coordinate length");
    cols.set_col(static_cast<int>(j), to_rational(f_[j]));
  }
  if (rank_exact(cols) != static_cast<int>(f_.size()))
    throw MathError("WatsonDatum: dependent vectors");
  const IntVec s = scaled_combination(f_, a_);
  glue_.resize(s.size());
  for (size_t k = 0; k < s.size(); ++k) {
    if (s[k] % d_ != 0)
      throw MathError("WatsonDatum: glue vector (sum a_i f_i)/d is not in the lattice");
    glue_[k] = s[k] / d_;
  }
}

Int WatsonDatum::coefficient_sum() const {
  Int a = 0;
  for (const Int& x : a_) a += abs(x);
  return a;
}

std::vector<int> WatsonDatum::multiplicities() const {
  const Int half = d_ / 2;
  std::vector<int> m(static_cast<size_t>(half), 0);
  for (const Int& x : a_) {
    const Int v = abs(x);
    if (v >= 1 && v <= half) ++m[static_cast<size_t>(v - 1)];
  }
  return m;
}

WatsonDefect watson_defect(const WatsonDatum& w) {
  WatsonDefect out;
  out.defect = w.coefficient_sum() - 2 * w.denominator();
  const MinimalVectorSet mv = minimal_vectors(w.ambient());
  for (const auto& fi : w.basis())
    if (!mv.contains(fi))
      out.hypothesis_violations.push_back("basis vector is not minimal");
  if (out.defect < 0)
    out.hypothesis_violations.push_back(
        "negative defect A - 2d (impossible for minimal basis vectors and f in the lattice)");

  const Rat nf = w.ambient().norm(w.glue());
  Rat rhs = 0;
  for (size_t i = 0; i < w.basis().size(); ++i) {
    IntVec diff(w.glue());
    for (size_t k = 0; k < diff.size(); ++k) diff[k] -= w.basis()[i][k];
    const Rat gap = w.ambient().norm(diff) - w.ambient().norm(w.basis()[i]);
    out.gaps.push_back(gap);
    rhs += Rat(w.coefficients()[i]) * gap;
  }
  out.identity_ok = Rat(out.defect) * nf == rhs;
  return out;
}

WatsonConditionReport watson_condition_checks(const WatsonDatum& w) {
  WatsonConditionReport rep;
  rep.all_at_most_half_d = true;
  int at_half = 0;
  for (size_t i = 0; i < w.coefficients().size(); ++i) {
    const Int twice = 2 * abs(w.coefficients()[i]);
    if (twice > w.denominator()) {
      rep.all_at_most_half_d = false;
      rep.violations.push_back("|a_" + std::to_string(i + 1) + "| exceeds d/2");
    }
    if (twice == w.denominator()) ++at_half;
  }
  rep.at_most_one_at_half_d = (w.denominator() < 4) || at_half <= 1;
  if (!rep.at_most_one_at_half_d)
    rep.violations.push_back("more than one coefficient equals d/2 with d >= 4");
  return rep;
}

WatsonRelationResult watson_relation(const WatsonDatum& w) {
  const WatsonDefect d = watson_defect(w);
  if (d.defect != 0)
    throw MathError("watson_relation: defect A - 2d is nonzero");
  if (!d.hypothesis_violations.empty())
    throw MathError("watson_relation: " + d.hypothesis_violations.front());

  const int n = w.ambient().dim();
  const int ell = w.ell();

  Lines left, right;
  std::vector<Rat> cl, cr;
  std::vector<IntVec> right_vectors;
  const MinimalVectorSet mv = minimal_vectors(w.ambient());
  for (int i = 0; i < ell; ++i) {
    IntVec diff(w.glue());
    for (size_t k = 0; k < diff.size(); ++k) diff[k] -= w.basis()[i][k];
    if (!mv.contains(diff))
      throw MathError("watson_relation: right-side vector f - f_i is not minimal");
    right_vectors.push_back(diff);
    left.emplace_back(w.basis()[i]);
    right.emplace_back(diff);
    cl.emplace_back(w.coefficients()[i]);
    cr.emplace_back(w.coefficients()[i]);
  }

  // Lemma-style minimality transfer, checked independently of the search
  std::vector<Rat> ln, rn;
  for (int i = 0; i < ell; ++i) {
    ln.push_back(w.ambient().norm(w.basis()[i]));
    rn.push_back(w.ambient().norm(right_vectors[i]));
  }
  if (!verify_vmin(cl, ln, cr, rn, mv.min))
    throw MathError("watson_relation: minimality transfer failed");

  Lines all = left;
  std::vector<Rat> coeffs = cl;
  for (int i = 0; i < ell; ++i) {
    all.push_back(right[i]);
    coeffs.push_back(-cr[i]);
  }
  WatsonRelationResult res{PerfectionRelation(all, coeffs), std::nullopt,
                           std::move(right_vectors)};
  if (ell == n)
    res.two_basis = TwoBasisRelation(w.ambient(), left, cl, right, cr);
  return res;
}

bool watson_formal_identity(const Rat& d, const std::vector<Rat>& a) {
  if (d <= 0) throw MathError("watson_formal_identity: d must be positive");
  const int n = static_cast<int>(a.size());
  RatVec f(n);
  Rat big_a = 0;
  for (int i = 0; i < n; ++i) {
    f[i] = a[i] / d;
    big_a += abs(a[i]);
  }
  std::vector<NormTerm> lhs, rhs;
  lhs.push_back({big_a - 2 * d, f});
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    RatVec diff = f;
    diff[i] -= Rat(sign(a[i]));
    RatVec unit(n, Rat(0));
    unit[i] = 1;
    rhs.push_back({abs(a[i]), diff});
    rhs.push_back({-abs(a[i]), unit});
  }
  return verify_formal_identity(lhs, rhs);
}

ZaharevaFormalCheck index_family_formal_identity(const Int& d, int m1, int m2) {
  if (d == 5) return zahareva_formal_identity(m1, m2);
  if (d == 7)
    throw NotImplementedError(
        "index_family_formal_identity: the d = 7 identity is not implemented");
  throw MathError("index_family_formal_identity: no identity for d = " + d.str());
}

ZaharevaFormalCheck zahareva_formal_identity(int m1, int m2) {
  const int ell = m1 + m2;
  // symbolic: f_i = basis vectors of an ell-dimensional space
  auto unit = [&](int i) {
    RatVec v(ell, Rat(0));
    v[i] = 1;
    return v;
  };
  RatVec f(ell), fp(ell);
  for (int i = 0; i < ell; ++i) f[i] = (i < m1) ? Rat(1, 5) : Rat(2, 5);
  for (int i = 0; i < ell; ++i) fp[i] = 2 * f[i] - ((i >= m1) ? Rat(1) : Rat(0));

  auto check = [&](bool swapped_assignment) {
    // assignment: f'_i = f' - f_i on one block and f - f_i on the other
    std::vector<NormTerm> lhs, rhs;
    for (int i = 0; i < ell; ++i) {
      const bool use_fprime = swapped_assignment ? (i >= m1) : (i < m1);
      const RatVec& base = use_fprime ? fp : f;
      RatVec diff(ell);
      const RatVec ui = unit(i);
      for (int k = 0; k < ell; ++k) diff[k] = base[k] - ui[k];
      lhs.push_back({Rat(1), diff});
      lhs.push_back({Rat(-1), ui});
    }
    rhs.push_back({Rat(m2 - 4), f});
    rhs.push_back({Rat(m1 - 4), fp});
    return verify_formal_identity(lhs, rhs);
  };

  ZaharevaFormalCheck out;
  if (check(false)) {
    out.holds = true;
    out.swapped_assignment = false;
  } else if (check(true)) {
    out.holds = true;
    out.swapped_assignment = true;
  }
  return out;
}

WatsonRelationResult zahareva_relation(const WatsonDatum& w) {
  if (w.denominator() == 7)
    throw NotImplementedError(
        "zahareva_relation: the d = 7 identity is not implemented");
  if (w.denominator() != 5)
    throw MathError("zahareva_relation: requires d = 5");
  const std::vector<int> m = w.multiplicities();
  const int m1 = m.empty() ? 0 : m[0];
  const int m2 = m.size() > 1 ? m[1] : 0;
  if (w.ell() != 8 || m1 != 4 || m2 != 4)
    throw MathError("zahareva_relation: requires ell = 8 with multiplicities (4, 4)");

  const ZaharevaFormalCheck formal = zahareva_formal_identity(m1, m2);
  if (!formal.holds)
    throw MathError("zahareva_relation: formal identity fails for both assignments");

  // order the basis so that the |a_i| = 1 block comes first
  std::vector<int> order;
  for (size_t i = 0; i < w.coefficients().size(); ++i)
    if (w.coefficients()[i] == 1) order.push_back(static_cast<int>(i));
  for (size_t i = 0; i < w.coefficients().size(); ++i)
    if (w.coefficients()[i] == 2) order.push_back(static_cast<int>(i));

  const int n = w.ambient().dim();
  IntVec fprime(n, Int(0));
  for (int k = 0; k < n; ++k) {
    fprime[k] = 2 * w.glue()[k];
    for (int t = 4; t < 8; ++t) fprime[k] -= w.basis()[order[t]][k];
  }

  const MinimalVectorSet mv = minimal_vectors(w.ambient());
  Lines left, right;
  std::vector<Rat> cl, cr;
  std::vector<IntVec> right_vectors;
  for (int t = 0; t < 8; ++t) {
    const IntVec& fi = w.basis()[order[t]];
    const bool small_block = t < 4;
    const bool use_fprime = formal.swapped_assignment ? !small_block : small_block;
    IntVec diff(n);
    for (int k = 0; k < n; ++k)
      diff[k] = (use_fprime ? fprime[k] : w.glue()[k]) - fi[k];
    if (!mv.contains(fi) || !mv.contains(diff))
      throw MathError("zahareva_relation: constructed vector is not minimal");
    right_vectors.push_back(diff);
    left.emplace_back(fi);
    right.emplace_back(diff);
    cl.emplace_back(1);
    cr.emplace_back(1);
  }

  Lines all = left;
  std::vector<Rat> coeffs = cl;
  for (int i = 0; i < 8; ++i) {
    all.push_back(right[i]);
    coeffs.push_back(-cr[i]);
  }
  WatsonRelationResult res{PerfectionRelation(all, coeffs), std::nullopt,
                           std::move(right_vectors)};
  if (n == 8)
    res.two_basis = TwoBasisRelation(w.ambient(), left, cl, right, cr);
  return res;
}

LengthConditionReport length_condition(const TwoBasisRelation& rel) {
  const int n = rel.n();
  const QuotientStructure q = quotient_over_side(rel, false);
  LengthConditionReport rep;
  rep.witness.assign(n, -1);
  rep.cyclic = q.invariant_factors.size() == 1;

  // enumerate all nonzero classes of Lambda/Lambda_0 as coordinate vectors
  // on the e-basis, reduced to [0, 1)
  std::vector<RatVec> reps;
  reps.push_back(RatVec(n, Rat(0)));
  for (size_t g = 0; g < q.glue_generators.size(); ++g) {
    const Int ord = q.generator_orders[g];
    std::vector<RatVec> next;
    for (const auto& r : reps)
      for (Int c = 0; c < ord; ++c) {
        RatVec s(n);
        for (int k = 0; k < n; ++k) {
          s[k] = r[k] + Rat(c) * q.glue_generators[g][k];
          s[k] -= Rat(floor_rat(s[k]));
        }
        next.push_back(std::move(s));
      }
    reps = std::move(next);
  }

  for (size_t t = 0; t < reps.size(); ++t) {
    bool zero_class = true;
    for (const Rat& x : reps[t])
      if (den(x) != 1) zero_class = false;
    if (zero_class) continue;
    for (int j = 0; j < n; ++j)
      if (rep.witness[j] < 0 && den(reps[t][j]) != 1)
        rep.witness[j] = static_cast<int>(t);
  }
  rep.all_witnessed =
      std::all_of(rep.witness.begin(), rep.witness.end(), [](int w) { return w >= 0; });

  if (rep.cyclic) {
    rep.cyclic_all_nonzero = true;
    for (const Rat& x : q.glue_generators[0])
      if (den(x) == 1) rep.cyclic_all_nonzero = false;
  }
  return rep;
}

}  // namespace perfrel

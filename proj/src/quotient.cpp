#include "perfrel/quotient.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace perfrel {

namespace {

Rat frac_part(const Rat& x) {
  const Rat f = x - Rat(floor_rat(x));
  return f;
}

}  // namespace

QuotientStructure quotient_structure(int n, const std::vector<IntVec>& sub_vectors) {
  if (static_cast<int>(sub_vectors.size()) != n)
    throw MathError("quotient_structure: need exactly n sub-vectors");
  IntMat c(n, n);
  for (int j = 0; j < n; ++j) {
    if (static_cast<int>(sub_vectors[j].size()) != n)
      throw MathError("quotient_structure: wrong coordinate length");
    for (int i = 0; i < n; ++i) c(i, j) = sub_vectors[j][i];
  }
  const Int d = det_bareiss(c);
  if (d == 0) throw MathError("quotient_structure: sub-vectors are rank deficient");

  const SmithResult snf = smith_normal_form(c);
  QuotientStructure q;
  q.index = abs(d);
  // U C V = D; generator of the Z/d_i summand is U^{-1} eps_i, whose
  // coordinates in the sub-basis are column i of V divided by d_i
  for (int i = 0; i < n; ++i) {
    const Int& di = snf.factors[i];
    if (di <= 1) continue;
    q.invariant_factors.push_back(di);
    RatVec g(n);
    for (int r = 0; r < n; ++r) g[r] = frac_part(Rat(snf.v(r, i), di));
    q.glue_generators.push_back(std::move(g));
    q.generator_orders.push_back(di);
  }
  q.annihilator = q.invariant_factors.empty() ? Int(1) : q.invariant_factors.back();
  return q;
}

QuotientStructure quotient_over_side(const TwoBasisRelation& rel, bool prime_side) {
  // coordinates of the sub-basis in the ambient basis are the line columns
  const Lines& side = prime_side ? rel.e_prime() : rel.e();
  std::vector<IntVec> cols;
  cols.reserve(side.size());
  for (const auto& l : side) cols.push_back(l.coords);
  return quotient_structure(rel.n(), cols);
}

std::vector<IntVec> Code::all_words() const {
  std::set<IntVec> words;
  words.insert(IntVec(length, Int(0)));
  // close under addition of generators
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<IntVec> current(words.begin(), words.end());
    for (const auto& w : current)
      for (const auto& g : generators) {
        IntVec s(length);
        for (int i = 0; i < length; ++i) {
          s[i] = w[i] + g[i];
          if (s[i] >= modulus) s[i] -= modulus;
        }
        if (words.insert(std::move(s)).second) grew = true;
      }
  }
  return {words.begin(), words.end()};
}

Code extract_code(const QuotientStructure& q) {
  Code code;
  code.modulus = q.annihilator;
  for (const auto& g : q.glue_generators) {
    IntVec w(g.size());
    for (size_t i = 0; i < g.size(); ++i) {
      const Rat scaled = Rat(code.modulus) * g[i];
      if (den(scaled) != 1)
        throw MathError("extract_code: glue coordinate not d-torsion");
      Int v = num(scaled) % code.modulus;
      if (v < 0) v += code.modulus;
      w[i] = v;
    }
    code.generators.push_back(std::move(w));
    code.length = static_cast<int>(g.size());
  }
  if (code.generators.empty()) code.length = 0;
  return code;
}

namespace {

// unit-invariant per-coordinate profile: multiset of gcd(w_i, d)
std::vector<Int> coordinate_profile(const std::vector<IntVec>& words, int coord,
                                    const Int& modulus) {
  std::vector<Int> p;
  p.reserve(words.size());
  for (const auto& w : words) p.push_back(gcd(w[coord], modulus));
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<Int> units_mod(const Int& d) {
  std::vector<Int> us;
  for (Int u = 1; u < d; ++u)
    if (gcd(u, d) == 1) us.push_back(u);
  if (d == 1) us.push_back(0);
  return us;
}

}  // namespace

std::optional<CodeEquivalence> find_monomial_equivalence(const Code& a, const Code& b) {
  if (a.modulus != b.modulus || a.length != b.length) return std::nullopt;
  const Int d = a.modulus;
  const int n = a.length;
  const std::vector<IntVec> wa = a.all_words();
  const std::vector<IntVec> wb = b.all_words();
  if (wa.size() != wb.size()) return std::nullopt;
  if (n == 0) return CodeEquivalence{};

  std::vector<std::vector<Int>> prof_a(n), prof_b(n);
  for (int i = 0; i < n; ++i) {
    prof_a[i] = coordinate_profile(wa, i, d);
    prof_b[i] = coordinate_profile(wb, i, d);
  }

  const std::set<IntVec> target(wb.begin(), wb.end());
  const std::vector<Int> us = units_mod(d);

  std::vector<int> perm(n, -1);
  std::vector<Int> units(n, Int(1));
  std::vector<bool> used(n, false);

  // images of all source words, built coordinate by coordinate
  std::vector<IntVec> images(wa.size(), IntVec(n, Int(0)));

  // candidate target-word prefixes, compared on the assigned target coords
  auto consistent = [&](int depth) {
    // after assigning `depth` source coords: multiset of images restricted
    // to assigned target positions must match the target words restricted
    // to the same positions
    std::vector<int> assigned;
    for (int i = 0; i < depth; ++i) assigned.push_back(perm[i]);
    std::sort(assigned.begin(), assigned.end());
    auto restrict_sorted = [&](const std::vector<IntVec>& words,
                               const std::vector<IntVec>* im) {
      std::vector<IntVec> res;
      res.reserve(words.size());
      for (size_t w = 0; w < words.size(); ++w) {
        IntVec r;
        r.reserve(assigned.size());
        for (int p : assigned) r.push_back(im ? (*im)[w][p] : words[w][p]);
        res.push_back(std::move(r));
      }
      std::sort(res.begin(), res.end());
      return res;
    };
    return restrict_sorted(wa, &images) == restrict_sorted(wb, nullptr);
  };

  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == n) {
      std::vector<IntVec> sorted = images;
      std::sort(sorted.begin(), sorted.end());
      std::vector<IntVec> tb(wb);
      std::sort(tb.begin(), tb.end());
      return sorted == tb;
    }
    for (int p = 0; p < n; ++p) {
      if (used[p] || prof_a[i] != prof_b[p]) continue;
      for (const Int& u : us) {
        perm[i] = p;
        units[i] = u;
        used[p] = true;
        for (size_t w = 0; w < wa.size(); ++w) images[w][p] = (u * wa[w][i]) % d;
        if (consistent(i + 1) && rec(i + 1)) return true;
        used[p] = false;
      }
    }
    perm[i] = -1;
    return false;
  };

  if (rec(0)) return CodeEquivalence{perm, units};
  return std::nullopt;
}

RegularityVerdict classify_regularity(const TwoBasisRelation& rel) {
  const QuotientStructure q = quotient_over_side(rel, false);
  const QuotientStructure qp = quotient_over_side(rel, true);
  RegularityVerdict v;
  if (q.annihilator != qp.annihilator) {
    v.kind = RegularityVerdict::Kind::irregular;
    std::ostringstream os;
    os << "annihilators differ: d = " << q.annihilator << " vs d' = " << qp.annihilator;
    v.witness = os.str();
    return v;
  }
  const Code c = extract_code(q);
  const Code cp = extract_code(qp);
  auto eq = find_monomial_equivalence(c, cp);
  if (eq) {
    v.kind = RegularityVerdict::Kind::regular;
    std::ostringstream os;
    os << "monomial equivalence, permutation (";
    for (size_t i = 0; i < eq->perm.size(); ++i)
      os << (i ? " " : "") << eq->perm[i] + 1;
    os << "), units (";
    for (size_t i = 0; i < eq->units.size(); ++i)
      os << (i ? " " : "") << eq->units[i];
    os << ") mod " << c.modulus;
    v.witness = os.str();
    v.equivalence = eq;
  } else {
    v.kind = RegularityVerdict::Kind::irregular;
    v.witness = "equal annihilators but no monomial equivalence (exhaustive search)";
  }
  return v;
}

int alpha_n(int n) {
  static constexpr int table[8] = {1, 1, 1, 2, 2, 3, 4, 6};
  if (n < 1 || n > 8) throw MathError("alpha_n: defined for 1 <= n <= 8 only");
  return table[n - 1];
}

NuStatistics nu_statistics(const TwoBasisRelation& rel) {
  const int n = rel.n();
  const RatMat& d = rel.comp_ep_on_e();  // d(i, k) = e'_k . e_i^*
  NuStatistics st;
  std::vector<Int> orders(n);
  for (int k = 0; k < n; ++k) {
    Int ord = 1;
    for (int i = 0; i < n; ++i) ord = lcm(ord, den(d(i, k)));
    orders[k] = ord;
    st.nu[ord] += 1;
  }
  st.lhs = st.nu.count(1) ? Int(st.nu[1]) : Int(0);
  for (const auto& [ord, count] : st.nu)
    if (ord >= 3) st.rhs += (ord - 2) * count;
  st.inequality_holds = st.lhs <= st.rhs;
  st.equality = st.lhs == st.rhs;
  if (st.equality && st.inequality_holds) {
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (d(i, k) != 0 && abs(d(i, k)) != Rat(1, orders[k])) st.sharpness_ok = false;
  }
  return st;
}

namespace {

std::vector<Rat> sorted_weights(std::vector<Rat> w) {
  std::sort(w.begin(), w.end());
  return w;
}

bool all_equal(const std::vector<Rat>& w) {
  return std::all_of(w.begin(), w.end(), [&](const Rat& x) { return x == w[0]; });
}

}  // namespace

std::string match_classification(const TwoBasisRelation& rel) {
  const int n = rel.n();
  const QuotientStructure q = quotient_over_side(rel, false);
  const bool two_elementary =
      !q.invariant_factors.empty() &&
      std::all_of(q.invariant_factors.begin(), q.invariant_factors.end(),
                  [](const Int& f) { return f == 2; });
  const bool cyclic = q.invariant_factors.size() == 1;
  const std::vector<Rat> w = sorted_weights(rel.lambda());
  const std::vector<Rat> wp = sorted_weights(rel.lambda_prime());

  if (two_elementary) {
    const Int frame_order = Int(1) << ((n - 2) / 2);
    if (n % 2 == 0 && n >= 4 && q.index == frame_order && all_equal(w) && all_equal(wp) &&
        !(n == 8 && q.index == 16))
      return "D_n frame, n=" + std::to_string(n);
    if (n == 7 && q.index == 8 && all_equal(w) && all_equal(wp)) return "E7 frame";
    if (n == 8 && q.index == 16) {
      if (all_equal(w) && all_equal(wp)) return "E8 frame";
      const QuotientStructure qp = quotient_over_side(rel, true);
      if (qp.index == 9 &&
          std::vector<Int>{3, 3} == qp.invariant_factors)
        return "E8 irregular";
    }
    return "outside classified scope";
  }
  if (cyclic && q.index == 3 && n == 6 && all_equal(w) && all_equal(wp))
    return "Watson dim-6 (index 3)";
  if (cyclic && q.index == 4) {
    if (n == 8 && all_equal(w) && all_equal(wp)) return "Example 6.3";
    if (n == 7 && all_equal(w) && all_equal(wp)) return "Example 6.1";
    if (n == 7) {
      std::vector<Rat> expect = {1, 1, 1, 1, 1, 1, 2};
      // weight multiset (1,...,1,2) up to scale
      if (w == wp && w.size() == 7) {
        std::vector<Rat> scaled(expect.size());
        for (size_t i = 0; i < expect.size(); ++i) scaled[i] = expect[i] * w[0];
        if (w == scaled) return "Example 6.2";
      }
    }
  }
  return "outside classified scope";
}

}  // namespace perfrel

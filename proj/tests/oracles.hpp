#pragma once

// Independent test-side oracles. These deliberately use different
// algorithms from the library: plain normalized Gaussian elimination for
// rank (the library uses fraction-free Bareiss), box brute force for short
// vectors (the library uses exact Fincke-Pohst), and indicator-Gram
// evaluation for formal identities (the library compares polynomial
// coefficient maps).

#include <vector>

#include "perfrel/matrix.hpp"
#include "perfrel/rational.hpp"

namespace oracle {

using perfrel::Int;
using perfrel::IntVec;
using perfrel::Rat;
using perfrel::RatMat;
using perfrel::RatVec;

// rank by plain Gaussian elimination with leading-entry normalization
inline int rank_gauss(RatMat a) {
  const int rows = a.rows(), cols = a.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    a.swap_rows(piv, r);
    const Rat p = a(r, c);
    for (int j = c; j < cols; ++j) a(r, j) /= p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rat f = a(i, c);
      for (int j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

// all nonzero vectors with x^T G x <= bound inside the coefficient box
// |x_i| <= box, one per +/- pair (first nonzero positive), sorted
inline std::vector<std::pair<IntVec, Rat>> box_enumerate(const RatMat& g, int box,
                                                         const Rat& bound) {
  const int n = g.rows();
  std::vector<std::pair<IntVec, Rat>> out;
  IntVec x(n, Int(0));
  const long long side = 2 * box + 1;
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= side;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int i = 0; i < n; ++i) {
      x[i] = Int(c % side - box);
      c /= side;
    }
    int first = -1;
    for (int i = 0; i < n; ++i)
      if (x[i] != 0) {
        first = i;
        break;
      }
    if (first < 0 || x[first] < 0) continue;
    Rat q = 0;
    for (int i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (x[j] == 0) continue;
        q += Rat(x[i] * x[j]) * g(i, j);
      }
    }
    if (q > 0 && q <= bound) out.emplace_back(x, q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// weighted norm-sum difference evaluated at every indicator Gram matrix
// E_kk and E_kl + E_lk; zero everywhere iff the formal identity holds
inline bool identity_by_indicator_grams(
    const std::vector<std::pair<Rat, RatVec>>& lhs,
    const std::vector<std::pair<Rat, RatVec>>& rhs) {
  if (lhs.empty() && rhs.empty()) return true;
  const size_t n = lhs.empty() ? rhs[0].second.size() : lhs[0].second.size();
  for (size_t k = 0; k < n; ++k)
    for (size_t l = k; l < n; ++l) {
      // N(x) at the indicator Gram = x_k x_l (+ x_l x_k when k != l)
      Rat diff = 0;
      for (const auto& [c, v] : lhs)
        diff += c * (k == l ? v[k] * v[k] : 2 * v[k] * v[l]);
      for (const auto& [c, v] : rhs)
        diff -= c * (k == l ? v[k] * v[k] : 2 * v[k] * v[l]);
      if (diff != 0) return false;
    }
  return true;
}

}  // namespace oracle

#include "perfrel/exactla.hpp"

#include <algorithm>

namespace perfrel {

namespace {

// Clear denominators row by row; row scaling preserves rank and kernel.
IntMat cleared(const RatMat& m) {
  IntMat a(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    Int l = 1;
    for (int j = 0; j < m.cols(); ++j) l = lcm(l, den(m(i, j)));
    for (int j = 0; j < m.cols(); ++j)
      a(i, j) = num(m(i, j)) * (l / den(m(i, j)));
  }
  return a;
}

}  // namespace

int rank_exact(const IntMat& m) {
  IntMat a = m;
  const int rows = a.rows(), cols = a.cols();
  Int prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) a.swap_rows(piv, r);
    const Int p = a(r, c);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        a(i, j) = (a(i, j) * p - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = p;
    ++r;
  }
  return r;
}

int rank_exact(const RatMat& m) { return rank_exact(cleared(m)); }

Int det_bareiss(const IntMat& m) {
  if (m.rows() != m.cols()) throw MathError("det: matrix not square");
  const int n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Int prev = 1;
  int swaps = 0;
  for (int c = 0; c < n - 1; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      a.swap_rows(piv, c);
      ++swaps;
    }
    const Int p = a(c, c);
    for (int i = c + 1; i < n; ++i) {
      for (int j = c + 1; j < n; ++j)
        a(i, j) = (a(i, j) * p - a(i, c) * a(c, j)) / prev;
      a(i, c) = 0;
    }
    prev = p;
  }
  return (swaps % 2 == 0) ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

Rat det_exact(const RatMat& m) {
  if (m.rows() != m.cols()) throw MathError("det: matrix not square");
  Rat scale = 1;
  IntMat a(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    Int l = 1;
    for (int j = 0; j < m.cols(); ++j) l = lcm(l, den(m(i, j)));
    scale /= Rat(l);
    for (int j = 0; j < m.cols(); ++j)
      a(i, j) = num(m(i, j)) * (l / den(m(i, j)));
  }
  return scale * Rat(det_bareiss(a));
}

namespace {

// Reduced row echelon form over Q; returns pivot columns.
std::vector<int> rref(RatMat& a) {
  const int rows = a.rows(), cols = a.cols();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) a.swap_rows(piv, r);
    const Rat p = a(r, c);
    for (int j = c; j < cols; ++j) a(r, j) /= p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rat f = a(i, c);
      for (int j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<IntVec> nullspace_basis(const RatMat& m) {
  RatMat a = m;
  const int cols = a.cols();
  const std::vector<int> pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<IntVec> basis;
  for (int fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    RatVec v(cols, Rat(0));
    v[fc] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(static_cast<int>(i), fc);
    basis.push_back(primitive_integer(v));
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

RatVec solve_linear(const RatMat& a, const RatVec& b) {
  if (a.rows() != a.cols() || a.rows() != static_cast<int>(b.size()))
    throw MathError("solve_linear: shape mismatch");
  const int n = a.rows();
  RatMat m(n, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n) = b[i];
  }
  const std::vector<int> pivots = rref(m);
  if (static_cast<int>(pivots.size()) != n || (n > 0 && pivots.back() == n))
    throw MathError("solve_linear: singular matrix");
  RatVec x(n);
  for (int i = 0; i < n; ++i) x[i] = m(i, n);
  return x;
}

RatMat inverse(const RatMat& a) {
  if (a.rows() != a.cols()) throw MathError("inverse: matrix not square");
  const int n = a.rows();
  RatMat m(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n + i) = 1;
  }
  const std::vector<int> pivots = rref(m);
  if (static_cast<int>(pivots.size()) != n || (n > 0 && pivots.back() >= n))
    throw MathError("inverse: singular matrix");
  RatMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = m(i, n + j);
  return inv;
}

namespace {

struct SnfState {
  IntMat a, u, v;

  void row_swap(int i, int k) {
    a.swap_rows(i, k);
    u.swap_rows(i, k);
  }
  void col_swap(int j, int l) {
    a.swap_cols(j, l);
    v.swap_cols(j, l);
  }
  void row_addmul(int dst, int src, const Int& f) {  // row dst += f * row src
    for (int j = 0; j < a.cols(); ++j) a(dst, j) += f * a(src, j);
    for (int j = 0; j < u.cols(); ++j) u(dst, j) += f * u(src, j);
  }
  void col_addmul(int dst, int src, const Int& f) {
    for (int i = 0; i < a.rows(); ++i) a(i, dst) += f * a(i, src);
    for (int i = 0; i < v.rows(); ++i) v(i, dst) += f * v(i, src);
  }
  void row_negate(int i) {
    for (int j = 0; j < a.cols(); ++j) a(i, j) = -a(i, j);
    for (int j = 0; j < u.cols(); ++j) u(i, j) = -u(i, j);
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMat& input) {
  const int rows = input.rows(), cols = input.cols();
  SnfState s{input, IntMat::identity(rows), IntMat::identity(cols)};
  const int k = std::min(rows, cols);

  for (int t = 0; t < k; ++t) {
    // move a nonzero entry of smallest absolute value to (t, t)
    for (;;) {
      int bi = -1, bj = -1;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j)
          if (s.a(i, j) != 0 &&
              (bi < 0 || abs(s.a(i, j)) < abs(s.a(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi < 0) break;  // submatrix is zero
      if (bi != t) s.row_swap(bi, t);
      if (bj != t) s.col_swap(bj, t);

      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (s.a(i, t) == 0) continue;
        const Int q = floor_div(s.a(i, t), s.a(t, t));
        s.row_addmul(i, t, -q);
        if (s.a(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (s.a(t, j) == 0) continue;
        const Int q = floor_div(s.a(t, j), s.a(t, t));
        s.col_addmul(j, t, -q);
        if (s.a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: pivot must divide the rest of the submatrix
      bool divides = true;
      for (int i = t + 1; i < rows && divides; ++i)
        for (int j = t + 1; j < cols && divides; ++j)
          if (s.a(i, j) % s.a(t, t) != 0) {
            s.row_addmul(t, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (s.a(t, t) < 0) s.row_negate(t);
  }

  std::vector<Int> factors(k);
  for (int t = 0; t < k; ++t) factors[t] = s.a(t, t);
  return SmithResult{s.u, s.v, factors};
}

IntMat hermite_column_basis(const IntMat& input) {
  IntMat a = input;
  const int rows = a.rows(), cols = a.cols();
  int c = 0;
  for (int r = 0; r < rows && c < cols; ++r) {
    // gcd-reduce row r across columns c..cols-1
    for (;;) {
      int piv = -1;
      for (int j = c; j < cols; ++j)
        if (a(r, j) != 0 && (piv < 0 || abs(a(r, j)) < abs(a(r, piv)))) piv = j;
      if (piv < 0) break;
      if (piv != c) a.swap_cols(piv, c);
      bool clean = true;
      for (int j = c + 1; j < cols; ++j) {
        if (a(r, j) == 0) continue;
        const Int q = floor_div(a(r, j), a(r, c));
        for (int i = 0; i < rows; ++i) a(i, j) -= q * a(i, c);
        if (a(r, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(r, c) != 0) {
      if (a(r, c) < 0)
        for (int i = 0; i < rows; ++i) a(i, c) = -a(i, c);
      // reduce earlier columns against this pivot for a canonical form
      for (int j = 0; j < c; ++j) {
        const Int q = floor_div(a(r, j), a(r, c));
        if (q != 0)
          for (int i = 0; i < rows; ++i) a(i, j) -= q * a(i, c);
      }
      ++c;
    }
  }
  IntMat basis(rows, c);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < c; ++j) basis(i, j) = a(i, j);
  return basis;
}

std::array<int, 3> inertia(const RatMat& sym) {
  if (!sym.is_symmetric()) throw MathError("inertia: matrix not symmetric");
  RatMat a = sym;
  const int n = a.rows();
  int pos = 0, neg = 0, zero = 0;
  for (int t = 0; t < n; ++t) {
    if (a(t, t) == 0) {
      // look for a nonzero diagonal entry to swap in
      int di = -1;
      for (int i = t + 1; i < n; ++i)
        if (a(i, i) != 0) {
          di = i;
          break;
        }
      if (di >= 0) {
        a.swap_rows(t, di);
        a.swap_cols(t, di);
      } else {
        // all remaining diagonal zero: find off-diagonal entry
        int oi = -1, oj = -1;
        for (int i = t; i < n && oi < 0; ++i)
          for (int j = i + 1; j < n; ++j)
            if (a(i, j) != 0) {
              oi = i;
              oj = j;
              break;
            }
        if (oi < 0) {
          zero += n - t;
          break;
        }
        // congruence: add row/col oj into oi, making a(oi,oi) = 2 a(oi,oj) != 0
        for (int j = 0; j < n; ++j) a(oi, j) += a(oj, j);
        for (int i = 0; i < n; ++i) a(i, oi) += a(i, oj);
        if (oi != t) {
          a.swap_rows(t, oi);
          a.swap_cols(t, oi);
        }
      }
    }
    const Rat p = a(t, t);
    if (p > 0)
      ++pos;
    else
      ++neg;
    for (int i = t + 1; i < n; ++i) {
      if (a(i, t) == 0) continue;
      const Rat f = a(i, t) / p;
      for (int j = t; j < n; ++j) a(i, j) -= f * a(t, j);
      for (int j = t; j < n; ++j) a(j, i) = a(i, j);
    }
  }
  return {pos, neg, zero};
}

std::optional<LdlResult> ldl_decompose(const RatMat& g) {
  if (!g.is_symmetric()) return std::nullopt;
  const int n = g.rows();
  RatMat l = RatMat::identity(n);
  RatVec d(n, Rat(0));
  bool pd = true;
  for (int i = 0; i < n; ++i) {
    Rat di = g(i, i);
    for (int k = 0; k < i; ++k) di -= l(i, k) * l(i, k) * d[k];
    d[i] = di;
    if (di <= 0) pd = false;
    for (int j = i + 1; j < n; ++j) {
      Rat x = g(j, i);
      for (int k = 0; k < i; ++k) x -= l(j, k) * l(i, k) * d[k];
      if (di == 0) {
        if (x != 0) return std::nullopt;  // no LDL without pivoting
        l(j, i) = 0;
      } else {
        l(j, i) = x / di;
      }
    }
  }
  return LdlResult{std::move(l), std::move(d), pd};
}

}  // namespace perfrel

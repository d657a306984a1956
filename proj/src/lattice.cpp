#include "perfrel/lattice.hpp"

#include <algorithm>

namespace perfrel {

Lattice::Lattice(RatMat gram, std::string label)
    : n_(gram.rows()), gram_(std::move(gram)), label_(std::move(label)) {
  if (gram_.rows() != gram_.cols() || n_ == 0)
    throw MathError("Lattice: Gram matrix must be square and nonempty");
  if (!gram_.is_symmetric()) throw MathError("Lattice: Gram matrix not symmetric");
  const auto ldl = ldl_decompose(gram_);
  if (!ldl || !ldl->positive_definite)
    throw MathError("Lattice: Gram matrix not positive definite");
}

Rat Lattice::inner(const IntVec& x, const IntVec& y) const {
  Rat s = 0;
  for (int i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n_; ++j) {
      if (y[j] == 0) continue;
      s += Rat(x[i] * y[j]) * gram_(i, j);
    }
  }
  return s;
}

Rat Lattice::inner(const RatVec& x, const RatVec& y) const {
  Rat s = 0;
  for (int i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n_; ++j) {
      if (y[j] == 0) continue;
      s += x[i] * y[j] * gram_(i, j);
    }
  }
  return s;
}

Lattice Lattice::rescaled(const Rat& divisor) const {
  if (divisor <= 0) throw MathError("Lattice::rescaled: divisor must be positive");
  RatMat g = gram_;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) g(i, j) /= divisor;
  return Lattice(std::move(g), label_);
}

bool MinimalVectorSet::contains(const IntVec& x) const {
  // sign canonicalization only: a non-primitive multiple of a minimal
  // vector is not a minimal vector
  IntVec c = x;
  for (const Int& v : c) {
    if (v == 0) continue;
    if (v < 0)
      for (Int& w : c) w = -w;
    break;
  }
  return std::binary_search(vectors.begin(), vectors.end(), c);
}

namespace {

struct Enumerator {
  int n;
  const RatMat& l;  // unit lower triangular
  const RatVec& d;  // positive diagonal
  Rat bound;
  std::vector<std::pair<IntVec, Rat>> out;
  IntVec x;
  RatVec c;  // c[i] = sum_{j>i} l(j,i) * x_j

  void run() {
    x.assign(n, Int(0));
    c.assign(n, Rat(0));
    descend(n - 1, bound);
  }

  // remaining budget `t` at level i: sum_{k<=i} d[k] (x_k + c_k)^2 <= t
  void descend(int i, const Rat& t) {
    const Rat radicand = t / d[i];
    const Int lo = ceil_sub_sqrt(-c[i], radicand);
    const Int hi = floor_add_sqrt(-c[i], radicand);
    for (Int xi = lo; xi <= hi; ++xi) {
      const Rat y = Rat(xi) + c[i];
      const Rat contrib = d[i] * y * y;
      if (contrib > t) continue;
      x[i] = xi;
      if (i == 0) {
        record(bound - (t - contrib));
      } else {
        for (int j = 0; j < i; ++j) c[j] += l(i, j) * Rat(xi);
        descend(i - 1, t - contrib);
        for (int j = 0; j < i; ++j) c[j] -= l(i, j) * Rat(xi);
      }
    }
    x[i] = 0;
  }

  void record(const Rat& norm) {
    bool nonzero = false;
    int first = -1;
    for (int i = 0; i < n; ++i)
      if (x[i] != 0) {
        nonzero = true;
        first = i;
        break;
      }
    if (!nonzero) return;
    if (x[first] < 0) return;  // keep one vector per +/- pair
    out.emplace_back(x, norm);
  }
};

}  // namespace

std::vector<std::pair<IntVec, Rat>> enumerate_up_to(const Lattice& lat,
                                                    const Rat& bound) {
  if (bound <= 0) return {};
  const auto ldl = ldl_decompose(lat.gram());
  if (!ldl || !ldl->positive_definite)
    throw MathError("enumerate_up_to: Gram matrix not positive definite");
  Enumerator e{lat.dim(), ldl->l, ldl->d, bound, {}, {}, {}};
  e.run();
  std::sort(e.out.begin(), e.out.end());
  return e.out;
}

MinimalVectorSet minimal_vectors(const Lattice& lat) {
  Rat bound = lat.gram()(0, 0);
  for (int i = 1; i < lat.dim(); ++i) bound = std::min(bound, lat.gram()(i, i));
  const auto found = enumerate_up_to(lat, bound);
  if (found.empty())
    throw MathError("minimal_vectors: enumeration found nothing below the diagonal bound");
  Rat min = found.front().second;
  for (const auto& [v, norm] : found) min = std::min(min, norm);
  MinimalVectorSet s;
  s.min = min;
  for (const auto& [v, norm] : found)
    if (norm == min) s.vectors.push_back(v);
  return s;
}

RatVec components_in_basis(const RatMat& basis_cols, const RatVec& x) {
  if (basis_cols.rows() != static_cast<int>(x.size()))
    throw MathError("components_in_basis: dimension mismatch");
  if (basis_cols.rows() != basis_cols.cols())
    throw MathError("components_in_basis: basis must be square");
  return solve_linear(basis_cols, x);
}

RatVec components_in_basis(const RatMat& basis_cols, const IntVec& x) {
  return components_in_basis(basis_cols, to_rational(x));
}

bool is_well_rounded(const Lattice& l) {
  const MinimalVectorSet s = minimal_vectors(l);
  RatMat m(l.dim(), s.count());
  for (int j = 0; j < s.count(); ++j)
    for (int i = 0; i < l.dim(); ++i) m(i, j) = Rat(s.vectors[j][i]);
  return rank_exact(m) == l.dim();
}

Lattice sublattice_gram(const Lattice& l, const std::vector<IntVec>& v) {
  const int m = static_cast<int>(v.size());
  if (m == 0) throw MathError("sublattice_gram: empty vector list");
  RatMat cols(l.dim(), m);
  for (int j = 0; j < m; ++j) {
    if (static_cast<int>(v[j].size()) != l.dim())
      throw MathError("sublattice_gram: wrong coordinate length");
    for (int i = 0; i < l.dim(); ++i) cols(i, j) = Rat(v[j][i]);
  }
  if (rank_exact(cols) != m) throw MathError("sublattice_gram: dependent vectors");
  RatMat g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g(i, j) = l.inner(v[i], v[j]);
  return Lattice(std::move(g), l.label());
}

AdjoinResult adjoin_glue(const Lattice& l, const std::vector<RatVec>& glue) {
  const int n = l.dim();
  Int scale = 1;
  for (const auto& g : glue) {
    if (static_cast<int>(g.size()) != n)
      throw MathError("adjoin_glue: wrong coordinate length");
    for (const Rat& x : g) scale = lcm(scale, den(x));
  }
  IntMat gens(n, n + static_cast<int>(glue.size()));
  for (int i = 0; i < n; ++i) gens(i, i) = scale;
  for (size_t k = 0; k < glue.size(); ++k)
    for (int i = 0; i < n; ++i)
      gens(i, n + static_cast<int>(k)) =
          num(glue[k][i]) * (scale / den(glue[k][i]));
  const IntMat h = hermite_column_basis(gens);
  if (h.cols() != n) throw MathError("adjoin_glue: degenerate generator set");
  RatMat basis(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) basis(i, j) = Rat(h(i, j), scale);
  RatMat bt(n, n);
  // Gram of new basis: B^T G B
  const RatMat gb = l.gram() * basis;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat s = 0;
      for (int k = 0; k < n; ++k) s += basis(k, i) * gb(k, j);
      bt(i, j) = s;
    }
  return AdjoinResult{Lattice(std::move(bt), l.label()), basis};
}

IntVec lattice_coords(const RatMat& basis_cols, const RatVec& x) {
  const RatVec c = components_in_basis(basis_cols, x);
  IntVec out(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    if (den(c[i]) != 1)
      throw MathError("lattice_coords: vector is not in the lattice");
    out[i] = num(c[i]);
  }
  return out;
}

}  // namespace perfrel

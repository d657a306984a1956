#pragma once

// Small polynomial engine over the symbolic Gram entries t_{i,j}
// (0 <= i <= j < n). A symbolic norm N(x) = sum_k sum_l x_k x_l t_{k,l}
// expands to a GramPolynomial; identities between weighted sums of norms are
// decided by exact coefficient comparison. Degrees never exceed 1 per
// variable in this library's own use, but the representation is a general
// sparse exponent map and does not assume that.

#include "perfrel/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace perfrel {

// Variable t_{i,j} with i <= j (t_{j,i} is normalized to t_{i,j}).
using GramVar = std::pair<int, int>;
// Monomial = exponent map, zero exponents never stored.
using GramMonomial = std::map<GramVar, int>;

class GramPolynomial {
 public:
  explicit GramPolynomial(int dimension = 0) : dim_(dimension) {}

  int dimension() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<GramMonomial, Rat>& terms() const { return terms_; }

  // coefficient access; returns 0 for absent monomials
  Rat coefficient(const GramMonomial& m) const;
  Rat coefficient_of_var(int i, int j) const;  // degree-1 monomial t_{i,j}

  void add_term(const GramMonomial& m, const Rat& c);

  GramPolynomial& operator+=(const GramPolynomial& o);
  GramPolynomial& operator-=(const GramPolynomial& o);
  GramPolynomial& operator*=(const Rat& c);
  GramPolynomial operator*(const GramPolynomial& o) const;

  bool operator==(const GramPolynomial& o) const {
    return dim_ == o.dim_ && terms_ == o.terms_;
  }

  std::string str() const;

 private:
  int dim_;
  std::map<GramMonomial, Rat> terms_;
};

inline GramPolynomial operator+(GramPolynomial a, const GramPolynomial& b) {
  a += b;
  return a;
}
inline GramPolynomial operator-(GramPolynomial a, const GramPolynomial& b) {
  a -= b;
  return a;
}
inline GramPolynomial operator*(const Rat& c, GramPolynomial p) {
  p *= c;
  return p;
}

// Symbolic norm of x = sum x_k eps_k: sum_{k,l} x_k x_l t_{k,l}.
GramPolynomial formal_norm(const RatVec& coords);

// Weighted term of a formal norm identity.
struct NormTerm {
  Rat coefficient;
  RatVec coords;
};

// True iff sum_i lhs_i.coefficient * N(lhs_i.coords) equals the analogous
// right-hand sum as a polynomial identity in the t_{i,j}. All coordinate
// vectors must have the same length.
bool verify_formal_identity(const std::vector<NormTerm>& lhs,
                            const std::vector<NormTerm>& rhs);

}  // namespace perfrel

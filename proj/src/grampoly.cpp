#include "perfrel/grampoly.hpp"

#include <sstream>

namespace perfrel {

Rat GramPolynomial::coefficient(const GramMonomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat GramPolynomial::coefficient_of_var(int i, int j) const {
  if (i > j) std::swap(i, j);
  GramMonomial m;
  m[{i, j}] = 1;
  return coefficient(m);
}

void GramPolynomial::add_term(const GramMonomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GramPolynomial& GramPolynomial::operator+=(const GramPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GramPolynomial& GramPolynomial::operator-=(const GramPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GramPolynomial& GramPolynomial::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

GramPolynomial GramPolynomial::operator*(const GramPolynomial& o) const {
  GramPolynomial out(dim_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      GramMonomial m = ma;
      for (const auto& [v, e] : mb) m[v] += e;
      out.add_term(m, ca * cb);
    }
  return out;
}

std::string GramPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    for (const auto& [v, e] : m) {
      os << "*t[" << v.first + 1 << "," << v.second + 1 << "]";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

GramPolynomial formal_norm(const RatVec& coords) {
  const int n = static_cast<int>(coords.size());
  GramPolynomial p(n);
  for (int k = 0; k < n; ++k) {
    if (coords[k] == 0) continue;
    for (int l = k; l < n; ++l) {
      if (coords[l] == 0) continue;
      GramMonomial m;
      m[{k, l}] = 1;
      const Rat c = (k == l) ? coords[k] * coords[k] : 2 * coords[k] * coords[l];
      p.add_term(m, c);
    }
  }
  return p;
}

bool verify_formal_identity(const std::vector<NormTerm>& lhs,
                            const std::vector<NormTerm>& rhs) {
  size_t n = 0;
  for (const auto& t : lhs) n = std::max(n, t.coords.size());
  for (const auto& t : rhs) n = std::max(n, t.coords.size());
  auto accumulate = [&](const std::vector<NormTerm>& terms) {
    GramPolynomial p(static_cast<int>(n));
    for (const auto& t : terms) {
      if (t.coords.size() != n)
        throw MathError("verify_formal_identity: mixed coordinate lengths");
      p += t.coefficient * formal_norm(t.coords);
    }
    return p;
  };
  return accumulate(lhs) == accumulate(rhs);
}

}  // namespace perfrel

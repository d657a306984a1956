#include "perfrel/rational.hpp"

namespace perfrel {

Rat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    const Int p(text.substr(0, slash));
    const Int q(text.substr(slash + 1));
    if (q == 0) throw MathError("parse_rat: zero denominator in '" + text + "'");
    return Rat(p, q);
  } catch (const std::exception&) {
    throw MathError("parse_rat: cannot parse '" + text + "'");
  }
}

std::string to_string(const Rat& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

std::string to_string(const Int& n) { return n.str(); }

Int gcd_all(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, abs(x));
  return g;
}

IntVec primitive_integer(const IntVec& v) {
  Int g = gcd_all(v);
  if (g == 0) return v;
  int s = 0;
  for (const Int& x : v) {
    if (x != 0) {
      s = sign(x);
      break;
    }
  }
  if (s < 0) g = -g;
  IntVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

IntVec primitive_integer(const RatVec& v) {
  Int l = 1;
  for (const Rat& x : v) l = lcm(l, den(x));
  IntVec w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = num(v[i]) * (l / den(v[i]));
  return primitive_integer(w);
}

}  // namespace perfrel

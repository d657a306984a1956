#pragma once

// Exact scalar types used throughout: arbitrary-precision integers and
// always-reduced rationals (positive denominator), plus the handful of
// integer/rational helpers the elimination and enumeration code needs.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace perfrel {

// expression templates off: plain value semantics for auto and ?:
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Mathematical precondition failures (singular matrix, indefinite Gram,
// invalid relation data, ...). The CLI maps these to exit code 2.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reserved for operations the library deliberately does not provide.
class NotImplementedError : public MathError {
 public:
  using MathError::MathError;
};

inline Int num(const Rat& r) { return numerator(r); }
inline Int den(const Rat& r) { return denominator(r); }

inline int sign(const Int& x) { return x.sign(); }
inline int sign(const Rat& x) { return numerator(x).sign(); }

// Floor division (quotient rounded toward -inf); cpp_int '/' truncates.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int floor_rat(const Rat& r) { return floor_div(num(r), den(r)); }
inline Int ceil_rat(const Rat& r) { return -floor_rat(-r); }

// floor(sqrt(r)) for r >= 0.
inline Int isqrt(const Int& n) {
  if (n < 0) throw MathError("isqrt of negative integer");
  return sqrt(n);
}

// Largest integer x with x <= a + sqrt(r); requires r >= 0.
// Used for exact enumeration interval endpoints.
inline Int floor_add_sqrt(const Rat& a, const Rat& r) {
  if (r < 0) throw MathError("floor_add_sqrt: negative radicand");
  const Int p = num(r), q = den(r);
  // isqrt(p*q)/q <= sqrt(r) < (isqrt(p*q)+1)/q
  const Int s = isqrt(p * q);
  Int x = floor_rat(a + Rat(s, den(r)));
  // fix up: x+1 <= a + sqrt(r)  <=>  (x+1-a) <= 0 or (x+1-a)^2 <= r
  for (;;) {
    const Rat y = Rat(x + 1) - a;
    if (y <= 0 || y * y <= r)
      ++x;
    else
      break;
  }
  return x;
}

// Smallest integer x with x >= a - sqrt(r).
inline Int ceil_sub_sqrt(const Rat& a, const Rat& r) {
  return -floor_add_sqrt(-a, r);
}

Rat parse_rat(const std::string& text);
std::string to_string(const Rat& r);
std::string to_string(const Int& n);

// gcd of absolute values; gcd of an empty/all-zero set is 0.
Int gcd_all(const IntVec& v);

// Scale a rational vector to a primitive integer vector (gcd 1) whose
// first nonzero entry is positive. Zero vectors are returned as zeros.
IntVec primitive_integer(const RatVec& v);
IntVec primitive_integer(const IntVec& v);

}  // namespace perfrel

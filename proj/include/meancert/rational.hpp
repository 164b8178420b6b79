#pragma once

#include <gmpxx.h>

#include <string>

namespace meancert {

// Exact rational arithmetic.  gmpxx keeps values canonical through all
// arithmetic, so equality and sign queries are always exact.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Every finite double is a dyadic rational; the conversion is exact.
inline Rational rational_from_double(double v) { return Rational(v); }

inline int sign_of(const Rational& q) { return sgn(q); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace meancert

#pragma once

#include <cmath>
#include <stdexcept>

#include "meancert/bigfloat.hpp"
#include "meancert/errors.hpp"
#include "meancert/interval.hpp"

namespace meancert {

// Pair of strictly positive finite reals.
struct PositivePair {
  double a, b;

  PositivePair(double a_, double b_) : a(a_), b(b_) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
      throw std::domain_error("PositivePair: arguments must be finite and > 0");
  }
};

// Convex weight in [1/2, 1].
struct Weight {
  double p;

  explicit Weight(double p_) : p(p_) {
    if (!(p >= 0.5) || !(p <= 1.0))
      throw WeightOutOfRange("Weight: p must lie in [1/2, 1]");
  }
};

// --- double path ------------------------------------------------------------
//
// All four means are evaluated internally in extended precision, so the
// returned doubles are faithfully rounded and the symmetry / homogeneity /
// mean-property invariants hold to within a couple of ulps.

double arithmetic_mean(const PositivePair& ab);
double root_mean_square(const PositivePair& ab);
double second_seiffert(const PositivePair& ab);
double neuman_sandor(const PositivePair& ab);
double weighted_rms(const PositivePair& ab, const Weight& w);

// Cancellation-free asinh: never forms log(x + sqrt(x^2+1)) for small x.
double asinh_stable(double x);

// --- generic kernels --------------------------------------------------------
//
// The same formulas instantiated over BigFloat (round-to-nearest) and
// CertInterval (outward).  Scalars S need +,-,*,/ with S and long, sqrt,
// asinh, atan, and a make_like factory.  Callers guarantee a != b for the
// two difference-quotient means.

template <class S>
S arithmetic_mean_of(const S& a, const S& b) {
  return (a + b) / 2;
}

template <class S>
S root_mean_square_of(const S& a, const S& b) {
  return sqrt((a * a + b * b) / 2);
}

template <class S>
S second_seiffert_of(const S& a, const S& b) {
  S sum = a + b;
  return (a - b) / (2 * atan((a - b) / sum));
}

template <class S>
S neuman_sandor_of(const S& a, const S& b) {
  S sum = a + b;
  return (a - b) / (2 * asinh((a - b) / sum));
}

template <class S>
S weighted_rms_of(const S& a, const S& b, const S& p) {
  S one = make_like(p, 1);
  S u = p * a + (one - p) * b;
  S v = (one - p) * a + p * b;
  return sqrt((u * u + v * v) / 2);
}

// --- high-precision path ----------------------------------------------------

BigFloat arithmetic_mean(const PositivePair& ab, long precision_bits);
BigFloat root_mean_square(const PositivePair& ab, long precision_bits);
BigFloat second_seiffert(const PositivePair& ab, long precision_bits);
BigFloat neuman_sandor(const PositivePair& ab, long precision_bits);
BigFloat weighted_rms(const PositivePair& ab, const Weight& w,
                      long precision_bits);

// --- certified path ---------------------------------------------------------

CertInterval arithmetic_mean_enclosure(const PositivePair& ab,
                                       long precision_bits);
CertInterval root_mean_square_enclosure(const PositivePair& ab,
                                        long precision_bits);
CertInterval second_seiffert_enclosure(const PositivePair& ab,
                                       long precision_bits);
CertInterval neuman_sandor_enclosure(const PositivePair& ab,
                                     long precision_bits);
CertInterval weighted_rms_enclosure(const PositivePair& ab, const Weight& w,
                                    long precision_bits);

}  // namespace meancert

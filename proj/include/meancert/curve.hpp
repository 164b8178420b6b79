#pragma once

#include <vector>

#include "meancert/bigfloat.hpp"
#include "meancert/interval.hpp"
#include "meancert/means.hpp"

namespace meancert {

// One point of the equality curve p(t): the weight at which the
// weighted-argument root-mean-square of (t, 1) meets the mean M(t, 1).
struct CurveSample {
  double t;
  double p_eq;
  double m_value;
  double residual;  // weighted_rms at p_eq minus m_value
};

// Solves S_w((t,1), p) = M(t,1) for p by bisection on [1/2, 1]; the weighted
// RMS is strictly increasing in p and brackets M between A and S.
double equality_weight(double t, double rel_tol = 1e-12);

// Same curve point at high precision; the bisection tolerance is driven by
// the requested precision.
BigFloat equality_weight_hp(double t, long precision_bits);

struct LimitWeights {
  double p_near_one;     // equality weight at t = 1 + 1e-4, approximates mu
  double p_at_infinity;  // equality weight at t = 1e6, approximates lambda
};

LimitWeights limit_weights(long precision_bits);

// Sharpness witness for the lower weight: for p above lambda the weighted
// RMS eventually overtakes M.  t0 sits in a certified crossing bracket
// [bracket_lo, bracket_hi] when the difference is also certified negative
// somewhere below (has_bracket); S_w > M is certified at 2*t0 and 10*t0.
struct CrossingWitness {
  double t0;
  bool has_bracket;
  double bracket_lo;
  double bracket_hi;
  long precision_bits;
};

CrossingWitness lambda_witness(const Weight& p, long precision_bits);

// Sharpness witness for the upper weight: for p below mu the mean M stays
// above the weighted RMS on a right neighborhood (1, 1+delta); M > S_w is
// certified at 1 + delta/2.
struct SmallRatioWitness {
  double delta;
  long precision_bits;
};

SmallRatioWitness mu_witness(const Weight& p, long precision_bits);

// Certifies the strict chain S_lambda < M < S_mu for one pair, escalating
// precision if the enclosures touch.
bool verify_theorem(const PositivePair& ab, long precision_bits);

// Equality-curve sweep used by the CSV emitter.
std::vector<CurveSample> sample_curve(double t_min, double t_max, int samples,
                                      bool log_spacing);

}  // namespace meancert

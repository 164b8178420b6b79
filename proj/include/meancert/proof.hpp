#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "meancert/bigfloat.hpp"
#include "meancert/constants.hpp"
#include "meancert/errors.hpp"
#include "meancert/interval.hpp"
#include "meancert/polynomial.hpp"
#include "meancert/quadext.hpp"
#include "meancert/rational.hpp"

namespace meancert {

// ---------------------------------------------------------------------------
// The objects certified here replay the monotonicity proof of the sharp
// two-sided weighted root-mean-square bound for the mean
// M(a,b) = (a-b)/(2 arcsinh((a-b)/(a+b))).  Everything is parameterized by
// the weight p and the ratio t = a/b > 1:
//
//   Q(t)  = [pt+(1-p)]^2 + [p+(1-p)t]^2
//   f(t)  = sqrt(2) arcsinh((t-1)/(t+1)) - (t-1)/sqrt(Q(t))
//   f1(t) = 2 Q(t)^{3/2} - (1+t)^2 sqrt(1+t^2)   (same sign as f'(t) for t>1)
//   g1..g4: the polynomial chain with g2 = g1'/2, g3 = g2'/6, g4 = g3',
//           built from the degree-6 coefficient polynomials A6, B6, C6 in p.
//
// The difference of squares 4 Q^3 - (1+t)^4 (1+t^2) factors as (t-1)^2 g1(t),
// which transfers sign questions about f1 to the polynomial g1.
// ---------------------------------------------------------------------------

// Evaluates a polynomial with integer coefficients (descending degree) at p.
template <class F>
F eval_int_poly_desc(const F& p, std::initializer_list<long> descending) {
  F acc = make_like(p, 0);
  for (long c : descending) acc = acc * p + make_like(p, c);
  return acc;
}

// 32p^6 - 96p^5 + 144p^4 - 128p^3 + 72p^2 - 24p + 3 (leading coefficient of g1).
template <class F>
F a6_coeff(const F& p) {
  return eval_int_poly_desc(p, {32, -96, 144, -128, 72, -24, 3});
}

// 64p^6 - 192p^5 + 240p^4 - 160p^3 + 48p^2 - 1.
template <class F>
F b6_coeff(const F& p) {
  return eval_int_poly_desc(p, {64, -192, 240, -160, 48, 0, -1});
}

// 32p^6 - 96p^5 + 112p^4 - 64p^3 + 24p^2 - 8p + 1.
template <class F>
F c6_coeff(const F& p) {
  return eval_int_poly_desc(p, {32, -96, 112, -64, 24, -8, 1});
}

// Q(t), ascending coefficients [(1-p)^2 + p^2, 4p(1-p), p^2 + (1-p)^2].
template <class F>
Polynomial<F> q_poly(const F& p) {
  F one = make_like(p, 1);
  F c = (one - p) * (one - p) + p * p;
  F mid = make_like(p, 4) * p * (one - p);
  return Polynomial<F>({c, mid, c});
}

// Q(t) evaluated directly (usable when t lives in a different carrier
// than a polynomial would force, e.g. interval t with interval p).
template <class S>
S q_value(const S& p, const S& t) {
  S one = make_like(p, 1);
  S u = p * t + (one - p);
  S v = p + (one - p) * t;
  return u * u + v * v;
}

template <class F>
struct GQuartet {
  Polynomial<F> g1, g2, g3, g4;
};

// The four displayed polynomials; degrees 4, 3, 2, 1.
template <class F>
GQuartet<F> g_polys(const F& p) {
  F a = a6_coeff(p), b = b6_coeff(p), c = c6_coeff(p);
  F m2 = make_like(p, -2), m3 = make_like(p, -3);
  F two = make_like(p, 2), six = make_like(p, 6);
  GQuartet<F> g;
  g.g1 = Polynomial<F>({a, m2 * b, six * c, m2 * b, a});
  g.g2 = Polynomial<F>({make_like(p, -1) * b, six * c, m3 * b, two * a});
  g.g3 = Polynomial<F>({c, make_like(p, -1) * b, a});
  g.g4 = Polynomial<F>({make_like(p, -1) * b, two * a});
  return g;
}

// Closed forms for g_k(1).
template <class F>
F g_at_one(int k, const F& p) {
  switch (k) {
    case 1:
    case 2:
      return eval_int_poly_desc(p, {96, -96, 16});
    case 3:
      return eval_int_poly_desc(p, {16, -32, 48, -32, 5});
    case 4:
      return eval_int_poly_desc(p, {48, -96, 96, -48, 7});
    default:
      throw std::out_of_range("g_at_one: k must be 1..4");
  }
}

// --- scalar functions -------------------------------------------------------

// f(t) = sqrt(2) arcsinh((t-1)/(t+1)) - (t-1)/sqrt(Q(t)); generic kernel.
template <class S>
S f_value(const S& p, const S& t) {
  S one = make_like(t, 1);
  S x = (t - one) / (t + one);
  return sqrt(make_like(t, 2)) * asinh(x) - (t - one) / sqrt(q_value(p, t));
}

// Limit of f as t -> infinity: sqrt(2) ln(1+sqrt(2)) - 1/sqrt(2p^2-2p+1).
template <class S>
S f_limit_value(const S& p) {
  S two = make_like(p, 2);
  S c = two * p * p - two * p + make_like(p, 1);
  return sqrt(two) * asinh(make_like(p, 1)) - make_like(p, 1) / sqrt(c);
}

// f1(t) = 2 Q^{3/2} - (1+t)^2 sqrt(1+t^2).
template <class S>
S f1_value(const S& p, const S& t) {
  S one = make_like(t, 1);
  S q = q_value(p, t);
  return make_like(t, 2) * q * sqrt(q) - (one + t) * (one + t) * sqrt(one + t * t);
}

// Double-precision paths.  For t > 1e8 the direct formula for f loses all
// significant digits against the limit; that branch switches to an exact
// rearrangement around the limit value (see f_eval implementation).
double f_eval(double p, double t);
double f_limit(double p);
double f1_eval(double p, double t);

// High-precision and certified paths.
BigFloat f_eval(double p, double t, long precision_bits);
BigFloat f_limit(double p, long precision_bits);
BigFloat f1_eval(double p, double t, long precision_bits);
CertInterval f_enclosure(const CertInterval& p, const Rational& t);
CertInterval f1_enclosure(const CertInterval& p, const Rational& t);

// --- exact algebraic checks -------------------------------------------------

struct CoefficientCheck {
  bool ok = true;
  int first_mismatch = -1;
  std::string detail;
};

// Coefficientwise equality of 4 Q(t)^3 - (1+t)^4 (1+t^2) with (t-1)^2 g1(t),
// expanded exactly in the coefficient field; additionally both sides are
// evaluated at each sample t (exactly) and must agree there too.
template <class F>
CoefficientCheck verify_square_difference_identity(
    const F& p, const std::vector<Rational>& sample_ts = {});

struct TowerCheck {
  bool ok = true;
  std::string failed_relation;  // "g2 = g1'/2", "g3 = g2'/6" or "g4 = g3'"
};

// Checks the derivative chain on an already-built quartet (so tests can feed
// corrupted fixtures), and the convenience form that builds from p.
template <class F>
TowerCheck tower_check(const GQuartet<F>& g);

template <class F>
TowerCheck derivative_tower_check(const F& p) {
  return tower_check(g_polys(p));
}

// g1 at the upper sharp weight equals (5t^4 - 2t^3 - 6t^2 - 2t + 5)/27 with
// every sqrt(3)-component vanishing exactly.
CoefficientCheck mu_factorization_check();

// --- sign certificates -------------------------------------------------------

enum class CertStatus { definite, exact, inconclusive };
enum class CertExpect { negative, positive, encloses_zero };

inline const char* to_string(CertStatus s) {
  switch (s) {
    case CertStatus::definite: return "definite";
    case CertStatus::exact: return "exact";
    case CertStatus::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

// One certified numerical fact: an enclosure (outward decimal endpoints)
// whose sign settles the stated claim.
struct SignCertificate {
  std::string id;
  std::string claim;
  std::string lower;
  std::string upper;
  Sign sign = Sign::indeterminate;
  CertExpect expected = CertExpect::negative;
  long precision_bits = 0;
  CertStatus status = CertStatus::inconclusive;
  bool ok = false;
};

// Runs attempt(prec) at prec = start, 2*start, ... up to the cap; the first
// engaged result wins.  Throws InconclusiveSign when the cap is exhausted.
template <class T, class Fn>
T with_escalation(Fn&& attempt, long start, const std::string& what,
                  long cap = kMaxPrecision) {
  long p = std::max(start, kMinPrecision);
  while (true) {
    std::optional<T> r = attempt(p);
    if (r) return *r;
    if (p >= cap) break;
    p = std::min(p * 2, cap);
  }
  throw InconclusiveSign(what, cap);
}

// Certifies the sign of eval(prec) by escalation; throws InconclusiveSign if
// the expected strict sign cannot be separated from zero at the cap.
SignCertificate certify_sign(
    const std::string& id, const std::string& claim,
    const std::function<CertInterval(long)>& eval, CertExpect expected,
    long start_precision);

// The four sign facts at p = lambda: g1(1) = g2(1) < 0, g3(1) < 0,
// g4(1) < 0, and the leading coefficient A6 > 0.
std::vector<SignCertificate> certify_lambda_signs(long precision_bits);

// Enclosure of the limit of f at p = lambda; must contain 0 with tiny width.
SignCertificate certify_lambda_limit(long precision_bits);

// --- root isolation ----------------------------------------------------------

struct IsolatingInterval {
  Rational lo, hi;
  Sign at_lo = Sign::indeterminate;
  Sign at_hi = Sign::indeterminate;
};

using IntervalFn =
    std::function<CertInterval(const Rational& t, long precision_bits)>;

// Sign-change bisection with certified endpoint signs.  Scans a uniform grid,
// then refines each sign-change cell to the requested width.  Roots of even
// multiplicity produce no sign change and are not reported.
std::vector<IsolatingInterval> isolate_roots(const IntervalFn& fn,
                                             const Rational& lo,
                                             const Rational& hi,
                                             const Rational& width,
                                             long precision_bits,
                                             int grid_cells = 64);

// Exact-arithmetic variant for rational-coefficient polynomials; endpoint
// signs are exact, so no precision escalation is involved.
std::vector<IsolatingInterval> isolate_roots(const Polynomial<Rational>& poly,
                                             const Rational& lo,
                                             const Rational& hi,
                                             const Rational& width,
                                             int grid_cells = 64);

// --- the monotonicity cascade -------------------------------------------------

struct CascadeStage {
  std::string function_name;           // "g4", "g3", "g2", "f1", "g1"
  CertInterval root;                   // certified isolating interval
  std::vector<SignCertificate> samples;  // negative before, positive after
  bool certified = false;
};

struct CascadeReport {
  CertInterval t0, t1, t2, t3;
  std::vector<CascadeStage> stages;
  std::vector<SignCertificate> lambda_certificates;
  std::vector<SignCertificate> f_certificates;      // f(1)=0, f<0 samples, limit
  std::vector<SignCertificate> limit_certificates;  // g1..g4 > 0 at t = 1e9
  bool ordering_certified = false;
  bool all_certified = false;
  long precision_bits = 0;
};

// Isolates t0 < t1 < t2 < t3 (roots of g4, g3, g2 and of f1, all at
// p = lambda), certifies the negative-before/positive-after sign patterns on
// quartile sample points, and certifies f < 0 at interior samples together
// with f(1) = 0 and the zero limit enclosure.
CascadeReport cascade(long precision_bits);

// Everything the certify pipeline produces, flattened for reporting.
struct CertificationRun {
  long precision_bits = 0;
  std::vector<SignCertificate> certificates;
  bool identity_ok = false;     // squared-difference identity, sampled p
  bool tower_ok = false;        // derivative chain, sampled p
  bool mu_ok = false;           // exact factorization at the upper weight
  bool cascade_ordering_ok = false;
  bool all_passed = false;
};

CertificationRun certify_all(long precision_bits);

// --- template implementations -------------------------------------------------

template <class F>
CoefficientCheck verify_square_difference_identity(
    const F& p, const std::vector<Rational>& sample_ts) {
  Polynomial<F> q = q_poly(p);
  Polynomial<F> q3 = q * q * q;
  Polynomial<F> lhs =
      Polynomial<F>({make_like(p, 4)}) * q3 -
      Polynomial<F>::from_longs(p, {1, 4, 6, 4, 1}) *
          Polynomial<F>::from_longs(p, {1, 0, 1});
  Polynomial<F> rhs =
      Polynomial<F>::from_longs(p, {1, -2, 1}) * g_polys(p).g1;

  CoefficientCheck check;
  int top = std::max(lhs.degree(), rhs.degree());
  for (int k = 0; k <= top; ++k) {
    F lc = k <= lhs.degree() ? lhs.coeff(k) : make_like(p, 0);
    F rc = k <= rhs.degree() ? rhs.coeff(k) : make_like(p, 0);
    if (!(lc == rc)) {
      check.ok = false;
      check.first_mismatch = k;
      check.detail = "coefficient mismatch at degree " + std::to_string(k);
      return check;
    }
  }
  for (const Rational& t : sample_ts) {
    F ft = make_like(p, 0) + F(t);  // lift the rational sample into F
    if (!(lhs(ft) == rhs(ft))) {
      check.ok = false;
      check.detail = "pointwise mismatch at t = " + t.get_str();
      return check;
    }
  }
  return check;
}

template <class F>
TowerCheck tower_check(const GQuartet<F>& g) {
  const F* any = &g.g1.coeff(0);
  F two = make_like(*any, 2), six = make_like(*any, 6);
  if (!(two * g.g2 == g.g1.derivative()))
    return {false, "g2 = g1'/2"};
  if (!(six * g.g3 == g.g2.derivative()))
    return {false, "g3 = g2'/6"};
  if (!(g.g4 == g.g3.derivative()))
    return {false, "g4 = g3'"};
  return {};
}

}  // namespace meancert

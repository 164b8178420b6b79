#include "meancert/means.hpp"

#include <cmath>

namespace meancert {
namespace {

// Threshold below which the difference-quotient means switch to truncated
// series in x = (a-b)/(a+b); at |x| < 1e-8 the dropped x^4 terms are below
// 1e-32 relative, far under double rounding error.
constexpr long double kSeriesCut = 1e-8L;

long double asinh_core(long double x) {
  long double ax = fabsl(x);
  long double r;
  if (ax < 0x1p-33L) {
    r = ax;
  } else if (ax < 0.5L) {
    r = log1pl(ax + ax * ax / (1 + sqrtl(ax * ax + 1)));
  } else {
    r = log1pl(ax + (hypotl(1, ax) - 1));
  }
  return copysignl(r, x);
}

}  // namespace

double asinh_stable(double x) {
  if (!std::isfinite(x)) return x;
  double ax = std::fabs(x);
  double r;
  if (ax < 0x1p-27) {
    r = ax;
  } else if (ax < 0.5) {
    r = std::log1p(ax + ax * ax / (1 + std::sqrt(ax * ax + 1)));
  } else if (ax < 0x1p500) {
    r = std::log1p(ax + (std::hypot(1.0, ax) - 1));
  } else {
    r = std::log(ax) + 0.693147180559945309417232121458176568;
  }
  return std::copysign(r, x);
}

double arithmetic_mean(const PositivePair& ab) {
  return static_cast<double>(
      (static_cast<long double>(ab.a) + static_cast<long double>(ab.b)) / 2);
}

double root_mean_square(const PositivePair& ab) {
  long double a = ab.a, b = ab.b;
  return static_cast<double>(sqrtl((a * a + b * b) / 2));
}

double second_seiffert(const PositivePair& ab) {
  if (ab.a == ab.b) return ab.a;
  long double a = ab.a, b = ab.b;
  long double sum = a + b;
  long double x = (a - b) / sum;
  if (fabsl(x) < kSeriesCut)
    return static_cast<double>((sum / 2) * (1 + x * x / 3));
  return static_cast<double>((a - b) / (2 * atanl(x)));
}

double neuman_sandor(const PositivePair& ab) {
  if (ab.a == ab.b) return ab.a;
  long double a = ab.a, b = ab.b;
  long double sum = a + b;
  long double x = (a - b) / sum;
  if (fabsl(x) < kSeriesCut)
    return static_cast<double>((sum / 2) * (1 + x * x / 6));
  return static_cast<double>((a - b) / (2 * asinh_core(x)));
}

double weighted_rms(const PositivePair& ab, const Weight& w) {
  long double a = ab.a, b = ab.b, p = w.p;
  long double u = p * a + (1 - p) * b;
  long double v = (1 - p) * a + p * b;
  return static_cast<double>(sqrtl((u * u + v * v) / 2));
}

namespace {

BigFloat bf(double v, long prec) { return BigFloat(v, prec); }

}  // namespace

BigFloat arithmetic_mean(const PositivePair& ab, long prec) {
  return arithmetic_mean_of(bf(ab.a, prec), bf(ab.b, prec));
}

BigFloat root_mean_square(const PositivePair& ab, long prec) {
  return root_mean_square_of(bf(ab.a, prec), bf(ab.b, prec));
}

BigFloat second_seiffert(const PositivePair& ab, long prec) {
  if (ab.a == ab.b) return bf(ab.a, prec);
  return second_seiffert_of(bf(ab.a, prec), bf(ab.b, prec));
}

BigFloat neuman_sandor(const PositivePair& ab, long prec) {
  if (ab.a == ab.b) return bf(ab.a, prec);
  return neuman_sandor_of(bf(ab.a, prec), bf(ab.b, prec));
}

BigFloat weighted_rms(const PositivePair& ab, const Weight& w, long prec) {
  return weighted_rms_of(bf(ab.a, prec), bf(ab.b, prec), bf(w.p, prec));
}

CertInterval arithmetic_mean_enclosure(const PositivePair& ab, long prec) {
  return arithmetic_mean_of(CertInterval::point(ab.a, prec),
                            CertInterval::point(ab.b, prec));
}

CertInterval root_mean_square_enclosure(const PositivePair& ab, long prec) {
  return root_mean_square_of(CertInterval::point(ab.a, prec),
                             CertInterval::point(ab.b, prec));
}

CertInterval second_seiffert_enclosure(const PositivePair& ab, long prec) {
  if (ab.a == ab.b) return CertInterval::point(ab.a, prec);
  return second_seiffert_of(CertInterval::point(ab.a, prec),
                            CertInterval::point(ab.b, prec));
}

CertInterval neuman_sandor_enclosure(const PositivePair& ab, long prec) {
  if (ab.a == ab.b) return CertInterval::point(ab.a, prec);
  return neuman_sandor_of(CertInterval::point(ab.a, prec),
                          CertInterval::point(ab.b, prec));
}

CertInterval weighted_rms_enclosure(const PositivePair& ab, const Weight& w,
                                    long prec) {
  return weighted_rms_of(CertInterval::point(ab.a, prec),
                         CertInterval::point(ab.b, prec),
                         CertInterval::point(w.p, prec));
}

}  // namespace meancert

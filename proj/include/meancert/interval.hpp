#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>
#include <utility>

#include "meancert/bigfloat.hpp"
#include "meancert/rational.hpp"

namespace meancert {

enum class Sign { negative, zero, positive, indeterminate };

inline const char* to_string(Sign s) {
  switch (s) {
    case Sign::negative: return "negative";
    case Sign::zero: return "zero";
    case Sign::positive: return "positive";
    case Sign::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

// Closed interval [lo, hi] with endpoints rounded outward (lo toward -inf,
// hi toward +inf) on every operation.  The invariant maintained throughout is
// containment: if x in X and y in Y then x op y in X op Y.  Arithmetic never
// branches on an approximate sign, so results of any expression tree built
// from these operations enclose the exact value.
class CertInterval {
 public:
  explicit CertInterval(long precision_bits) {
    init(precision_bits);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }

  CertInterval(const BigFloat& lower, const BigFloat& upper)
      : CertInterval(std::max(lower.precision(), upper.precision())) {
    mpfr_set(lo_, lower.raw(), MPFR_RNDD);
    mpfr_set(hi_, upper.raw(), MPFR_RNDU);
    if (mpfr_cmp(lo_, hi_) > 0)
      throw std::invalid_argument("CertInterval: lower endpoint above upper");
  }

  static CertInterval point(double v, long precision_bits) {
    CertInterval r(precision_bits);
    mpfr_set_d(r.lo_, v, MPFR_RNDD);
    mpfr_set_d(r.hi_, v, MPFR_RNDU);
    return r;
  }

  static CertInterval point(long v, long precision_bits) {
    CertInterval r(precision_bits);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
  }

  static CertInterval of(const Rational& q, long precision_bits) {
    CertInterval r(precision_bits);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
  }

  CertInterval(const CertInterval& o) {
    init(o.precision());
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }

  CertInterval(CertInterval&& o) noexcept {
    init(kMinPrecision);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }

  CertInterval& operator=(CertInterval o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
  }

  ~CertInterval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  long precision() const { return mpfr_get_prec(lo_); }

  BigFloat lower() const {
    BigFloat r(precision());
    mpfr_set(r.raw(), lo_, MPFR_RNDD);
    return r;
  }

  BigFloat upper() const {
    BigFloat r(precision());
    mpfr_set(r.raw(), hi_, MPFR_RNDU);
    return r;
  }

  double lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

  // Outward-rounded decimal endpoints: the printed interval contains the
  // stored one, which contains the exact value.
  std::string lower_str(int significant_digits = 45) const {
    return render(lo_, significant_digits, MPFR_RNDD);
  }
  std::string upper_str(int significant_digits = 45) const {
    return render(hi_, significant_digits, MPFR_RNDU);
  }

  Sign sign() const {
    if (mpfr_sgn(lo_) > 0) return Sign::positive;
    if (mpfr_sgn(hi_) < 0) return Sign::negative;
    if (mpfr_zero_p(lo_) && mpfr_zero_p(hi_)) return Sign::zero;
    return Sign::indeterminate;
  }

  bool contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
  }

  bool contains(const Rational& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 &&
           mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
  }

  bool contains(double v) const {
    return mpfr_cmp_d(lo_, v) <= 0 && mpfr_cmp_d(hi_, v) >= 0;
  }

  bool contains(const CertInterval& o) const {
    return mpfr_cmp(lo_, o.lo_) <= 0 && mpfr_cmp(hi_, o.hi_) >= 0;
  }

  bool definitely_less(const CertInterval& o) const {
    return mpfr_cmp(hi_, o.lo_) < 0;
  }

  BigFloat width() const {
    BigFloat r(precision());
    mpfr_sub(r.raw(), hi_, lo_, MPFR_RNDU);
    return r;
  }

  BigFloat midpoint() const {
    BigFloat r(precision());
    mpfr_add(r.raw(), lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(r.raw(), r.raw(), 1, MPFR_RNDN);
    return r;
  }

  CertInterval at_precision(long precision_bits) const {
    CertInterval r(precision_bits);
    mpfr_set(r.lo_, lo_, MPFR_RNDD);
    mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
  }

  friend CertInterval operator-(const CertInterval& a) {
    CertInterval r(a.precision());
    mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    return r;
  }

  friend CertInterval operator+(const CertInterval& a, const CertInterval& b) {
    CertInterval r(std::max(a.precision(), b.precision()));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }

  friend CertInterval operator-(const CertInterval& a, const CertInterval& b) {
    CertInterval r(std::max(a.precision(), b.precision()));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
  }

  friend CertInterval operator*(const CertInterval& a, const CertInterval& b) {
    CertInterval r(std::max(a.precision(), b.precision()));
    corner_extremes(r, a, b, mpfr_mul);
    return r;
  }

  // Requires b to be sign-definite (0 strictly outside b).
  friend CertInterval operator/(const CertInterval& a, const CertInterval& b) {
    if (b.contains_zero())
      throw std::domain_error("CertInterval: division by interval spanning 0");
    CertInterval r(std::max(a.precision(), b.precision()));
    corner_extremes(r, a, b, mpfr_div);
    return r;
  }

#define MEANCERT_CI_SCALAR(op)                                          \
  friend CertInterval operator op(const CertInterval& a, long b) {      \
    return a op point(b, a.precision());                                \
  }                                                                     \
  friend CertInterval operator op(long a, const CertInterval& b) {      \
    return point(a, b.precision()) op b;                                \
  }
  MEANCERT_CI_SCALAR(+)
  MEANCERT_CI_SCALAR(-)
  MEANCERT_CI_SCALAR(*)
  MEANCERT_CI_SCALAR(/)
#undef MEANCERT_CI_SCALAR

  // Tighter than x*x when the interval straddles zero.
  friend CertInterval sqr(const CertInterval& a) {
    CertInterval r(a.precision());
    if (mpfr_sgn(a.lo_) >= 0) {
      mpfr_sqr(r.lo_, a.lo_, MPFR_RNDD);
      mpfr_sqr(r.hi_, a.hi_, MPFR_RNDU);
    } else if (mpfr_sgn(a.hi_) <= 0) {
      mpfr_sqr(r.lo_, a.hi_, MPFR_RNDD);
      mpfr_sqr(r.hi_, a.lo_, MPFR_RNDU);
    } else {
      mpfr_set_zero(r.lo_, 1);
      mpfr_t t;
      mpfr_init2(t, r.precision());
      mpfr_sqr(r.hi_, a.hi_, MPFR_RNDU);
      mpfr_sqr(t, a.lo_, MPFR_RNDU);
      if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      mpfr_clear(t);
    }
    return r;
  }

  friend CertInterval sqrt(const CertInterval& a) {
    if (mpfr_sgn(a.lo_) < 0)
      throw std::domain_error("CertInterval: sqrt of partially negative interval");
    return monotone(a, mpfr_sqrt);
  }

  friend CertInterval log(const CertInterval& a) {
    if (mpfr_sgn(a.lo_) <= 0)
      throw std::domain_error("CertInterval: log needs a strictly positive interval");
    return monotone(a, mpfr_log);
  }

  friend CertInterval log1p(const CertInterval& a) {
    if (mpfr_cmp_si(a.lo_, -1) <= 0)
      throw std::domain_error("CertInterval: log1p needs lo > -1");
    return monotone(a, mpfr_log1p);
  }

  friend CertInterval exp(const CertInterval& a) { return monotone(a, mpfr_exp); }
  friend CertInterval asinh(const CertInterval& a) {
    return monotone(a, mpfr_asinh);
  }
  friend CertInterval atan(const CertInterval& a) {
    return monotone(a, mpfr_atan);
  }

  friend CertInterval abs(const CertInterval& a) {
    if (mpfr_sgn(a.lo_) >= 0) return a;
    if (mpfr_sgn(a.hi_) <= 0) return -a;
    CertInterval r(a.precision());
    mpfr_set_zero(r.lo_, 1);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    if (mpfr_cmp(a.hi_, r.hi_) > 0) mpfr_set(r.hi_, a.hi_, MPFR_RNDU);
    return r;
  }

  friend CertInterval hull(const CertInterval& a, const CertInterval& b) {
    CertInterval r(std::max(a.precision(), b.precision()));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }

 private:
  using Binop = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  using Unop = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

  void init(long precision_bits) {
    long p = std::max(kMinPrecision, std::min(kMaxPrecision, precision_bits));
    mpfr_init2(lo_, p);
    mpfr_init2(hi_, p);
  }

  // Exact extremes of a bilinear/monotone-per-corner operation over a box
  // are attained at corners; round candidates outward and take min/max.
  static void corner_extremes(CertInterval& r, const CertInterval& a,
                              const CertInterval& b, Binop op) {
    mpfr_t c;
    mpfr_init2(c, r.precision());
    const mpfr_srcptr as[2] = {a.lo_, a.hi_};
    const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
    bool first = true;
    for (auto x : as)
      for (auto y : bs) {
        op(c, x, y, MPFR_RNDD);
        if (first || mpfr_cmp(c, r.lo_) < 0) mpfr_set(r.lo_, c, MPFR_RNDD);
        op(c, x, y, MPFR_RNDU);
        if (first || mpfr_cmp(c, r.hi_) > 0) mpfr_set(r.hi_, c, MPFR_RNDU);
        first = false;
      }
    mpfr_clear(c);
  }

  static CertInterval monotone(const CertInterval& a, Unop op) {
    CertInterval r(a.precision());
    op(r.lo_, a.lo_, MPFR_RNDD);
    op(r.hi_, a.hi_, MPFR_RNDU);
    return r;
  }

  static std::string render(mpfr_srcptr v, int significant_digits,
                            mpfr_rnd_t rnd) {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*R*e", significant_digits - 1, rnd, v);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

  mpfr_t lo_, hi_;
};

inline CertInterval make_like(const CertInterval& like, long value) {
  return CertInterval::point(value, like.precision());
}

}  // namespace meancert

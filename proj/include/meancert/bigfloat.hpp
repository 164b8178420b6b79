#pragma once

#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <utility>

#include "meancert/rational.hpp"

namespace meancert {

inline constexpr long kMinPrecision = 53;
inline constexpr long kMaxPrecision = 4096;

// Arbitrary-precision float with value semantics.  All arithmetic rounds to
// nearest at the precision of the result, which is the maximum of the operand
// precisions.  This is the approximation path; certified enclosures live in
// CertInterval.
class BigFloat {
 public:
  BigFloat() : BigFloat(kMinPrecision) {}

  explicit BigFloat(long precision_bits) {
    mpfr_init2(v_, clamp(precision_bits));
    mpfr_set_zero(v_, 1);
  }

  BigFloat(double value, long precision_bits) : BigFloat(precision_bits) {
    mpfr_set_d(v_, value, MPFR_RNDN);
  }

  BigFloat(long value, long precision_bits) : BigFloat(precision_bits) {
    mpfr_set_si(v_, value, MPFR_RNDN);
  }

  BigFloat(const Rational& value, long precision_bits,
           mpfr_rnd_t rnd = MPFR_RNDN)
      : BigFloat(precision_bits) {
    mpfr_set_q(v_, value.get_mpq_t(), rnd);
  }

  // Parses a decimal literal (round-to-nearest at the given precision).
  BigFloat(const char* decimal, long precision_bits) : BigFloat(precision_bits) {
    if (mpfr_set_str(v_, decimal, 10, MPFR_RNDN) != 0)
      throw std::invalid_argument("BigFloat: unparsable decimal literal");
  }

  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }

  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, kMinPrecision);
    mpfr_swap(v_, o.v_);
  }

  BigFloat& operator=(BigFloat o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }

  ~BigFloat() { mpfr_clear(v_); }

  long precision() const { return mpfr_get_prec(v_); }

  // Returns a copy rounded (to nearest) at a different precision.
  BigFloat at_precision(long precision_bits) const {
    BigFloat r(precision_bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const {
    return mpfr_get_d(v_, rnd);
  }

  // Exact: every finite BigFloat is a dyadic rational.
  Rational to_rational() const {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
  }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }

  // Decimal rendering with the requested number of significant digits.
  std::string str(int significant_digits = 20,
                  mpfr_rnd_t rnd = MPFR_RNDN) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*R*e", significant_digits - 1, rnd, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  friend BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

#define MEANCERT_BF_BINOP(op, fn)                                  \
  friend BigFloat operator op(const BigFloat& a, const BigFloat& b) { \
    BigFloat r(std::max(a.precision(), b.precision()));          \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                              \
    return r;                                                      \
  }                                                                \
  friend BigFloat operator op(const BigFloat& a, long b) {         \
    return a op BigFloat(b, a.precision());                        \
  }                                                                \
  friend BigFloat operator op(long a, const BigFloat& b) {         \
    return BigFloat(a, b.precision()) op b;                        \
  }

  MEANCERT_BF_BINOP(+, mpfr_add)
  MEANCERT_BF_BINOP(-, mpfr_sub)
  MEANCERT_BF_BINOP(*, mpfr_mul)
  MEANCERT_BF_BINOP(/, mpfr_div)
#undef MEANCERT_BF_BINOP

  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_cmp(a.v_, b.v_) == 0;
  }
  friend bool operator!=(const BigFloat& a, const BigFloat& b) {
    return !(a == b);
  }
  friend bool operator<(const BigFloat& a, const BigFloat& b) {
    return mpfr_cmp(a.v_, b.v_) < 0;
  }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) {
    return !(b < a);
  }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) {
    return !(a < b);
  }

#define MEANCERT_BF_UNARY(name, fn)              \
  friend BigFloat name(const BigFloat& a) {      \
    BigFloat r(a.precision());                   \
    fn(r.v_, a.v_, MPFR_RNDN);                   \
    return r;                                    \
  }

  MEANCERT_BF_UNARY(sqrt, mpfr_sqrt)
  MEANCERT_BF_UNARY(abs, mpfr_abs)
  MEANCERT_BF_UNARY(log, mpfr_log)
  MEANCERT_BF_UNARY(log1p, mpfr_log1p)
  MEANCERT_BF_UNARY(exp, mpfr_exp)
  MEANCERT_BF_UNARY(asinh, mpfr_asinh)
  MEANCERT_BF_UNARY(atan, mpfr_atan)
#undef MEANCERT_BF_UNARY

 private:
  static long clamp(long p) {
    if (p < kMinPrecision) return kMinPrecision;
    if (p > kMaxPrecision) return kMaxPrecision;
    return p;
  }

  mpfr_t v_;
};

inline BigFloat make_like(const BigFloat& like, long value) {
  return BigFloat(value, like.precision());
}

}  // namespace meancert

#pragma once

#include <string>

#include "meancert/interval.hpp"
#include "meancert/rational.hpp"

namespace meancert {

// Element r + s*sqrt(3) of the real quadratic field Q(sqrt(3)).  All
// arithmetic and sign decisions are exact, which is what makes equality
// checks at the algebraic sharp weight possible without any tolerance.
class QuadExt3 {
 public:
  QuadExt3() : r_(0), s_(0) {}
  QuadExt3(long v) : r_(v), s_(0) {}  // NOLINT: implicit by design
  QuadExt3(Rational r) : r_(std::move(r)), s_(0) {}
  QuadExt3(Rational r, Rational s) : r_(std::move(r)), s_(std::move(s)) {}

  const Rational& rational_part() const { return r_; }
  const Rational& radical_part() const { return s_; }

  bool is_rational() const { return sgn(s_) == 0; }

  // Exact sign of r + s*sqrt(3).
  int sign() const {
    int sr = sgn(r_);
    int ss = sgn(s_);
    if (ss == 0) return sr;
    if (sr == 0) return ss;
    if (sr == ss) return sr;
    // Opposite signs: compare r^2 with 3 s^2; the larger magnitude wins.
    Rational d = r_ * r_ - 3 * s_ * s_;
    int sd = sgn(d);
    return sd == 0 ? 0 : (sd > 0 ? sr : ss);
  }

  bool is_zero() const { return sgn(r_) == 0 && sgn(s_) == 0; }

  friend QuadExt3 operator-(const QuadExt3& a) { return {-a.r_, -a.s_}; }
  friend QuadExt3 operator+(const QuadExt3& a, const QuadExt3& b) {
    return {a.r_ + b.r_, a.s_ + b.s_};
  }
  friend QuadExt3 operator-(const QuadExt3& a, const QuadExt3& b) {
    return {a.r_ - b.r_, a.s_ - b.s_};
  }
  friend QuadExt3 operator*(const QuadExt3& a, const QuadExt3& b) {
    return {a.r_ * b.r_ + 3 * a.s_ * b.s_, a.r_ * b.s_ + a.s_ * b.r_};
  }
  friend QuadExt3 operator/(const QuadExt3& a, const QuadExt3& b) {
    // Multiply by the conjugate; the norm r^2 - 3 s^2 is nonzero for b != 0.
    Rational n = b.r_ * b.r_ - 3 * b.s_ * b.s_;
    if (sgn(n) == 0)
      throw std::domain_error("QuadExt3: division by zero");
    QuadExt3 num = a * QuadExt3(b.r_, -b.s_);
    return {num.r_ / n, num.s_ / n};
  }

  friend bool operator==(const QuadExt3& a, const QuadExt3& b) {
    return a.r_ == b.r_ && a.s_ == b.s_;
  }
  friend bool operator!=(const QuadExt3& a, const QuadExt3& b) {
    return !(a == b);
  }
  friend bool operator<(const QuadExt3& a, const QuadExt3& b) {
    return (a - b).sign() < 0;
  }
  friend bool operator>(const QuadExt3& a, const QuadExt3& b) { return b < a; }
  friend bool operator<=(const QuadExt3& a, const QuadExt3& b) {
    return !(b < a);
  }
  friend bool operator>=(const QuadExt3& a, const QuadExt3& b) {
    return !(a < b);
  }

  // Certified enclosure at the requested precision.
  CertInterval enclose(long precision_bits) const {
    CertInterval root3 = sqrt(CertInterval::point(3L, precision_bits));
    return CertInterval::of(r_, precision_bits) +
           CertInterval::of(s_, precision_bits) * root3;
  }

  std::string str() const {
    Rational mag = sgn(s_) < 0 ? Rational(-s_) : s_;
    return r_.get_str() + (sgn(s_) >= 0 ? " + " : " - ") + mag.get_str() +
           "*sqrt(3)";
  }

 private:
  Rational r_, s_;
};

inline int sign_of(const QuadExt3& q) { return q.sign(); }

inline QuadExt3 make_like(const QuadExt3&, long value) {
  return QuadExt3(value);
}

inline Rational make_like(const Rational&, long value) { return Rational(value); }

}  // namespace meancert

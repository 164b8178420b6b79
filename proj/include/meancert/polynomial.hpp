#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "meancert/rational.hpp"

namespace meancert {

// Dense univariate polynomial over a field F, coefficients stored in
// ascending degree order.  F needs +, -, *, == and a make_like(F, long)
// factory; exact fields additionally get normalization and division.
template <class F>
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<F> ascending_coefficients)
      : c_(std::move(ascending_coefficients)) {}

  Polynomial(std::initializer_list<F> ascending_coefficients)
      : c_(ascending_coefficients) {}

  static Polynomial from_longs(const F& like,
                               std::initializer_list<long> ascending) {
    std::vector<F> c;
    c.reserve(ascending.size());
    for (long v : ascending) c.push_back(make_like(like, v));
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<F>& coefficients() const { return c_; }

  const F& coeff(int k) const {
    if (k < 0 || k > degree())
      throw std::out_of_range("Polynomial: coefficient index");
    return c_[static_cast<size_t>(k)];
  }

  F& coeff(int k) {
    if (k < 0 || k > degree())
      throw std::out_of_range("Polynomial: coefficient index");
    return c_[static_cast<size_t>(k)];
  }

  // Horner evaluation in the coefficient field.
  F operator()(const F& x) const {
    if (c_.empty()) return make_like(x, 0);
    F acc = c_.back();
    for (size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<F> d;
    d.reserve(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k)
      d.push_back(make_like(c_[k], static_cast<long>(k)) * c_[k]);
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    const auto& longer = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
    const auto& shorter = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
    std::vector<F> s = longer;
    for (size_t i = 0; i < shorter.size(); ++i) s[i] = s[i] + shorter[i];
    return Polynomial(std::move(s));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    if (b.c_.empty()) return a;
    std::vector<F> c = a.c_;
    while (c.size() < b.c_.size()) c.push_back(make_like(b.c_.front(), 0));
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] - b.c_[i];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const F& s, const Polynomial& p) {
    std::vector<F> c = p.c_;
    for (auto& v : c) v = s * v;
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return Polynomial();
    std::vector<F> c(a.c_.size() + b.c_.size() - 1,
                     make_like(a.c_.front(), 0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }

  // Coefficientwise equality after dropping leading exact zeros.
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    size_t na = a.effective_size(), nb = b.effective_size();
    if (na != nb) return false;
    for (size_t i = 0; i < na; ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  // Drops leading zero coefficients (exact fields only).
  Polynomial normalized() const {
    std::vector<F> c(c_.begin(), c_.begin() + effective_size());
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return effective_size() == 0; }

 private:
  size_t effective_size() const {
    size_t n = c_.size();
    while (n > 0 && c_[n - 1] == make_like(c_[n - 1], 0)) --n;
    return n;
  }

  std::vector<F> c_;
};

// Maps coefficients into another field, e.g. Rational -> CertInterval.
template <class G, class F, class Fn>
Polynomial<G> map_poly(const Polynomial<F>& p, Fn&& fn) {
  std::vector<G> c;
  c.reserve(p.coefficients().size());
  for (const auto& v : p.coefficients()) c.push_back(fn(v));
  return Polynomial<G>(std::move(c));
}

// --- Sturm sequences over the rationals ------------------------------------
//
// Standard Sturm chain: p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k).
// The number of distinct real roots in (lo, hi] is V(lo) - V(hi) where V
// counts sign variations along the chain.  Used as an independent check on
// the bisection-based isolator.

inline Polynomial<Rational> rational_remainder(Polynomial<Rational> num,
                                               const Polynomial<Rational>& den) {
  if (den.is_zero())
    throw std::domain_error("rational_remainder: zero divisor");
  Polynomial<Rational> d = den.normalized();
  Polynomial<Rational> r = num.normalized();
  const Rational lead = d.coeff(d.degree());
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int shift = r.degree() - d.degree();
    Rational q = r.coeff(r.degree()) / lead;
    std::vector<Rational> mono(static_cast<size_t>(shift) + 1, Rational(0));
    mono.back() = q;
    r = (r - Polynomial<Rational>(mono) * d).normalized();
  }
  return r;
}

inline std::vector<Polynomial<Rational>> sturm_sequence(
    const Polynomial<Rational>& p) {
  std::vector<Polynomial<Rational>> seq;
  seq.push_back(p.normalized());
  if (seq.back().degree() < 1) return seq;
  seq.push_back(p.derivative().normalized());
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    Polynomial<Rational> r =
        rational_remainder(seq[seq.size() - 2], seq.back());
    if (r.is_zero()) break;
    seq.push_back(Rational(-1) * r);
  }
  return seq;
}

inline int sign_variations_at(const std::vector<Polynomial<Rational>>& seq,
                              const Rational& x) {
  int variations = 0;
  int prev = 0;
  for (const auto& p : seq) {
    int s = p.is_zero() ? 0 : sgn(p(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

// Distinct real roots of p in the half-open interval (lo, hi].
inline int sturm_root_count(const Polynomial<Rational>& p, const Rational& lo,
                            const Rational& hi) {
  auto seq = sturm_sequence(p);
  return sign_variations_at(seq, lo) - sign_variations_at(seq, hi);
}

}  // namespace meancert

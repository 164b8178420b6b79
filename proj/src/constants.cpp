#include "meancert/constants.hpp"

#include <mpfr.h>

namespace meancert {
namespace {

// Guard digits so that the final rounding step does not eat into the
// precision the caller asked for.
long padded(long prec) { return prec + 32; }

BigFloat pi_value(long prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

}  // namespace

BigFloat log1p_sqrt2(long prec) {
  BigFloat two(2L, padded(prec));
  return log(1 + sqrt(two)).at_precision(prec);
}

CertInterval log1p_sqrt2_enclosure(long prec) {
  CertInterval two = CertInterval::point(2L, padded(prec));
  return log(1 + sqrt(two)).at_precision(prec);
}

BigFloat lambda_sharp(long prec) {
  long wp = padded(prec);
  BigFloat ell = log1p_sqrt2(wp);
  BigFloat one(1L, wp);
  return ((1 + sqrt(one / (ell * ell) - 1)) / 2).at_precision(prec);
}

CertInterval lambda_enclosure(long prec) {
  long wp = padded(prec);
  CertInterval ell = log1p_sqrt2_enclosure(wp);
  CertInterval one = CertInterval::point(1L, wp);
  return ((1 + sqrt(one / (ell * ell) - 1)) / 2).at_precision(prec);
}

BigFloat mu_sharp(long prec) {
  long wp = padded(prec);
  BigFloat three(3L, wp);
  return ((3 + sqrt(three)) / 6).at_precision(prec);
}

CertInterval mu_enclosure(long prec) {
  return mu_exact().enclose(prec);
}

QuadExt3 mu_exact() { return QuadExt3(rational(1, 2), rational(1, 6)); }

std::vector<SharpConstant> prior_constants(long prec) {
  long wp = padded(prec);
  BigFloat pi = pi_value(wp);
  BigFloat ell = log1p_sqrt2(wp);
  BigFloat one(1L, wp);
  BigFloat two(2L, wp);
  BigFloat six(6L, wp);

  std::vector<SharpConstant> out;
  out.push_back({"alpha_T_convex", "(4 - pi)/((sqrt(2) - 1) pi)",
                 "T between convex combinations of S and A",
                 ((4 - pi) / ((sqrt(two) - 1) * pi)).at_precision(prec)});
  out.push_back({"beta_T_convex", "2/3",
                 "T between convex combinations of S and A",
                 (two / 3).at_precision(prec)});
  out.push_back({"alpha_M_convex", "(1 - L)/((sqrt(2) - 1) L), L = ln(1+sqrt(2))",
                 "M between convex combinations of S and A",
                 ((1 - ell) / ((sqrt(two) - 1) * ell)).at_precision(prec)});
  out.push_back({"beta_M_convex", "1/3",
                 "M between convex combinations of S and A",
                 (one / 3).at_precision(prec)});
  out.push_back({"alpha_T_weighted", "(1 + sqrt(16/pi^2 - 1))/2",
                 "T between weighted-argument root-mean-squares",
                 ((1 + sqrt(16 * one / (pi * pi) - 1)) / 2).at_precision(prec)});
  out.push_back({"beta_T_weighted", "(3 + sqrt(6))/6",
                 "T between weighted-argument root-mean-squares",
                 ((3 + sqrt(six)) / 6).at_precision(prec)});
  return out;
}

}  // namespace meancert

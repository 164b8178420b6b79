#include "meancert/proof.hpp"

#include <cmath>
#include <random>

#include "meancert/means.hpp"

namespace meancert {

namespace {

constexpr double kLn1pSqrt2 = 0.8813735870195430252326093249797923091;

double q_value_d(double p, double t) {
  double u = p * t + (1 - p);
  double v = p + (1 - p) * t;
  return u * u + v * v;
}

}  // namespace

double f_limit(double p) {
  double c = 2 * p * p - 2 * p + 1;
  return std::sqrt(2.0) * kLn1pSqrt2 - 1.0 / std::sqrt(c);
}

double f_eval(double p, double t) {
  if (t == 1.0) return 0.0;
  if (t > 1e8) {
    // Near the limit the direct formula cancels catastrophically.  Two exact
    // rearrangements fix this: the arcsinh part becomes sqrt(2)*log1p(u)
    // around arcsinh(1), and with c = 2p^2-2p+1 the algebraic part uses
    // c(t-1)^2 - Q(t) = -2t, so (t-1)/sqrt(Q) - 1/sqrt(c) has an explicit
    // small closed form.  Everything is scaled by 1/t to stay overflow-free.
    const double s2 = std::sqrt(2.0);
    double c = 2 * p * p - 2 * p + 1;
    double x = (t - 1) / (t + 1);
    double xm1 = -2.0 / (t + 1);
    double s = std::sqrt(1 + x * x);
    double u = xm1 * (1 + (x + 1) / (s + s2)) / (1 + s2);
    double w = c + (4 * p * (1 - p)) / t + c / (t * t);  // Q(t)/t^2
    double rem = 2.0 / (std::sqrt(c) * std::sqrt(w) * t *
                        (std::sqrt(c) * (1 - 1.0 / t) + std::sqrt(w)));
    return f_limit(p) + s2 * std::log1p(u) + rem;
  }
  double x = (t - 1) / (t + 1);
  return std::sqrt(2.0) * asinh_stable(x) - (t - 1) / std::sqrt(q_value_d(p, t));
}

double f1_eval(double p, double t) {
  double q = q_value_d(p, t);
  return 2 * q * std::sqrt(q) - (1 + t) * (1 + t) * std::sqrt(1 + t * t);
}

BigFloat f_eval(double p, double t, long prec) {
  return f_value(BigFloat(p, prec), BigFloat(t, prec));
}

BigFloat f_limit(double p, long prec) { return f_limit_value(BigFloat(p, prec)); }

BigFloat f1_eval(double p, double t, long prec) {
  return f1_value(BigFloat(p, prec), BigFloat(t, prec));
}

CertInterval f_enclosure(const CertInterval& p, const Rational& t) {
  return f_value(p, CertInterval::of(t, p.precision()));
}

CertInterval f1_enclosure(const CertInterval& p, const Rational& t) {
  return f1_value(p, CertInterval::of(t, p.precision()));
}

// --- certificates ------------------------------------------------------------

SignCertificate certify_sign(const std::string& id, const std::string& claim,
                             const std::function<CertInterval(long)>& eval,
                             CertExpect expected, long start_precision) {
  SignCertificate base;
  base.id = id;
  base.claim = claim;
  base.expected = expected;

  if (expected == CertExpect::encloses_zero) {
    CertInterval v = eval(std::max(start_precision, kMinPrecision));
    SignCertificate c = base;
    c.precision_bits = v.precision();
    c.lower = v.lower_str();
    c.upper = v.upper_str();
    c.sign = v.sign();
    c.status = c.sign == Sign::zero ? CertStatus::exact : CertStatus::definite;
    // "Encloses zero" is only convincing when the enclosure is tight; the
    // bound scales so that 256 working bits demand width below 2^-100.
    long bound_exp = std::min(900L, std::max(50L, v.precision() - 156));
    double w = v.width().to_double(MPFR_RNDU);
    c.ok = v.contains_zero() && w < std::ldexp(1.0, -static_cast<int>(bound_exp));
    return c;
  }

  return with_escalation<SignCertificate>(
      [&](long prec) -> std::optional<SignCertificate> {
        CertInterval v = eval(prec);
        Sign s = v.sign();
        if (s == Sign::indeterminate) return std::nullopt;
        SignCertificate c = base;
        c.precision_bits = v.precision();
        c.lower = v.lower_str();
        c.upper = v.upper_str();
        c.sign = s;
        c.status = s == Sign::zero ? CertStatus::exact : CertStatus::definite;
        c.ok = (expected == CertExpect::negative && s == Sign::negative) ||
               (expected == CertExpect::positive && s == Sign::positive);
        return c;
      },
      start_precision, id);
}

std::vector<SignCertificate> certify_lambda_signs(long prec) {
  long start = std::max(prec, 128L);
  std::vector<SignCertificate> out;
  out.push_back(certify_sign(
      "g1_at_one_lambda",
      "g1(1) = g2(1) = 16(6p^2 - 6p + 1) < 0 at the lower sharp weight",
      [](long q) { return g_at_one(1, lambda_enclosure(q)); },
      CertExpect::negative, start));
  out.push_back(certify_sign(
      "g3_at_one_lambda",
      "g3(1) = 16p^4 - 32p^3 + 48p^2 - 32p + 5 < 0 at the lower sharp weight",
      [](long q) { return g_at_one(3, lambda_enclosure(q)); },
      CertExpect::negative, start));
  out.push_back(certify_sign(
      "g4_at_one_lambda",
      "g4(1) = 48p^4 - 96p^3 + 96p^2 - 48p + 7 < 0 at the lower sharp weight",
      [](long q) { return g_at_one(4, lambda_enclosure(q)); },
      CertExpect::negative, start));
  out.push_back(certify_sign(
      "leading_coefficient_lambda",
      "A6 = 32p^6 - 96p^5 + 144p^4 - 128p^3 + 72p^2 - 24p + 3 > 0 at the "
      "lower sharp weight",
      [](long q) { return a6_coeff(lambda_enclosure(q)); },
      CertExpect::positive, start));
  return out;
}

SignCertificate certify_lambda_limit(long prec) {
  return certify_sign(
      "f_limit_lambda",
      "lim f(t) as t -> infinity equals 0 at the lower sharp weight",
      [](long q) { return f_limit_value(lambda_enclosure(q)); },
      CertExpect::encloses_zero, std::max(prec, 256L));
}

// --- root isolation ----------------------------------------------------------

namespace {

Sign certified_sign_at(const IntervalFn& fn, const Rational& x, long start) {
  return with_escalation<Sign>(
      [&](long q) -> std::optional<Sign> {
        Sign s = fn(x, q).sign();
        if (s == Sign::indeterminate) return std::nullopt;
        return s;
      },
      start, "sign certification at t = " + x.get_str());
}

// Offsets used to nudge a probe off an exact zero of the target function.
const std::pair<int, int> kNudges[] = {{1, 2},  {5, 11}, {3, 7},
                                       {7, 12}, {9, 17}, {11, 23}};

struct SignOracle {
  std::function<Sign(const Rational&)> sign_at;
};

std::vector<IsolatingInterval> isolate_with(const SignOracle& oracle,
                                            const Rational& lo,
                                            const Rational& hi,
                                            const Rational& width,
                                            int grid_cells) {
  if (!(lo < hi)) throw std::invalid_argument("isolate_roots: empty bracket");
  if (grid_cells < 1) throw std::invalid_argument("isolate_roots: grid_cells");
  if (!(width > 0)) throw std::invalid_argument("isolate_roots: width");

  Rational step = (hi - lo) / grid_cells;
  std::vector<Rational> xs;
  std::vector<Sign> signs;
  xs.reserve(grid_cells + 1);
  for (int i = 0; i <= grid_cells; ++i) {
    Rational x = i == grid_cells ? hi : Rational(lo + i * step);
    Sign s = oracle.sign_at(x);
    if (s == Sign::zero && i > 0 && i < grid_cells) {
      // Interior grid point landed exactly on a root: move it slightly so
      // the cell scan sees clean signs; an odd root still flips across it.
      x = x + step / 97;
      s = oracle.sign_at(x);
    }
    xs.push_back(x);
    signs.push_back(s);
  }

  std::vector<IsolatingInterval> out;
  for (int i = 0; i < grid_cells; ++i) {
    Sign sl = signs[i], sr = signs[i + 1];
    bool change = (sl == Sign::negative && sr == Sign::positive) ||
                  (sl == Sign::positive && sr == Sign::negative);
    if (!change) continue;
    Rational a = xs[i], b = xs[i + 1];
    Sign sa = sl;
    while (b - a > width) {
      Rational mid;
      Sign sm = Sign::zero;
      for (auto [n, d] : kNudges) {
        mid = a + Rational(n, d) * (b - a);
        sm = oracle.sign_at(mid);
        if (sm != Sign::zero) break;
      }
      if (sm == Sign::zero)
        throw NoRootInBracket(
            "isolate_roots: could not move probe off a zero locus");
      if (sm == sa)
        a = mid;
      else
        b = mid;
    }
    IsolatingInterval iv;
    iv.lo = a;
    iv.hi = b;
    iv.at_lo = sa;
    iv.at_hi = sa == Sign::negative ? Sign::positive : Sign::negative;
    out.push_back(std::move(iv));
  }
  return out;
}

}  // namespace

std::vector<IsolatingInterval> isolate_roots(const IntervalFn& fn,
                                             const Rational& lo,
                                             const Rational& hi,
                                             const Rational& width,
                                             long precision_bits,
                                             int grid_cells) {
  SignOracle oracle{[&](const Rational& x) {
    return certified_sign_at(fn, x, precision_bits);
  }};
  return isolate_with(oracle, lo, hi, width, grid_cells);
}

std::vector<IsolatingInterval> isolate_roots(const Polynomial<Rational>& poly,
                                             const Rational& lo,
                                             const Rational& hi,
                                             const Rational& width,
                                             int grid_cells) {
  SignOracle oracle{[&](const Rational& x) {
    int s = sgn(poly(x));
    return s < 0 ? Sign::negative : s > 0 ? Sign::positive : Sign::zero;
  }};
  return isolate_with(oracle, lo, hi, width, grid_cells);
}

// --- cascade ------------------------------------------------------------------

namespace {

// g_k or f1 at p = lambda, as a certified function of rational t.
CertInterval lambda_chain_eval(int which, const Rational& t, long prec) {
  CertInterval li = lambda_enclosure(prec);
  CertInterval ti = CertInterval::of(t, prec);
  if (which == 0) return f1_value(li, ti);
  GQuartet<CertInterval> g = g_polys(li);
  switch (which) {
    case 1: return g.g1(ti);
    case 2: return g.g2(ti);
    case 3: return g.g3(ti);
    default: return g.g4(ti);
  }
}

IntervalFn chain_fn(int which) {
  return [which](const Rational& t, long prec) {
    return lambda_chain_eval(which, t, prec);
  };
}

CertInterval iv_from(const IsolatingInterval& ii, long prec) {
  return hull(CertInterval::of(ii.lo, prec), CertInterval::of(ii.hi, prec));
}

// Grows a bracket to the right of lo (certified negative) until the sign
// turns positive, then refines by bisection.
IsolatingInterval bracket_and_refine(const IntervalFn& fn, Rational lo,
                                     const Rational& max_hi,
                                     const Rational& width, long prec,
                                     const std::string& name) {
  Sign slo = certified_sign_at(fn, lo, prec);
  if (slo != Sign::negative)
    throw NoRootInBracket(name + ": bracket start is not certified negative");
  Rational step(1);
  Rational hi = lo + step;
  while (true) {
    if (hi > max_hi)
      throw NoRootInBracket(name + ": no sign change below the cap");
    Sign s = certified_sign_at(fn, hi, prec);
    if (s == Sign::positive) break;
    if (s == Sign::negative) lo = hi;
    step = step * 2;
    hi = hi + step;
  }
  auto isolated = isolate_roots(fn, lo, hi, width, prec, 1);
  if (isolated.size() != 1)
    throw NoRootInBracket(name + ": refinement lost the sign change");
  return isolated.front();
}

std::vector<Rational> quartiles(const Rational& a, const Rational& b) {
  Rational d = b - a;
  return {a + d / 4, a + d / 2, a + 3 * d / 4};
}

CascadeStage make_stage(const std::string& fname, int which,
                        const IsolatingInterval& root,
                        const Rational& before_lo, const Rational& after_hi,
                        long prec) {
  CascadeStage stage{fname, iv_from(root, prec), {}, false};
  IntervalFn fn = chain_fn(which);
  const char* tags[] = {"q1", "mid", "q3"};
  bool all_ok = true;
  int i = 0;
  for (const Rational& t : quartiles(before_lo, root.lo)) {
    auto cert = certify_sign(
        fname + "_before_" + tags[i++],
        fname + " < 0 at t = " + t.get_str() + " (left of its root)",
        [&](long q) { return fn(t, q); }, CertExpect::negative, prec);
    all_ok = all_ok && cert.ok;
    stage.samples.push_back(std::move(cert));
  }
  i = 0;
  for (const Rational& t : quartiles(root.hi, after_hi)) {
    auto cert = certify_sign(
        fname + "_after_" + tags[i++],
        fname + " > 0 at t = " + t.get_str() + " (right of its root)",
        [&](long q) { return fn(t, q); }, CertExpect::positive, prec);
    all_ok = all_ok && cert.ok;
    stage.samples.push_back(std::move(cert));
  }
  stage.certified = all_ok && root.at_lo == Sign::negative &&
                    root.at_hi == Sign::positive;
  return stage;
}

}  // namespace

CascadeReport cascade(long prec) {
  long start = std::max(prec, 256L);
  Rational width(1, 1L << 30);
  Rational one(1);

  std::vector<SignCertificate> lambda_certs = certify_lambda_signs(start);
  bool lambda_ok = true;
  for (const auto& c : lambda_certs) lambda_ok = lambda_ok && c.ok;

  // t0: root of the linear g4.  Closed form B6/(2 A6) cross-checked against
  // the bisection isolator.
  CertInterval li = lambda_enclosure(start);
  CertInterval t0_closed = b6_coeff(li) / (2 * a6_coeff(li));
  IsolatingInterval r0 =
      bracket_and_refine(chain_fn(4), one, Rational(1000000), width, start, "g4");
  bool t0_consistent =
      !(t0_closed.definitely_less(iv_from(r0, start))) &&
      !(iv_from(r0, start).definitely_less(t0_closed));

  // Each next root is bracketed from just right of the previous one, where
  // the cascade guarantees the next function is still negative.
  IsolatingInterval r1 = bracket_and_refine(chain_fn(3), r0.hi,
                                            Rational(1000000), width, start, "g3");
  IsolatingInterval r2 = bracket_and_refine(chain_fn(2), r1.hi,
                                            Rational(1000000), width, start, "g2");
  IsolatingInterval r3 = bracket_and_refine(chain_fn(0), r2.hi,
                                            Rational(1000000), width, start, "f1");

  CascadeReport report{
      t0_closed, iv_from(r1, start), iv_from(r2, start), iv_from(r3, start),
      {},        {},                 {},                 {},
      false,     false,              start};

  Rational far = 10 * r3.hi;
  report.stages.push_back(make_stage("g4", 4, r0, one, far, start));
  report.stages.push_back(make_stage("g3", 3, r1, one, far, start));
  report.stages.push_back(make_stage("g2", 2, r2, one, far, start));
  report.stages.push_back(make_stage("f1", 0, r3, one, far, start));
  // g1 shares the root of f1: the squared-difference identity gives
  // sign(f1) = sign(g1) for t > 1, so the same bracket must isolate it.
  auto g1_isolated = isolate_roots(chain_fn(1), r3.lo, r3.hi,
                                   Rational(1, 1L << 20), start, 1);
  bool g1_shares_root = g1_isolated.size() == 1;
  report.stages.push_back(make_stage(
      "g1", 1, g1_shares_root ? g1_isolated.front() : r3, one, far, start));

  report.lambda_certificates = std::move(lambda_certs);

  // f-negativity on (1, infinity) at p = lambda, plus the boundary facts.
  auto f_fn = [](const Rational& t, long q) {
    return f_enclosure(lambda_enclosure(q), t);
  };
  report.f_certificates.push_back(certify_sign(
      "f_at_one", "f(1) = 0 exactly",
      [&](long q) { return f_fn(one, q); }, CertExpect::encloses_zero, start));
  Rational m1 = (one + r3.lo) / 2;
  Rational m2 = (r3.lo + r3.hi) / 2;
  Rational m3 = (r3.hi + far) / 2;
  int idx = 1;
  for (const Rational& t : {m1, m2, m3}) {
    report.f_certificates.push_back(certify_sign(
        "f_interior_" + std::to_string(idx++),
        "f < 0 at t = " + t.get_str() + " at the lower sharp weight",
        [&](long q) { return f_fn(t, q); }, CertExpect::negative, start));
  }
  report.f_certificates.push_back(certify_lambda_limit(start));

  // The positive leading coefficient drives every g_k to +infinity; spot
  // certificates far out on the axis.
  Rational big(1000000000L);
  for (int k = 1; k <= 4; ++k) {
    report.limit_certificates.push_back(certify_sign(
        "g" + std::to_string(k) + "_large_t",
        "g" + std::to_string(k) + " > 0 at t = 10^9 at the lower sharp weight",
        [&, k](long q) { return lambda_chain_eval(k, big, q); },
        CertExpect::positive, start));
  }

  report.ordering_certified = report.t0.definitely_less(report.t1) &&
                              report.t1.definitely_less(report.t2) &&
                              report.t2.definitely_less(report.t3);

  bool stages_ok = true;
  for (const auto& s : report.stages) stages_ok = stages_ok && s.certified;
  bool f_ok = true;
  for (const auto& c : report.f_certificates) f_ok = f_ok && c.ok;
  bool lim_ok = true;
  for (const auto& c : report.limit_certificates) lim_ok = lim_ok && c.ok;

  report.all_certified = lambda_ok && stages_ok && f_ok && lim_ok &&
                         report.ordering_certified && t0_consistent &&
                         g1_shares_root;
  return report;
}

// --- exact mu facts -----------------------------------------------------------

CoefficientCheck mu_factorization_check() {
  QuadExt3 mu = mu_exact();
  Polynomial<QuadExt3> g1 = g_polys(mu).g1;
  Polynomial<QuadExt3> expected({QuadExt3(rational(5, 27)),
                                 QuadExt3(rational(-2, 27)),
                                 QuadExt3(rational(-2, 9)),
                                 QuadExt3(rational(-2, 27)),
                                 QuadExt3(rational(5, 27))});
  CoefficientCheck check;
  for (int k = 0; k <= 4; ++k) {
    const QuadExt3& c = g1.coeff(k);
    if (sgn(c.radical_part()) != 0) {
      check.ok = false;
      check.first_mismatch = k;
      check.detail = "sqrt(3)-component survives at degree " + std::to_string(k);
      return check;
    }
    if (!(c == expected.coeff(k))) {
      check.ok = false;
      check.first_mismatch = k;
      check.detail = "coefficient mismatch at degree " + std::to_string(k);
      return check;
    }
  }
  if (!g1(QuadExt3(1)).is_zero()) {
    check.ok = false;
    check.detail = "g1(1) is not exactly zero";
  }
  return check;
}

// --- full pipeline --------------------------------------------------------------

CertificationRun certify_all(long prec) {
  CertificationRun run;
  run.precision_bits = std::max(prec, 256L);

  // Exact algebra over deterministic random rational weights in (1/2, 1).
  std::mt19937_64 rng(20130225);
  std::uniform_int_distribution<long> num(1, 999);
  run.identity_ok = true;
  run.tower_ok = true;
  std::vector<Rational> sample_ts = {rational(3, 2), rational(2), rational(7)};
  for (int i = 0; i < 100; ++i) {
    Rational p = rational(1, 2) + rational(num(rng), 2000);
    run.identity_ok =
        run.identity_ok && verify_square_difference_identity(p, sample_ts).ok;
    run.tower_ok = run.tower_ok && derivative_tower_check(p).ok;
  }
  run.mu_ok = mu_factorization_check().ok;

  CascadeReport casc = cascade(run.precision_bits);
  run.cascade_ordering_ok = casc.ordering_certified;
  run.certificates = casc.lambda_certificates;
  for (auto& s : casc.stages)
    for (auto& c : s.samples) run.certificates.push_back(c);
  for (auto& c : casc.f_certificates) run.certificates.push_back(c);
  for (auto& c : casc.limit_certificates) run.certificates.push_back(c);

  // Exact-mu side: f stays positive; certified at log-spaced ratios.
  for (int k = 1; k <= 20; ++k) {
    double expo = 6.0 * k / 20.0;
    Rational t = rational_from_double(std::pow(10.0, expo));
    run.certificates.push_back(certify_sign(
        "f_positive_mu_" + std::to_string(k),
        "f > 0 at t ~ 10^" + std::to_string(expo).substr(0, 4) +
            " at the upper sharp weight",
        [&](long q) {
          return f_enclosure(mu_enclosure(q), t);
        },
        CertExpect::positive, run.precision_bits));
  }

  bool certs_ok = true;
  for (const auto& c : run.certificates) certs_ok = certs_ok && c.ok;
  run.all_passed = certs_ok && run.identity_ok && run.tower_ok && run.mu_ok &&
                   casc.all_certified;
  return run;
}

}  // namespace meancert

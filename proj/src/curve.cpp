#include "meancert/curve.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "meancert/constants.hpp"
#include "meancert/errors.hpp"
#include "meancert/proof.hpp"
#include "meancert/quadext.hpp"
#include "meancert/rational.hpp"

namespace meancert {

namespace {

// Enclosures of the two sharp weights are reused across many calls; cache
// them per precision behind a mutex (CertInterval itself is immutable).
const CertInterval& cached_lambda(long prec) {
  static std::mutex mu;
  static std::map<long, CertInterval> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(prec);
  if (it == cache.end())
    it = cache.emplace(prec, lambda_enclosure(prec)).first;
  return it->second;
}

const CertInterval& cached_mu(long prec) {
  static std::mutex mu;
  static std::map<long, CertInterval> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(prec);
  if (it == cache.end()) it = cache.emplace(prec, mu_enclosure(prec)).first;
  return it->second;
}

// Certified sign of S_w((t,1), p) - M(t,1) at exact double t and p.
Sign difference_sign(double t, double p, long start_prec) {
  return with_escalation<Sign>(
      [&](long q) -> std::optional<Sign> {
        CertInterval ti = CertInterval::point(t, q);
        CertInterval one = CertInterval::point(1L, q);
        CertInterval pi = CertInterval::point(p, q);
        CertInterval m = neuman_sandor_of(ti, one);
        CertInterval sw = weighted_rms_of(ti, one, pi);
        CertInterval d = sw - m;
        Sign s = d.sign();
        if (s == Sign::indeterminate) return std::nullopt;
        return s;
      },
      start_prec, "sign of S_w - M at t = " + std::to_string(t));
}

}  // namespace

double equality_weight(double t, double rel_tol) {
  if (!(t > 1.0))
    throw NoRootInBracket("equality_weight: requires t > 1");
  if (!(rel_tol > 0.0))
    throw std::domain_error("equality_weight: tolerance must be positive");
  PositivePair ab(t, 1.0);
  double m = neuman_sandor(ab);
  double lo = 0.5, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    double d = weighted_rms(ab, Weight(mid)) - m;
    if (std::fabs(d) < rel_tol * m) return mid;
    (d < 0 ? lo : hi) = mid;
    if (hi - lo < 0x1p-60) break;
  }
  return 0.5 * (lo + hi);
}

BigFloat equality_weight_hp(double t, long prec) {
  if (!(t > 1.0))
    throw NoRootInBracket("equality_weight_hp: requires t > 1");
  long wp = prec + 16;
  BigFloat a(t, wp), b(1L, wp);
  BigFloat m = neuman_sandor_of(a, b);
  BigFloat lo(0.5, wp), hi(1L, wp);
  BigFloat two(2L, wp);
  // Halving [1/2, 1] past the requested precision: ~prec+2 steps.
  for (long i = 0; i < prec + 2; ++i) {
    BigFloat mid = (lo + hi) / two;
    BigFloat d = weighted_rms_of(a, b, mid) - m;
    if (d.sign() == 0) return mid;
    (d.sign() < 0 ? lo : hi) = mid;
  }
  return (lo + hi) / two;
}

LimitWeights limit_weights(long prec) {
  (void)prec;  // the double path already resolves both targets
  return {equality_weight(1.0 + 1e-4), equality_weight(1e6)};
}

CrossingWitness lambda_witness(const Weight& p, long prec) {
  long start = std::max(prec, 128L);
  // Certified p > lambda: the double p sits strictly outside the enclosure.
  const CertInterval& li = cached_lambda(start);
  CertInterval pi = CertInterval::point(p.p, start);
  if (!li.definitely_less(pi))
    throw WeightOutOfRange(
        "lambda_witness: weight must lie strictly above the lower sharp weight");

  // March upward until S_w - M is certified positive.
  double last_neg = 0.0;
  double t = 2.0;
  double pos_t = 0.0;
  while (t <= 1e30) {
    Sign s = difference_sign(t, p.p, start);
    if (s == Sign::positive) {
      pos_t = t;
      break;
    }
    if (s == Sign::negative) last_neg = t;
    t *= 2.0;
  }
  if (pos_t == 0.0)
    throw NoRootInBracket("lambda_witness: no certified positive point below cap");

  bool has_bracket = last_neg > 0.0;
  if (!has_bracket) {
    // The first probe was already positive; look for a negative point near 1
    // (exists whenever the right-derivative region is negative, i.e. p < mu).
    for (int k = 1; k <= 40; ++k) {
      double cand = 1.0 + std::ldexp(1.0, -k);
      Sign s = difference_sign(cand, p.p, start);
      if (s == Sign::negative) {
        last_neg = cand;
        has_bracket = true;
        break;
      }
    }
  }

  double t0;
  double blo = last_neg, bhi = pos_t;
  if (has_bracket) {
    // Bisect down to a tight crossing bracket.
    for (int i = 0; i < 60 && bhi - blo > 1e-9 * bhi; ++i) {
      double mid = 0.5 * (blo + bhi);
      Sign s = difference_sign(mid, p.p, start);
      (s == Sign::negative ? blo : bhi) = mid;
    }
    t0 = 0.5 * (blo + bhi);
  } else {
    t0 = pos_t;
    blo = bhi = pos_t;
  }

  // The witness facts behind "lambda is best possible": certified S_w > M
  // beyond the crossing, and (when bracketed) S_w < M below it.
  if (difference_sign(2 * t0, p.p, start) != Sign::positive ||
      difference_sign(10 * t0, p.p, start) != Sign::positive)
    throw NoRootInBracket("lambda_witness: positivity beyond t0 failed");
  if (has_bracket && difference_sign(t0 / 2, p.p, start) != Sign::negative)
    throw NoRootInBracket("lambda_witness: negativity below t0 failed");

  return {t0, has_bracket, blo, bhi, start};
}

SmallRatioWitness mu_witness(const Weight& p, long prec) {
  long start = std::max(prec, 128L);
  // Certified p < mu, decided exactly in Q(sqrt(3)).
  QuadExt3 pq(rational_from_double(p.p));
  if (!(pq < mu_exact()))
    throw WeightOutOfRange(
        "mu_witness: weight must lie strictly below the upper sharp weight");

  // Find any certified-negative ratio by halving, then push delta outward as
  // far as the certificate holds (so smaller p earns a larger delta).
  double delta = 1.0;
  while (difference_sign(1.0 + delta / 2, p.p, start) != Sign::negative) {
    delta /= 2;
    if (delta < 1e-30)
      throw NoRootInBracket("mu_witness: no certified neighborhood found");
  }
  while (delta < 1048576.0 &&
         difference_sign(1.0 + delta, p.p, start) == Sign::negative)
    delta *= 2;
  return {delta, start};
}

bool verify_theorem(const PositivePair& ab, long prec) {
  if (ab.a == ab.b)
    throw std::domain_error("verify_theorem: requires a != b");
  return with_escalation<bool>(
      [&](long q) -> std::optional<bool> {
        CertInterval a = CertInterval::point(ab.a, q);
        CertInterval b = CertInterval::point(ab.b, q);
        CertInterval m = neuman_sandor_of(a, b);
        CertInterval sl = weighted_rms_of(a, b, cached_lambda(q));
        CertInterval su = weighted_rms_of(a, b, cached_mu(q));
        if (sl.definitely_less(m) && m.definitely_less(su)) return true;
        return std::nullopt;  // enclosures touch: escalate
      },
      std::max(prec, 128L), "theorem chain for the given pair");
}

std::vector<CurveSample> sample_curve(double t_min, double t_max, int samples,
                                      bool log_spacing) {
  if (!(t_min > 1.0) || !(t_max >= t_min) || samples < 1)
    throw std::domain_error("sample_curve: need 1 < t_min <= t_max, samples >= 1");
  std::vector<CurveSample> out;
  out.reserve(static_cast<size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    double t;
    if (samples == 1) {
      t = t_min;
    } else if (log_spacing) {
      double lt = std::log(t_min) +
                  i * (std::log(t_max) - std::log(t_min)) / (samples - 1);
      t = std::exp(lt);
    } else {
      t = t_min + i * (t_max - t_min) / (samples - 1);
    }
    if (t <= 1.0) t = t_min;
    double p = equality_weight(t);
    PositivePair ab(t, 1.0);
    double m = neuman_sandor(ab);
    double res = weighted_rms(ab, Weight(p)) - m;
    out.push_back({t, p, m, res});
  }
  return out;
}

}  // namespace meancert

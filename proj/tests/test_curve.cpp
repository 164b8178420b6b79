#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "meancert/constants.hpp"
#include "meancert/curve.hpp"
#include "meancert/errors.hpp"
#include "oracles.hpp"

using namespace meancert;

namespace {

double oracle_double(const char* digits) {
  return BigFloat(digits, 192).to_double();
}

// Independent closed-form check: with a = t, b = 1 the equality
// S_w(a,b) = M(a,b) reduces to a quadratic in p(1-p):
//   y = (2 M^2 - (1+t^2)) / (2 (t-1)^2),  p = (1 + sqrt(1+4y)) / 2.
double quadratic_oracle(double t, long prec) {
  BigFloat m = neuman_sandor(PositivePair(t, 1.0), prec);
  BigFloat tt(t, prec);
  BigFloat y = (2L * m * m - (1L + tt * tt)) /
               (2L * (tt - 1L) * (tt - 1L));
  return ((1L + sqrt(1L + 4L * y)) / 2L).to_double();
}

}  // namespace

TEST_CASE("Equality weight matches the quadratic-formula oracle") {
  for (double t : {1.5, 2.0, 5.0, 10.0, 100.0, 1e4}) {
    double p = equality_weight(t);
    CHECK(std::fabs(p - quadratic_oracle(t, 256)) < 1e-10);
  }
  CHECK(std::fabs(equality_weight(2.0) - oracle_double(oracle::kPeq2)) < 1e-9);
  CHECK(std::fabs(equality_weight(10.0) - oracle_double(oracle::kPeq10)) <
        1e-9);
  CHECK(std::fabs(equality_weight(100.0) - oracle_double(oracle::kPeq100)) <
        1e-9);
}

TEST_CASE("Equality weight decreases from mu toward lambda") {
  double p2 = equality_weight(2.0);
  double p10 = equality_weight(10.0);
  double p100 = equality_weight(100.0);
  CHECK(p2 > p10);
  CHECK(p10 > p100);
  double lam = oracle_double(oracle::kLambda);
  double mu = oracle_double(oracle::kMu);
  CHECK(p100 > lam);
  CHECK(p2 < mu);
}

TEST_CASE("Equality weight stays strictly inside (lambda, mu)") {
  double lam = oracle_double(oracle::kLambda);
  double mu = oracle_double(oracle::kMu);
  for (int k = 0; k <= 40; ++k) {
    double ex = 0.0013 + (6.0 - 0.0013) * k / 40.0;  // t from ~1.003 to 1e6
    double p = equality_weight(std::pow(10.0, ex), 1e-18);
    CHECK(p > lam);
    CHECK(p < mu);
  }
}

TEST_CASE("High-precision equality weight refines the double value") {
  for (double t : {2.0, 10.0, 100.0}) {
    BigFloat p128 = equality_weight_hp(t, 128);
    BigFloat p256 = equality_weight_hp(t, 256);
    CHECK(abs(p128.at_precision(256) - p256) < BigFloat(1e-35, 256));
    CHECK(std::fabs(p128.to_double() - equality_weight(t)) < 1e-11);
  }
  CHECK(std::fabs(equality_weight_hp(2.0, 192).to_double() -
                  oracle_double(oracle::kPeq2)) < 1e-15);
}

TEST_CASE("Limit weights approach the sharp constants") {
  LimitWeights lw = limit_weights(128);
  CHECK(std::fabs(lw.p_near_one - oracle_double(oracle::kMu)) < 1e-3);
  CHECK(std::fabs(lw.p_at_infinity - oracle_double(oracle::kLambda)) < 1e-4);
  CHECK(lw.p_near_one > lw.p_at_infinity);
}

TEST_CASE("Curve sampling") {
  auto rows = sample_curve(1.5, 100.0, 25, true);
  REQUIRE(rows.size() == 25);
  CHECK(rows.front().t == doctest::Approx(1.5));
  CHECK(rows.back().t == doctest::Approx(100.0));
  double lam = oracle_double(oracle::kLambda);
  double mu = oracle_double(oracle::kMu);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) CHECK(rows[i].t > rows[i - 1].t);
    CHECK(rows[i].p_eq > lam);
    CHECK(rows[i].p_eq < mu);
    CHECK(rows[i].m_value ==
          doctest::Approx(neuman_sandor(PositivePair(rows[i].t, 1.0))));
    CHECK(std::fabs(rows[i].residual) < 1e-11 * rows[i].m_value);
  }
  // Log spacing: ratios of consecutive t are constant.
  double r0 = rows[1].t / rows[0].t;
  for (size_t i = 2; i < rows.size(); ++i)
    CHECK(rows[i].t / rows[i - 1].t == doctest::Approx(r0).epsilon(1e-9));

  auto lin = sample_curve(2.0, 4.0, 3, false);
  REQUIRE(lin.size() == 3);
  CHECK(lin[1].t == doctest::Approx(3.0));

  auto single = sample_curve(2.0, 2.0, 1, false);
  REQUIRE(single.size() == 1);
  CHECK(single[0].t == 2.0);
  CHECK(std::fabs(single[0].p_eq - oracle_double(oracle::kPeq2)) < 1e-9);

  CHECK_THROWS_AS(sample_curve(1.0, 2.0, 5, false), std::domain_error);
  CHECK_THROWS_AS(sample_curve(3.0, 2.0, 5, false), std::domain_error);
  CHECK_THROWS_AS(sample_curve(2.0, 3.0, 0, false), std::domain_error);
}

TEST_CASE("Theorem verification on sample pairs") {
  CHECK(verify_theorem(PositivePair(2.0, 1.0), 128));
  CHECK(verify_theorem(PositivePair(1.0, 2.0), 128));
  CHECK(verify_theorem(PositivePair(1e6, 1.0), 128));
  CHECK(verify_theorem(PositivePair(1.0 + 1e-6, 1.0), 128));
  CHECK(verify_theorem(PositivePair(17.0, 0.003), 128));
  CHECK_THROWS_AS(verify_theorem(PositivePair(3.0, 3.0), 128),
                  std::domain_error);
}

TEST_CASE("Theorem verification over random ratios") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> ratio_log(std::log(1.0 + 1e-6),
                                                   std::log(1e6));
  std::uniform_real_distribution<double> scale_log(-3.0, 3.0);
  for (int i = 0; i < 1000; ++i) {
    double b = std::exp(scale_log(rng));
    double t = std::exp(ratio_log(rng));
    CHECK(verify_theorem(PositivePair(b * t, b), 128));
  }
}

TEST_CASE("Lower-weight witness: crossing exists above lambda") {
  CrossingWitness w = lambda_witness(Weight(0.78), 128);
  CHECK(w.has_bracket);
  CHECK(w.t0 == doctest::Approx(oracle::kCross078).epsilon(1e-6));
  CHECK(w.bracket_lo < w.t0);
  CHECK(w.t0 < w.bracket_hi);
  CHECK((w.bracket_hi - w.bracket_lo) < 1e-6 * w.t0);

  CrossingWitness w2 = lambda_witness(Weight(0.775), 128);
  CHECK(w2.t0 == doctest::Approx(oracle::kCross0775).epsilon(1e-6));
  CHECK(w2.t0 > w.t0);  // closer to lambda crosses later
}

TEST_CASE("Lower-weight witness: no sign change above mu") {
  CrossingWitness w = lambda_witness(Weight(0.9), 128);
  CHECK(!w.has_bracket);
}

TEST_CASE("Lower-weight witness rejects weights at or below lambda") {
  CHECK_THROWS_AS(lambda_witness(Weight(0.76), 128), WeightOutOfRange);
  CHECK_THROWS_AS(lambda_witness(Weight(0.768002), 128), WeightOutOfRange);
}

TEST_CASE("Upper-weight witness: neighborhood below mu") {
  SmallRatioWitness w = mu_witness(Weight(0.78), 128);
  CHECK(w.delta > 0.0);
  CHECK(w.delta >= 2.0);
  CHECK(w.delta <= 8.0);
  // M > S_w inside the certified neighborhood.
  double probe = 1.0 + w.delta / 2.0;
  PositivePair ab(probe, 1.0);
  CHECK(neuman_sandor(ab) > weighted_rms(ab, Weight(0.78)));

  SmallRatioWitness far = mu_witness(Weight(0.6), 128);
  CHECK(far.delta > w.delta);  // no crossing at all below lambda

  SmallRatioWitness close = mu_witness(Weight(0.7886), 128);
  CHECK(close.delta < w.delta);  // nearly sharp weight pinches the window
}

TEST_CASE("Upper-weight witness rejects weights at or above mu") {
  CHECK_THROWS_AS(mu_witness(Weight(0.79), 128), WeightOutOfRange);
  CHECK_THROWS_AS(mu_witness(Weight(0.78867514), 128), WeightOutOfRange);
}

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "meancert/constants.hpp"
#include "meancert/errors.hpp"
#include "meancert/means.hpp"
#include "oracles.hpp"

using namespace meancert;
using oracle::ulp_distance;

namespace {

double oracle_double(const char* digits) {
  return BigFloat(digits, 192).to_double();
}

}  // namespace

TEST_CASE("Means at (2,1) match frozen references") {
  PositivePair ab(2.0, 1.0);
  CHECK(arithmetic_mean(ab) == 1.5);
  CHECK(ulp_distance(neuman_sandor(ab), oracle_double(oracle::kM21)) <= 1.0);
  CHECK(ulp_distance(second_seiffert(ab), oracle_double(oracle::kT21)) <= 1.0);
  CHECK(ulp_distance(root_mean_square(ab), oracle_double(oracle::kS21)) <= 1.0);
}

TEST_CASE("Weighted quadratic mean at (2,1) matches frozen references") {
  PositivePair ab(2.0, 1.0);
  double lam = oracle_double(oracle::kLambda);
  double mu = oracle_double(oracle::kMu);
  CHECK(ulp_distance(weighted_rms(ab, Weight(lam)),
                     oracle_double(oracle::kSLambda21)) <= 2.0);
  CHECK(ulp_distance(weighted_rms(ab, Weight(mu)),
                     oracle_double(oracle::kSMu21)) <= 2.0);
}

TEST_CASE("Weighted quadratic mean endpoints collapse to A and S") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int i = 0; i < 2000; ++i) {
    PositivePair ab(u(rng), u(rng));
    CHECK(ulp_distance(weighted_rms(ab, Weight(0.5)), arithmetic_mean(ab)) <=
          1.0);
    CHECK(ulp_distance(weighted_rms(ab, Weight(1.0)), root_mean_square(ab)) <=
          1.0);
  }
}

TEST_CASE("Weighted quadratic mean is increasing in the weight") {
  PositivePair ab(5.0, 2.0);
  double prev = weighted_rms(ab, Weight(0.5));
  for (int k = 1; k <= 10; ++k) {
    double p = std::min(0.5 + 0.05 * k, 1.0);
    double cur = weighted_rms(ab, Weight(p));
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("Symmetry is exact in the double path") {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> u(1e-3, 1e3);
  for (int i = 0; i < 5000; ++i) {
    double a = u(rng), b = u(rng);
    PositivePair ab(a, b), ba(b, a);
    CHECK(neuman_sandor(ab) == neuman_sandor(ba));
    CHECK(second_seiffert(ab) == second_seiffert(ba));
    CHECK(root_mean_square(ab) == root_mean_square(ba));
    CHECK(weighted_rms(ab, Weight(0.7)) == weighted_rms(ba, Weight(0.7)));
  }
}

TEST_CASE("Homogeneity within 2 ulps") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.2, 5.0);
  std::uniform_real_distribution<double> scale_log(-12.0, 12.0);
  for (int i = 0; i < 20000; ++i) {
    double a = u(rng), b = u(rng);
    double k = std::exp(scale_log(rng));
    PositivePair ab(a, b), kab(k * a, k * b);
    CHECK(ulp_distance(neuman_sandor(kab), k * neuman_sandor(ab)) <= 2.0);
    CHECK(ulp_distance(second_seiffert(kab), k * second_seiffert(ab)) <= 2.0);
    CHECK(ulp_distance(root_mean_square(kab), k * root_mean_square(ab)) <= 2.0);
  }
}

TEST_CASE("Mean property and strict ordering A < M < T < S") {
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> ratio_log(std::log(1.0 + 1e-6),
                                                   std::log(1e6));
  for (int i = 0; i < 20000; ++i) {
    double t = std::exp(ratio_log(rng));
    PositivePair ab(t, 1.0);
    double A = arithmetic_mean(ab), M = neuman_sandor(ab),
           T = second_seiffert(ab), S = root_mean_square(ab);
    CHECK(1.0 < A);
    CHECK(S < t);
    CHECK(A < M);
    CHECK(M < T);
    CHECK(T < S);
  }
}

TEST_CASE("Equal arguments collapse every mean") {
  PositivePair ab(3.7, 3.7);
  CHECK(neuman_sandor(ab) == 3.7);
  CHECK(second_seiffert(ab) == 3.7);
  CHECK(root_mean_square(ab) == 3.7);
  CHECK(weighted_rms(ab, Weight(0.8)) == 3.7);
  CHECK(neuman_sandor(ab, 128).to_double() == 3.7);
}

TEST_CASE("Series branch agrees with high precision at tiny ratios") {
  PositivePair ab(1.0 + 1e-10, 1.0);
  double m_ref = neuman_sandor(ab, 256).to_double();
  double t_ref = second_seiffert(ab, 256).to_double();
  CHECK(ulp_distance(neuman_sandor(ab), m_ref) <= 2.0);
  CHECK(ulp_distance(second_seiffert(ab), t_ref) <= 2.0);
  CHECK(neuman_sandor(ab) > 1.0);
  // At this ratio the means differ by ~x^2/6 ~ 4e-22, below double
  // resolution; only non-strict ordering is observable.
  CHECK(neuman_sandor(ab) <= second_seiffert(ab));
}

TEST_CASE("asinh_stable stays within 4 ulps across the dynamic range") {
  for (int k = 0; k <= 3000; ++k) {
    double x = std::pow(10.0, -30.0 + 30.0 * k / 3000.0);
    BigFloat ref = asinh(BigFloat(x, 128));
    CHECK(ulp_distance(asinh_stable(x), ref.to_double()) <= 4.0);
    BigFloat nref = asinh(BigFloat(-x, 128));
    CHECK(ulp_distance(asinh_stable(-x), nref.to_double()) <= 4.0);
  }
  CHECK(ulp_distance(asinh_stable(1e300),
                     asinh(BigFloat(1e300, 128)).to_double()) <= 4.0);
  CHECK(asinh_stable(1e-300) == 1e-300);
  CHECK(asinh_stable(0.0) == 0.0);
}

TEST_CASE("High-precision means match frozen references") {
  PositivePair ab(2.0, 1.0);
  BigFloat m = neuman_sandor(ab, 256);
  BigFloat t = second_seiffert(ab, 256);
  BigFloat s = root_mean_square(ab, 256);
  BigFloat tol(1e-37, 320);
  CHECK(abs(m - BigFloat(oracle::kM21, 320)) < tol);
  CHECK(abs(t - BigFloat(oracle::kT21, 320)) < tol);
  CHECK(abs(s - BigFloat(oracle::kS21, 320)) < tol);
}

TEST_CASE("Enclosures land on the frozen references") {
  PositivePair ab(2.0, 1.0);
  // Enclosure widths (~1e-76) are far below the 42-digit references, so the
  // references are checked against midpoints at their own resolution.
  auto near = [](const CertInterval& iv, const char* digits) {
    BigFloat v(digits, 320);
    return abs(iv.midpoint() - v) < BigFloat(1e-40, 320);
  };
  CertInterval m = neuman_sandor_enclosure(ab, 256);
  CertInterval t = second_seiffert_enclosure(ab, 256);
  CertInterval s = root_mean_square_enclosure(ab, 256);
  CertInterval a = arithmetic_mean_enclosure(ab, 256);
  CHECK(near(m, oracle::kM21));
  CHECK(near(t, oracle::kT21));
  CHECK(near(s, oracle::kS21));
  CHECK(a.contains(Rational(3, 2)));
  CHECK(m.width().to_double() < 1e-60);

  CHECK(a.definitely_less(m));
  CHECK(m.definitely_less(t));
  CHECK(t.definitely_less(s));
}

TEST_CASE("Enclosures contain double results for random pairs") {
  std::mt19937_64 rng(25);
  std::uniform_real_distribution<double> u(0.05, 20.0);
  for (int i = 0; i < 300; ++i) {
    double a = u(rng), b = u(rng);
    if (a == b) continue;
    PositivePair ab(a, b);
    double m = neuman_sandor(ab);
    CertInterval iv = neuman_sandor_enclosure(ab, 160);
    double pad = 4 * (std::nextafter(m, 1e308) - m);
    CHECK(iv.lower_double() - pad <= m);
    CHECK(m <= iv.upper_double() + pad);
    double w = weighted_rms(ab, Weight(0.77));
    CertInterval wiv = weighted_rms_enclosure(ab, Weight(0.77), 160);
    double wpad = 4 * (std::nextafter(w, 1e308) - w);
    CHECK(wiv.lower_double() - wpad <= w);
    CHECK(w <= wiv.upper_double() + wpad);
  }
}

TEST_CASE("Argument validation") {
  CHECK_THROWS_AS(PositivePair(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(PositivePair(-2.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(PositivePair(1.0, std::nan("")), std::domain_error);
  double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(PositivePair(1.0, inf), std::domain_error);
  CHECK_THROWS_AS(Weight(0.49), WeightOutOfRange);
  CHECK_THROWS_AS(Weight(1.01), WeightOutOfRange);
  CHECK_THROWS_AS(Weight(std::nan("")), WeightOutOfRange);
  CHECK_NOTHROW(Weight(0.5));
  CHECK_NOTHROW(Weight(1.0));
}

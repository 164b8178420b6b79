#include <doctest.h>

#include <random>
#include <stdexcept>

#include "meancert/constants.hpp"
#include "meancert/polynomial.hpp"
#include "meancert/quadext.hpp"
#include "meancert/rational.hpp"
#include "oracles.hpp"

using namespace meancert;

TEST_CASE("Rational helpers") {
  CHECK(rational(2, 4) == rational(1, 2));
  CHECK(sign_of(rational(-3, 7)) == -1);
  CHECK(sign_of(Rational(0)) == 0);
  CHECK(rational_from_double(0.5) == rational(1, 2));
  CHECK(to_string(rational(22, 7)) == std::string("22/7"));
}

TEST_CASE("QuadExt3 field operations") {
  QuadExt3 root3(Rational(0), Rational(1));
  CHECK(root3 * root3 == QuadExt3(3));
  QuadExt3 a(Rational(1), Rational(1));   // 1 + sqrt 3
  QuadExt3 b(Rational(1), Rational(-1));  // 1 - sqrt 3
  CHECK(a * b == QuadExt3(-2));
  CHECK(a + b == QuadExt3(2));
  CHECK((a / b) * b == a);
  CHECK_THROWS_AS(a / QuadExt3(0), std::domain_error);
}

TEST_CASE("QuadExt3 exact sign with opposite-sign parts") {
  CHECK(QuadExt3(Rational(2), Rational(-1)).sign() == 1);   // 2 - sqrt 3
  CHECK(QuadExt3(Rational(-2), Rational(1)).sign() == -1);  // sqrt 3 - 2
  CHECK(QuadExt3(Rational(-1), Rational(1)).sign() == 1);   // sqrt 3 - 1
  CHECK(QuadExt3(0).sign() == 0);
  CHECK(QuadExt3(Rational(0), Rational(-5)).sign() == -1);
}

TEST_CASE("Upper sharp weight is an exact quadratic root") {
  QuadExt3 mu = mu_exact();
  QuadExt3 val = 6 * mu * mu - 6 * mu + 1;
  CHECK(val == QuadExt3(0));
  CHECK(mu > QuadExt3(rational_from_double(0.788675134594812)));
  CHECK(mu < QuadExt3(rational_from_double(0.788675134594813)));
}

TEST_CASE("QuadExt3 enclosure brackets the numeric value") {
  CertInterval iv = mu_exact().enclose(256);
  BigFloat ref(oracle::kMu, 320);
  CHECK(abs(iv.midpoint() - ref) < BigFloat(1e-40, 320));
  CHECK(iv.width().to_double() < 1e-70);
}

TEST_CASE("Polynomial evaluation, derivative, product") {
  Polynomial<Rational> p{rational(1), rational(-2), rational(1)};  // (t-1)^2
  CHECK(p(Rational(3)) == rational(4));
  CHECK(p.degree() == 2);
  Polynomial<Rational> d = p.derivative();
  CHECK(d == Polynomial<Rational>{rational(-2), rational(2)});

  Polynomial<Rational> lin{rational(-1), rational(1)};  // t - 1
  CHECK(lin * lin == p);
  CHECK((p - lin * lin).is_zero());

  Polynomial<Rational> sum = p + lin;
  CHECK(sum(Rational(2)) == rational(2));
}

TEST_CASE("Polynomial equality ignores trailing zero coefficients") {
  Polynomial<Rational> a{rational(1), rational(2)};
  Polynomial<Rational> b{rational(1), rational(2), rational(0)};
  CHECK(a == b);
  CHECK(b.normalized().degree() == 1);
}

TEST_CASE("from_longs and map_poly") {
  Polynomial<Rational> p =
      Polynomial<Rational>::from_longs(Rational(1), {1, 0, -3});
  CHECK(p(Rational(2)) == rational(-11));
  auto q = map_poly<QuadExt3>(
      p, [](const Rational& c) { return QuadExt3(c); });
  CHECK(q(QuadExt3(2)) == QuadExt3(-11));
}

TEST_CASE("Sturm root counting") {
  Polynomial<Rational> sq{rational(-2), rational(0), rational(1)};  // t^2-2
  CHECK(sturm_root_count(sq, rational(0), rational(2)) == 1);
  CHECK(sturm_root_count(sq, rational(-2), rational(2)) == 2);

  Polynomial<Rational> cubic =
      Polynomial<Rational>{rational(-1), rational(1)} *
      Polynomial<Rational>{rational(-2), rational(1)} *
      Polynomial<Rational>{rational(-3), rational(1)};
  CHECK(sturm_root_count(cubic, rational(0), rational(7, 2)) == 3);
  CHECK(sturm_root_count(cubic, rational(3, 2), rational(5, 2)) == 1);

  Polynomial<Rational> dbl{rational(1), rational(-2), rational(1)};
  CHECK(sturm_root_count(dbl, rational(0), rational(3)) == 1);  // distinct root

  Polynomial<Rational> none{rational(1), rational(0), rational(1)};  // t^2+1
  CHECK(sturm_root_count(none, rational(-10), rational(10)) == 0);
}

TEST_CASE("Sturm counts match on random quadratics") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> coeff(-9, 9);
  for (int i = 0; i < 200; ++i) {
    long a = coeff(rng), b = coeff(rng), c = coeff(rng);
    if (a == 0) continue;
    Polynomial<Rational> p{rational(c), rational(b), rational(a)};
    long disc = b * b - 4 * a * c;
    int expected = disc < 0 ? 0 : (disc == 0 ? 1 : 2);
    CHECK(sturm_root_count(p, rational(-100), rational(100)) == expected);
  }
}

#include <doctest.h>

#include <random>

#include "orthopoly/errors.hpp"
#include "orthopoly/hypergeom.hpp"
#include "orthopoly/qsqrt.hpp"
#include "orthopoly/rational.hpp"

using namespace orthopoly;

TEST_CASE("rational parsing and printing") {
  CHECK(Rational::parse("6/4").str() == "3/2");
  CHECK(Rational::parse("-2/4").str() == "-1/2");
  CHECK(Rational::parse("7").str() == "7");
  CHECK(Rational::parse("0.25") == Rational(1, 4));
  CHECK(Rational::parse("-1.5") == Rational(-3, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  CHECK_THROWS(Rational::parse("abc"));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
  CHECK(pochhammer(Rational(-3), 4) == Rational(0));
  CHECK(pochhammer(Rational(-3), 3) == Rational(-6));
  CHECK(pochhammer(Rational(5), 0) == Rational(1));
  CHECK(factorial(6) == Rational(720));
}

TEST_CASE("qsqrt equality and products") {
  QSqrt a(1, Rational(2));
  QSqrt b(-1, Rational(8));
  CHECK((a * b) == QSqrt(-1, Rational(16)));
  CHECK((a * b).as_rational().value() == Rational(-4));
  CHECK(!a.as_rational());
  CHECK(QSqrt::from_rational(Rational(-3, 2)) == QSqrt(-1, Rational(9, 4)));
  CHECK_THROWS(QSqrt(1, Rational(-1)));
}

TEST_CASE("sums of square roots are canonical") {
  QSqrtSum s;
  s.add(QSqrt(1, Rational(2)));
  s.add(QSqrt(1, Rational(8)));   // 2 sqrt 2
  s.add(QSqrt(-1, Rational(3)));
  CHECK(s.terms().size() == 2);
  QSqrtSum t;
  t.add(QSqrt(1, Rational(18)));  // 3 sqrt 2
  t.add(QSqrt(-1, Rational(3)));
  CHECK(s == t);
  QSqrtSum u;
  u.add(QSqrt(1, Rational(2)));
  u.add(QSqrt(1, Rational(1, 2)));  // sqrt2 + sqrt2/2 = sqrt(9/2)
  CHECK(u.as_qsqrt().value() == QSqrt(1, Rational(9, 2)));
  QSqrtSum z = s - s;
  CHECK(z.is_zero());
  CHECK((QSqrtSum(QSqrt(1, Rational(2))) * QSqrtSum(QSqrt(1, Rational(2)))).as_qsqrt().value() ==
        QSqrt(1, Rational(4)));
}

TEST_CASE("terminating hypergeometric series") {
  // Chu-Vandermonde: 2F1(-n, b; c; 1) = (c-b)_n / (c)_n
  for (int n = 0; n < 6; ++n) {
    Rational b(2, 7), c(5, 3);
    HypSeries s{{Rational(-n), b}, {c}, 1};
    CHECK(hyp_terminating(s) == pochhammer(c - b, n) / pochhammer(c, n));
  }
  // Pfaff-Saalschutz: 3F2(-n, a, b; c, 1+a+b-c-n; 1) = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n)
  for (int n = 0; n < 6; ++n) {
    Rational a(1, 3), b(-5, 4), c(7, 2);
    HypSeries s{{Rational(-n), a, b}, {c, Rational(1) + a + b - c - n}, 1};
    CHECK(hyp_terminating(s) ==
          pochhammer(c - a, n) * pochhammer(c - b, n) / (pochhammer(c, n) * pochhammer(c - a - b, n)));
  }
  CHECK_THROWS_AS(hyp_terminating({{Rational(1, 2)}, {Rational(1)}, 1}), NonTerminating);
  CHECK_THROWS_AS(hyp_terminating({{Rational(-3)}, {Rational(-1)}, 1}), BottomPole);
  // A bottom pole past the end of the series is harmless.
  CHECK_NOTHROW(hyp_terminating({{Rational(-2)}, {Rational(-2)}, 1}));
  CHECK(hyp_terminating({{Rational(0), Rational(3)}, {Rational(-5)}, 1}) == Rational(1));
}

TEST_CASE("cleared series agrees with the plain series times the bottom Pochhammers") {
  HypSeries s{{Rational(-3), Rational(2, 5), Rational(-1, 3)}, {Rational(7, 4), Rational(-9, 2)}, Rational(2, 3)};
  CHECK(hyp_cleared(s, 3) ==
        hyp_terminating(s) * pochhammer(Rational(7, 4), 3) * pochhammer(Rational(-9, 2), 3));
  // Stays finite where the plain form has a pole.
  HypSeries pole{{Rational(-2), Rational(1)}, {Rational(-1)}, 1};
  CHECK_THROWS_AS(hyp_terminating(pole), BottomPole);
  // (-1)_2 [1 + (-2)(1)/(-1) + ...]: the k=1 term has (b+1)_1 = 0 and k=2 term
  // (-2)_2 (1)_2 / 2! = 2, so only k=0 and k=2 survive: 0 + 2 = 2.
  CHECK(hyp_cleared(pole, 2) == Rational(2));
}

namespace {
Rational random_rational(std::mt19937_64& rng) {
  long num = static_cast<long>(rng() % 41) - 20;
  long den = static_cast<long>(rng() % 7) + 1;
  return Rational(num, den);
}
}  // namespace

TEST_CASE("whipple transformation of balanced 4F3 on random tuples") {
  std::mt19937_64 rng(20261018);
  int checked = 0;
  while (checked < 100) {
    const long m = static_cast<long>(rng() % 6);
    Rational X = random_rational(rng), Y = random_rational(rng), Z = random_rational(rng);
    Rational U = random_rational(rng), V = random_rational(rng);
    Rational W = Rational(1 - m) + X + Y + Z - U - V;  // balanced
    Rational V2 = Rational(1 - m) - V + Z, W2 = Rational(1 - m) - W + Z;
    try {
      Rational lhs = pochhammer(U, m) * pochhammer(V, m) * pochhammer(W, m) *
                     hyp_terminating({{Rational(-m), X, Y, Z}, {U, V, W}, 1});
      Rational rhs = pochhammer(V2, m) * pochhammer(W2, m) * pochhammer(U, m) *
                     hyp_terminating({{Rational(-m), U - X, U - Y, Z}, {V2, W2, U}, 1});
      CHECK(lhs == rhs);
      ++checked;
    } catch (const BottomPole&) {
      // resample
    }
  }
}

TEST_CASE("series value is symmetric in its top parameters") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Rational a = random_rational(rng), b = random_rational(rng);
    Rational c = random_rational(rng) + Rational(1, 11);
    HypSeries s1{{Rational(-4), a, b}, {c, Rational(13, 3)}, Rational(3, 5)};
    HypSeries s2{{b, Rational(-4), a}, {Rational(13, 3), c}, Rational(3, 5)};
    try {
      CHECK(hyp_terminating(s1) == hyp_terminating(s2));
    } catch (const BottomPole&) {
    }
  }
}

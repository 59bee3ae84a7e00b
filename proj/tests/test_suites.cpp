#include <doctest.h>

#include <set>

#include "orthopoly/suites.hpp"

using namespace orthopoly;

TEST_CASE("sampler is deterministic and stays in range") {
  Sampler a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 50; ++i) {
    const Rational x = a.rational(-2, 3, 7);
    CHECK(x == b.rational(-2, 3, 7));
    CHECK(x >= Rational(-2));
    CHECK(x < Rational(3));
    if (x != c.rational(-2, 3, 7)) differs = true;
  }
  CHECK(differs);
  Sampler s(7);
  for (int i = 0; i < 20; ++i) {
    for (const auto& k : s.kappa(3)) CHECK(k > Rational(-1));
    const auto p = s.permutation(5);
    CHECK(std::set<int>(p.images().begin(), p.images().end()).size() == 5);
  }
}

TEST_CASE("small suites pass") {
  CHECK(dimension_suite(4, 5).ok());
  CHECK(orthogonality_suite({0, 0, 0}, 2).ok());
  CHECK(sum_identity_suite({{1, 2, 1}}, 3).ok());
  CHECK(harmonics_suite(1).ok());
}

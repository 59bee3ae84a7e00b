#include <doctest.h>

#include "orthopoly/errors.hpp"
#include "orthopoly/racah.hpp"

using namespace orthopoly;

namespace {
// beta_j increasing with generic rational gaps, the regime the simplex
// connection formulas produce.
RacahParams sample(std::size_t d, int N) {
  std::vector<Rational> b{Rational(1, 2)};
  for (std::size_t j = 1; j <= d + 1; ++j) b.push_back(b.back() + Rational(7, 6) + Rational(static_cast<long>(j), 5));
  return {b, N};
}

std::vector<MultiIndex> degrees(std::size_t d, int N) {
  std::vector<MultiIndex> out;
  for (int n = 0; n <= N; ++n)
    for (const auto& nu : compositions(d, n)) out.push_back(nu);
  return out;
}
}  // namespace

TEST_CASE("two-variable values agree with the reference sums") {
  RacahParams p{{Rational(1, 2), Rational(5, 3), Rational(13, 4), Rational(9, 2)}, 3};
  CHECK(racah_multi({1, 1}, {1, 2}, p) == Rational(10207, 48));
  CHECK(racah_multi({2, 0}, {0, 3}, p) == Rational(65975, 96));
  CHECK(racah_weight({1, 2}, p) == Rational(12597, 512));
  CHECK(racah_norm({0, 0}, p) == Rational(1716, 7));
  CHECK(racah_norm({1, 0}, p) == Rational(4393389, 128));
  CHECK(racah_norm({0, 1}, p) == Rational(1486485, 16));
  CHECK(racah_norm({1, 1}, p) == Rational(5068088025LL, 512));
  CHECK(racah_norm_by_sum({2, 1}, p) == Rational(mpq_class("158753250030375/65536")));
}

TEST_CASE("lattice sizes") {
  CHECK(racah_lattice(1, 4).size() == 5);
  CHECK(racah_lattice(2, 3).size() == 10);
  CHECK(racah_lattice(3, 5).size() == 56);
}

TEST_CASE("multivariable orthogonality and closed-form norms") {
  for (std::size_t d : {2u, 3u})
    for (int N = 1; N <= (d == 2 ? 5 : 4); ++N) {
      RacahParams p = sample(d, N);
      auto pts = racah_lattice(d, N);
      auto degs = degrees(d, N);
      std::vector<Rational> w;
      for (const auto& x : pts) w.push_back(racah_weight(x, p));
      std::vector<std::vector<Rational>> vals;
      for (const auto& nu : degs) {
        std::vector<Rational> row;
        for (const auto& x : pts) row.push_back(racah_multi(nu, x, p));
        vals.push_back(row);
      }
      bool ok = true;
      for (std::size_t a = 0; a < degs.size(); ++a)
        for (std::size_t b = a; b < degs.size(); ++b) {
          Rational s = 0;
          for (std::size_t i = 0; i < pts.size(); ++i) s += w[i] * vals[a][i] * vals[b][i];
          Rational want = a == b ? racah_norm(degs[a], p) : Rational(0);
          if (s != want) ok = false;
        }
      CHECK_MESSAGE(ok, "d=" << d << " N=" << N);
    }
}

TEST_CASE("duality exchanges variables and degrees") {
  for (std::size_t d : {1u, 2u, 3u})
    for (int N = 1; N <= 4; ++N) {
      RacahParams p = sample(d, N);
      const std::size_t dd = d;
      for (const auto& x : racah_lattice(dd, N))
        for (const auto& nu : degrees(dd, N)) {
          RacahPoint pt{x, nu, p};
          RacahPoint du = racah_dual(pt);
          // Normalized values coincide.
          CHECK(racah_multi(nu, x, p) / racah_dual_normalizer(nu, p) ==
                racah_multi(du.nu, du.x, du.params) / racah_dual_normalizer(du.nu, du.params));
          // Squared orthonormal values coincide.
          CHECK(racah_weighted_normalized(nu, x, p) == racah_weighted_normalized(du.nu, du.x, du.params));
          // Applying the map twice returns the original point.
          RacahPoint back = racah_dual(du);
          CHECK(back.x == x);
          CHECK(back.nu == nu);
          CHECK(back.params.beta == p.beta);
        }
    }
}

TEST_CASE("norm times dual weight is a constant") {
  for (std::size_t d : {1u, 2u, 3u})
    for (int N = 1; N <= 4; ++N) {
      RacahParams p = sample(d, N);
      const auto& b = p.beta;
      for (const auto& nu : degrees(d, N)) {
        RacahPoint du = racah_dual({MultiIndex(d), nu, p});
        const Rational z = racah_dual_normalizer(nu, p);
        Rational lhs = racah_norm(nu, p) * racah_weight(du.x, du.params) / (z * z);
        Rational c = factorial(N) * pochhammer(b[0] + 1, N);
        Rational rhs = pochhammer(b[d + 1], 2 * N) * pochhammer(du.params.beta[d + 1], 2 * N) / (c * c);
        CHECK(lhs == rhs);
      }
    }
}

TEST_CASE("second family is the reflected first family") {
  for (std::size_t d : {1u, 2u, 3u})
    for (int N = 1; N <= 4; ++N) {
      RacahParams p = sample(d, N);
      for (const auto& x : racah_lattice(d, N))
        for (const auto& nu : degrees(d, N)) {
          RacahPoint c = racah_conjugate({x, nu, p});
          CHECK(racah_multi(nu, x, p) == racah_prime(c.nu, c.x, c.params));
        }
    }
}

TEST_CASE("second dual map lands in the second family") {
  for (std::size_t d : {1u, 2u, 3u})
    for (int N = 1; N <= 3; ++N) {
      RacahParams p = sample(d, N);
      for (const auto& x : racah_lattice(d, N))
        for (const auto& nu : degrees(d, N)) {
          RacahPoint t = racah_dual_prime({x, nu, p});
          CHECK(racah_weighted_normalized(nu, x, p) ==
                racah_prime_weighted_normalized(t.nu, t.x, t.params));
        }
    }
}

TEST_CASE("one-variable bridge") {
  for (int N = 1; N <= 5; ++N) {
    RacahParams p = sample(1, N);
    Racah1DParams q = racah_bridge_params(p);
    CHECK(q.alpha == Rational(-N - 1));
    Rational wratio = racah_weight({0}, p) / racah_weight_1d(0, q);
    for (int n = 0; n <= N; ++n) {
      Rational f = racah_bridge_factor(n, p);
      CHECK(!f.is_zero());
      for (int x = 0; x <= N; ++x) CHECK(racah_multi({n}, {x}, p) == f * racah_1d(n, x, q));
    }
    for (int x = 0; x <= N; ++x) CHECK(racah_weight({x}, p) == wratio * racah_weight_1d(x, q));
    // classical orthogonality
    for (int n = 0; n <= N; ++n)
      for (int m = n + 1; m <= N; ++m) {
        Rational s = 0;
        for (int x = 0; x <= N; ++x) s += racah_weight_1d(x, q) * racah_1d(n, x, q) * racah_1d(m, x, q);
        CHECK(s.is_zero());
      }
  }
}

TEST_CASE("degree above N is rejected") {
  RacahParams p = sample(2, 2);
  CHECK_THROWS_AS(racah_multi({2, 1}, {0, 1}, p), InvalidParameter);
  CHECK_THROWS_AS(racah_multi({1, 0}, {2, 1}, p), InvalidParameter);
}

TEST_CASE("starred weight reduces to the weight when gamma = delta") {
  Racah1DParams p{Rational(-5), Rational(17, 3), Rational(2, 7), Rational(2, 7), 4};
  for (int x = 0; x <= 4; ++x) CHECK(racah_weight_star(x, p) == racah_weight_1d(x, p));
  Racah1DParams q{Rational(-5), Rational(17, 3), Rational(2, 7), Rational(1, 2), 4};
  for (int x = 0; x <= 4; ++x)
    CHECK(racah_weight_star(x, q) * pochhammer(q.gamma + 1, x) == racah_weight_1d(x, q) * pochhammer(q.delta + 1, x));
}

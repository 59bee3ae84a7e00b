#include <doctest.h>

#include "orthopoly/ball_sphere.hpp"
#include "orthopoly/errors.hpp"

using namespace orthopoly;

namespace {
const Rational half(1, 2);

// int_{-1}^{1} t^{2k} |t|^{2 mu} (1-t^2)^{lambda - 1/2} dt, normalized by k = 0
Rational gegenbauer_moment(int k, const Rational& lambda, const Rational& mu) {
  return pochhammer(mu + half, k) / pochhammer(lambda + mu + 1, k);
}

Rational gegenbauer_inner(const UniPoly& f, const UniPoly& g, const Rational& lambda, const Rational& mu) {
  Rational s = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if ((i + j) % 2 == 0) s += f[i] * g[j] * gegenbauer_moment(static_cast<int>((i + j) / 2), lambda, mu);
  return s;
}
}  // namespace

TEST_CASE("generalized gegenbauer polynomials") {
  const Rational lambda(3, 2), mu(1, 3);
  CHECK(gegenbauer_poly(0, lambda, mu) == UniPoly{1});
  const auto g1 = gegenbauer_gen(1, lambda, mu);
  CHECK(g1.parity == 1);
  CHECK(g1.core.size() == 1);
  // C_2 = ((lambda+mu)/(mu+1/2)) P_1^{(lambda-1/2, mu-1/2)}(2t^2-1), with
  // P_1^{(a,b)}(s) = (a+1) + (a+b+2)(s-1)/2
  const Rational a = lambda - half, b = mu - half;
  const Rational sc = (lambda + mu) / (mu + half);
  const UniPoly c2 = gegenbauer_poly(2, lambda, mu);
  CHECK(c2[0] == sc * ((a + 1) - (a + b + 2)));
  CHECK(c2[1] == 0);
  CHECK(c2[2] == sc * (a + b + 2));
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; m < n; ++m)
      CHECK(gegenbauer_inner(gegenbauer_poly(n, lambda, mu), gegenbauer_poly(m, lambda, mu), lambda, mu) == 0);
}

TEST_CASE("ball inner product: normalization, parity and the two routes") {
  const Kappa k{half, Rational(1, 3), Rational(1, 4)};
  CHECK(ball_inner_product(SparsePoly::constant(2, 1), SparsePoly::constant(2, 1), k) == 1);
  const auto classes = ball_parity_classes(3, 2);
  for (const auto& [nu, eps] : classes)
    for (const auto& [mu, eps2] : classes) {
      const auto p = q_ball(nu, eps, k), q = q_ball(mu, eps2, k);
      const Rational parity_route = ball_inner_product(p, q, k);
      CHECK(parity_route == ball_inner_product(expand_ball(p), expand_ball(q), k));
      if (!(eps == eps2) || !(nu == mu)) CHECK(parity_route == 0);
      else CHECK(parity_route != 0);
    }
}

TEST_CASE("q_ball: trivial element, counts and parity errors") {
  const Kappa k{0, 0, 0};
  CHECK(expand_ball(q_ball({0, 0}, {0, 0}, k)) == SparsePoly::constant(2, 1));
  CHECK(ball_parity_classes(3, 2).size() == 4);
  CHECK_THROWS_AS(q_ball({1, 0}, {1, 0}, k, 4), ParityMismatch);
  for (std::size_t d = 1; d <= 3; ++d)
    for (int n = 0; n <= 6; ++n)
      CHECK(ball_parity_classes(n, d).size() == static_cast<std::size_t>(binomial(n + static_cast<long>(d) - 1, n).to_long()));
}

TEST_CASE("ball basis is orthogonal against lower degrees") {
  const Kappa k{half, 0, Rational(1, 4)};
  std::vector<SparsePoly> all;
  for (int n = 0; n <= 4; ++n)
    for (const auto& [nu, eps] : ball_parity_classes(n, 2)) all.push_back(expand_ball(q_ball(nu, eps, k)));
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = 0; b < a; ++b) CHECK(ball_inner_product(all[a], all[b], k) == 0);
}

TEST_CASE("gegenbauer ball basis equals the parity images up to constants") {
  Rational s;
  CHECK(verify_ball_equivalence({0, 0}, {0, 0, 0}, &s).ok());
  CHECK(s == 1);
  CHECK(verify_ball_equivalence({2, 1}, {0, 0, 0}).ok());
  for (const Kappa& k : {Kappa{half, Rational(1, 3), Rational(1, 4)}, Kappa{-half, -half, 0}})
    for (int n = 0; n <= 4; ++n)
      for (const auto& alpha : compositions(2, n)) CHECK(verify_ball_equivalence(alpha, k).ok());
  const Kappa k3{half, 0, Rational(1, 3), 1};
  for (int n = 0; n <= 4; ++n)
    for (const auto& alpha : compositions(3, n)) CHECK(verify_ball_equivalence(alpha, k3).ok());
}

TEST_CASE("ball connection coefficients") {
  SUBCASE("identity") {
    const Kappa k{half, Rational(1, 3), Rational(1, 4)};
    const auto order = compositions(2, 3);
    for (const auto& a : order)
      for (const auto& b : order)
        CHECK(ball_connection(Permutation::identity(3), a, b, k) == (a == b ? QSqrt(1, 1) : QSqrt()));
  }
  SUBCASE("(12) at kappa = (0,0,1/2), eps = (1,0)") {
    const Kappa k{0, 0, half};
    const auto tau = Permutation::parse("(12)", 3);
    const auto g = ball_gram_connection(tau, k, 3);
    for (std::size_t i = 0; i < g.order.size(); ++i)
      for (std::size_t j = 0; j < g.order.size(); ++j)
        CHECK(ball_connection(tau, g.order[i], g.order[j], k) == g.normalized[i][j]);
    // P_{(3,0)}(tau x) = x_2 (...): a row of class (1,0) sits in column class (0,1)
    CHECK(ball_connection(tau, {3, 0}, {3, 0}, k).is_zero());
    CHECK(!ball_connection(tau, {3, 0}, {0, 3}, k).is_zero());
    CHECK(g.entries[0][0] == 0);
  }
  SUBCASE("block structure and c-hat at kappa + eps, d <= 3, n <= 5") {
    const Kappa k2{half, Rational(1, 3), Rational(1, 4)};
    for (const auto& tau : {Permutation::parse("(12)", 3)})
      for (int n = 0; n <= 5; ++n) {
        auto rep = verify_ball_blocks(tau, k2, n);
        CHECK(rep.ok());
      }
    const Kappa k3{half, 0, Rational(1, 3), 1};
    for (const char* t : {"(12)", "(13)", "(123)", "(132)", "(23)"})
      for (int n = 0; n <= 3; ++n) {
        auto rep = verify_ball_blocks(Permutation::parse(t, 4), k3, n);
        INFO(t << " n=" << n);
        CHECK(rep.ok());
      }
  }
  SUBCASE("the same-class rule holds only for tau fixing eps") {
    const Kappa k{half, Rational(1, 3), Rational(1, 4)};
    const auto tau = Permutation::parse("(12)", 3);
    const auto g = ball_gram_connection(tau, k, 3);
    int same_class_misses = 0;
    for (std::size_t i = 0; i < g.order.size(); ++i)
      for (std::size_t j = 0; j < g.order.size(); ++j) {
        const auto& a = g.order[i];
        const auto& b = g.order[j];
        const bool same = a[0] % 2 == b[0] % 2 && a[1] % 2 == b[1] % 2;
        if (!same && !g.entries[i][j].is_zero()) ++same_class_misses;
      }
    CHECK(same_class_misses > 0);
  }
  SUBCASE("tau may not move the last symbol") {
    CHECK_THROWS_AS(ball_gram_connection(Permutation::parse("(13)", 3), {0, 0, 0}, 1), InvalidParameter);
  }
}

TEST_CASE("disk polar basis") {
  CHECK(disk_polar_basis(0, 1, 0, 0) == SparsePoly::constant(2, 1));
  for (int n = 0; n <= 5; ++n) {
    for (const Rational& mu : {Rational(0), half}) {
      auto rep = verify_disk_polar(n, mu);
      INFO("n=" << n << " mu=" << mu);
      for (const auto& c : rep.checks) INFO(c.name << ": " << c.detail);
      CHECK(rep.ok());
    }
  }
}

TEST_CASE("sphere bases") {
  const Kappa k{half, Rational(1, 3), Rational(1, 4)};
  CHECK(sphere_inner_product(SparsePoly::constant(3, 1), SparsePoly::constant(3, 1), k) == 1);
  CHECK(expand_sphere(sphere_basis({0, 0}, {0, 0, 0}, k, 0)) == SparsePoly::constant(3, 1));
  CHECK_THROWS_AS(sphere_basis({1, 0}, {1, 0, 0}, k, 2), ParityMismatch);
  for (int n = 0; n <= 4; ++n) {
    const auto classes = sphere_parity_classes(n, 2);
    CHECK(static_cast<long>(classes.size()) == harmonic_dimension(n, 2));
    std::vector<ParityPoly> basis;
    for (const auto& [nu, eps] : classes) basis.push_back(sphere_basis(nu, eps, k, n));
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = 0; b <= a; ++b) {
        const Rational via_parity = sphere_inner_product(basis[a], basis[b], k);
        CHECK(via_parity == sphere_inner_product(expand_sphere(basis[a]), expand_sphere(basis[b]), k));
        CHECK((a == b) == !via_parity.is_zero());
      }
    // orthogonal to every lower-degree homogeneous polynomial restricted to the sphere
    if (n >= 1)
      for (const auto& e : compositions(3, n - 1))
        for (const auto& p : basis)
          CHECK(sphere_inner_product(expand_sphere(p), SparsePoly::monomial(e, 1), k) == 0);
  }
  for (std::size_t d = 1; d <= 4; ++d)
    for (int n = 0; n <= 6; ++n) CHECK(static_cast<long>(sphere_parity_classes(n, d).size()) == harmonic_dimension(n, d));
}

TEST_CASE("sphere connection coefficients, tau on every coordinate") {
  const Kappa k{half, Rational(1, 3), Rational(1, 4)};
  for (const auto& tau : all_permutations(3))
    for (int n = 0; n <= 4; ++n) {
      auto rep = verify_sphere_blocks(tau, k, n);
      INFO(tau.str() << " n=" << n);
      for (const auto& c : rep.checks) INFO(c.name << ": " << c.detail);
      CHECK(rep.ok());
    }
  const Kappa k3{half, 0, Rational(1, 3), 1};
  for (const char* t : {"(14)", "(1234)", "(13)(24)"})
    for (int n = 0; n <= 3; ++n) CHECK(verify_sphere_blocks(Permutation::parse(t, 4), k3, n).ok());
}

TEST_CASE("spherical harmonics on the 2-sphere") {
  CHECK(harmonic_dimension(2, 2) == 5);
  for (int n = 0; n <= 3; ++n) {
    auto rep = harmonics_check(n);
    for (const auto& c : rep.checks) INFO(c.name << ": " << c.detail);
    CHECK(rep.ok());
  }
}

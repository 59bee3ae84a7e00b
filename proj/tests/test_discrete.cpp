#include <doctest.h>

#include "orthopoly/closed_forms.hpp"
#include "orthopoly/discrete_families.hpp"
#include "orthopoly/errors.hpp"

using namespace orthopoly;

namespace {
const Kappa k2{Rational(1, 2), Rational(1, 3), Rational(1, 4)};

std::vector<MultiIndex> degrees_up_to(int n, std::size_t d) {
  std::vector<MultiIndex> out;
  for (int m = 0; m <= n; ++m)
    for (const auto& nu : enumerate_basis(m, d)) out.push_back(nu);
  return out;
}
}  // namespace

TEST_CASE("one-variable hahn: trivial values and orthogonality") {
  const Rational a(1, 2), b(2, 3);
  const int N = 5;
  for (int x = 0; x <= N; ++x) CHECK(hahn_1d(0, x, a, b, N) == 1);
  for (int n = 0; n <= N; ++n) CHECK(hahn_1d(n, 0, a, b, N) == 1);
  // weight (a+1)_x (b+1)_{N-x} / (x! (N-x)!)
  for (int n = 0; n <= N; ++n)
    for (int m = 0; m < n; ++m) {
      Rational s = 0;
      for (int x = 0; x <= N; ++x)
        s += hahn_1d(n, x, a, b, N) * hahn_1d(m, x, a, b, N) * pochhammer(a + 1, x) * pochhammer(b + 1, N - x) /
             (factorial(x) * factorial(N - x));
      CHECK(s == 0);
    }
}

TEST_CASE("hahn at nu = 0 is one") {
  const HahnContext ctx{k2, 4};
  for (const auto& alpha : hahn_lattice(2, 4)) CHECK(hahn_multi({0, 0}, alpha, ctx) == 1);
  for (const auto& v : hahn_from_generating({0, 0}, ctx)) CHECK(v == 1);
}

TEST_CASE("hahn product formula equals the generating function") {
  SUBCASE("d=1, n=1, N=2, kappa=0") {
    const HahnContext ctx{{0, 0}, 2};
    const auto lattice = hahn_lattice(1, 2);
    const auto gen = hahn_from_generating({1}, ctx);
    // (y1 + y2)^2 P_1(y1 / |y|) = y1^2 - y2^2, so H_1(alpha) = alpha_1 - 1
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      CHECK(gen[i] == hahn_multi({1}, lattice[i], ctx));
      CHECK(gen[i] == Rational(lattice[i][0] - 1));
    }
  }
  SUBCASE("d=2, N=5") {
    const HahnContext ctx{k2, 5};
    const auto lattice = hahn_lattice(2, 5);
    for (const auto& nu : degrees_up_to(3, 2)) {
      const auto gen = hahn_from_generating(nu, ctx);
      for (std::size_t i = 0; i < lattice.size(); ++i) CHECK(gen[i] == hahn_multi(nu, lattice[i], ctx));
    }
  }
  SUBCASE("d=3, N=4, integral kappa") {
    const HahnContext ctx{{0, 1, 0, 2}, 4};
    const auto lattice = hahn_lattice(3, 4);
    for (const auto& nu : degrees_up_to(2, 3)) {
      const auto gen = hahn_from_generating(nu, ctx);
      for (std::size_t i = 0; i < lattice.size(); ++i) CHECK(gen[i] == hahn_multi(nu, lattice[i], ctx));
    }
  }
}

TEST_CASE("hahn orthogonality and the norm B") {
  const HahnContext ctx{k2, 6};
  const auto all = degrees_up_to(4, 2);
  std::vector<std::vector<Rational>> values;
  for (const auto& nu : all) {
    std::vector<Rational> v;
    for (const auto& alpha : hahn_lattice(2, 6)) v.push_back(hahn_multi(nu, alpha, ctx));
    values.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const Rational s = hahn_inner(values[i], values[j], ctx);
      CHECK(s == (i == j ? hahn_norm_B(all[i], ctx) : Rational(0)));
    }
  CHECK(hahn_norm_B({0, 0}, ctx) == 1);
}

TEST_CASE("B relates to the simplex norm") {
  for (const auto& nu : degrees_up_to(4, 2)) {
    auto rep = verify_B_A(nu, {k2, 5});
    CHECK(rep.ok());
  }
}

TEST_CASE("hahn connection coefficients do not depend on N") {
  SUBCASE("(12) at kappa = 0, n = 1") {
    const auto tau = Permutation::parse("(12)", 3);
    const auto g3 = hahn_gram_connection(tau, {0, 0, 0}, 1, 3);
    const auto g4 = hahn_gram_connection(tau, {0, 0, 0}, 1, 4);
    CHECK(g3.entries == g4.entries);
    CHECK(g3.entries == hahn_connection(tau, {0, 0, 0}, 1));
  }
  SUBCASE("identity") {
    const auto h = hahn_connection(Permutation::identity(3), k2, 2);
    for (std::size_t i = 0; i < h.size(); ++i)
      for (std::size_t j = 0; j < h.size(); ++j) CHECK(h[i][j] == Rational(i == j ? 1 : 0));
  }
  SUBCASE("(23) is diagonal with alternating signs") {
    const auto tau = Permutation::parse("(23)", 3);
    const auto order = enumerate_basis(3, 2);
    const auto h = hahn_connection(tau, k2, 3);
    const Kappa tk = act(tau, k2);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t j = 0; j < order.size(); ++j) {
        const Rational want = i == j ? Rational(order[i][1] % 2 ? -1 : 1) * endpoint_product(order[i], k2) /
                                           endpoint_product(order[i], tk)
                                     : Rational(0);
        CHECK(h[i][j] == want);
      }
  }
  SUBCASE("every permutation of S_3 and a few of S_4") {
    for (const auto& tau : all_permutations(3)) {
      auto rep = verify_hahn_connection(tau, k2, 2, {3, 4, 5});
      CHECK(rep.ok());
    }
    const Kappa k3{Rational(1, 2), 0, Rational(2, 3), Rational(1, 5)};
    for (const char* t : {"(1234)", "(13)", "(24)"}) {
      auto rep = verify_hahn_connection(Permutation::parse(t, 4), k3, 2, {2, 3, 4});
      CHECK(rep.ok());
    }
  }
}

TEST_CASE("one-variable krawtchouk") {
  const Rational p(1, 3);
  const int N = 6;
  for (int x = 0; x <= N; ++x) {
    CHECK(krawtchouk_1d(0, x, p, N) == 1);
    CHECK(krawtchouk_1d(1, x, p, N) == Rational(1) - Rational(x) / (Rational(N) * p));
  }
  CHECK(krawtchouk_1d(1, 1, p, N) == Rational(1) + Rational(1) / (Rational(-N) * p));
  for (int n = 0; n <= N; ++n)
    for (int m = 0; m <= N; ++m) {
      Rational s = 0;
      for (int x = 0; x <= N; ++x)
        s += krawtchouk_1d(n, x, p, N) * krawtchouk_1d(m, x, p, N) * pow(p, x) * pow(1 - p, N - x) /
             (factorial(x) * factorial(N - x));
      s *= factorial(N);
      const Rational want = n == m ? factorial(n) * factorial(N - n) * pow(1 - p, n) / (factorial(N) * pow(p, n)) : 0;
      CHECK(s == want);
    }
}

TEST_CASE("krawtchouk orthogonality and the norm C") {
  for (const KrawContext& ctx : {KrawContext{{Rational(1, 4), Rational(1, 4)}, 5},
                                 KrawContext{{Rational(1, 5), Rational(1, 3), Rational(1, 6)}, 4}}) {
    const auto all = degrees_up_to(ctx.N, ctx.dim());
    std::vector<std::vector<Rational>> values;
    for (const auto& nu : all) {
      std::vector<Rational> v;
      for (const auto& x : kraw_lattice(ctx.dim(), ctx.N)) v.push_back(krawtchouk_multi(nu, x, ctx));
      values.push_back(std::move(v));
    }
    const auto lattice = kraw_lattice(ctx.dim(), ctx.N);
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        Rational s = 0;
        for (std::size_t k = 0; k < lattice.size(); ++k) s += values[i][k] * values[j][k] * kraw_weight(lattice[k], ctx);
        CHECK(s == (i == j ? krawtchouk_norm_C(all[i], ctx) : Rational(0)));
      }
  }
}

TEST_CASE("krawtchouk rejects invalid rho") {
  CHECK_THROWS_AS(validate({{Rational(1, 2), Rational(1, 2)}, 3}), InvalidParameter);
  CHECK_THROWS_AS(validate({{Rational(0), Rational(1, 2)}, 3}), InvalidParameter);
}

TEST_CASE("krawtchouk duality") {
  const std::vector<Rational> rho{Rational(1, 4), Rational(1, 4)};
  const auto dual = kraw_dual_map({1, 0}, {0, 2}, rho);
  CHECK(dual.rho == std::vector<Rational>{Rational(1, 3), Rational(1, 6)});
  CHECK(dual.x == MultiIndex{2, 0});
  CHECK(dual.nu == MultiIndex{0, 1});
  auto rep = verify_kraw_duality({rho, 4});
  INFO(rep.failures());
  CHECK(rep.ok());
  CHECK(verify_kraw_duality({{Rational(1, 5), Rational(1, 3), Rational(1, 6)}, 3}).ok());
}

TEST_CASE("rho-hat complement") {
  for (const auto& rho : {std::vector<Rational>{Rational(1, 4), Rational(1, 4)},
                          std::vector<Rational>{Rational(1, 5), Rational(1, 3), Rational(1, 6)}}) {
    const auto hat = kraw_rho_hat(rho);
    const Rational r1 = rho[0];
    CHECK(Rational(1) - total(hat) == (Rational(1) - total(rho)) / ((1 - r1) * (1 + r1 - total(rho))));
  }
}

TEST_CASE("cyclic krawtchouk coefficients against the discrete gram matrix") {
  for (const auto& rho : {std::vector<Rational>{Rational(1, 4), Rational(1, 4)},
                          std::vector<Rational>{Rational(1, 5), Rational(1, 3), Rational(1, 6)}}) {
    const std::size_t d = rho.size();
    const auto tau = cycle_prefix(d, d + 1);
    const auto trho = kraw_act(tau, rho);
    const int top = d == 2 ? 4 : 3;
    for (int n = 0; n <= top; ++n) {
      const int N = d == 2 ? 6 : n + 1;
      const auto g = kraw_gram_connection(tau, rho, n, N);
      for (std::size_t i = 0; i < g.order.size(); ++i)
        for (std::size_t j = 0; j < g.order.size(); ++j) {
          const QSqrt want = kraw_normalize_entry(g.entries[i][j], g.order[i], g.order[j], rho, trho, N);
          INFO(g.order[i].str() << " " << g.order[j].str());
          CHECK(kraw_cc_cyclic(g.order[i], g.order[j], rho, 1) == want);
          CHECK(kraw_cc_cyclic(g.order[i], g.order[j], rho, 2) == want);
        }
    }
  }
}

TEST_CASE("krawtchouk gram coefficients do not depend on N") {
  const std::vector<Rational> rho{Rational(1, 5), Rational(1, 3)};
  const auto tau = Permutation::parse("(13)", 3);
  CHECK(kraw_gram_connection(tau, rho, 2, 2).entries == kraw_gram_connection(tau, rho, 2, 4).entries);
}

TEST_CASE("hahn tends to krawtchouk") {
  SUBCASE("nu = 0 is exact") {
    auto r = hahn_to_kraw_limit_check({0, 0}, {1, 1}, {Rational(1, 4), Rational(1, 3)}, 3);
    CHECK(r.exact);
    CHECK(r.ok);
  }
  SUBCASE("d = 1") {
    auto r = hahn_to_kraw_limit_check({1}, {1}, {Rational(1, 3)}, 3);
    INFO(r.ratio);
    CHECK(!r.exact);
    CHECK(r.monotone);
    CHECK(r.ok);
  }
  SUBCASE("d = 2, nu = (1,1), N = 4") {
    const std::vector<Rational> rho{Rational(1, 4), Rational(1, 3)};
    for (const auto& x : kraw_lattice(2, 4)) {
      auto r = hahn_to_kraw_limit_check({1, 1}, x, rho, 4);
      INFO(x.str() << " ratio " << r.ratio);
      CHECK(r.ok);
    }
  }
  SUBCASE("normalized coefficients") {
    const std::vector<Rational> rho{Rational(1, 4), Rational(1, 3)};
    const auto tau = Permutation::parse("(123)", 3);
    for (const auto& nu : enumerate_basis(2, 2))
      for (const auto& mu : enumerate_basis(2, 2)) {
        auto r = hat_limit_check(tau, nu, mu, rho, 2);
        INFO(nu.str() << " " << mu.str() << " ratio " << r.ratio);
        CHECK(r.ok);
      }
  }
}

TEST_CASE("cyclic krawtchouk sign follows |mu| rather than mu_1") {
  const std::vector<Rational> rho{Rational(1, 5), Rational(1, 3), Rational(1, 6)};
  const auto tau = cycle_prefix(3, 4);
  const auto g = kraw_gram_connection(tau, rho, 2, 3);
  int printed_sign_mismatches = 0;
  for (std::size_t i = 0; i < g.order.size(); ++i)
    for (std::size_t j = 0; j < g.order.size(); ++j) {
      const auto& mu = g.order[j];
      QSqrt printed = kraw_cc_cyclic(g.order[i], mu, rho, 1);
      if ((mu.total() - mu[0]) % 2) printed = -printed;
      if (!(printed == kraw_normalize_entry(g.entries[i][j], g.order[i], mu, rho, kraw_act(tau, rho), 3)))
        ++printed_sign_mismatches;
    }
  CHECK(printed_sign_mismatches > 0);
}

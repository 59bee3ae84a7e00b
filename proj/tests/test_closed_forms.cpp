#include <doctest.h>

#include "orthopoly/closed_forms.hpp"

using namespace orthopoly;

namespace {
Kappa generic(std::size_t d) {
  Kappa k;
  for (std::size_t i = 0; i <= d; ++i) k.push_back(Rational(static_cast<long>(2 * i + 1), static_cast<long>(3 + i)));
  return k;
}

void require_gram(const Permutation& tau, const Kappa& k, int n) {
  auto closed = closed_connection(tau, k, n);
  auto rep = compare_with_gram(closed, gram_connection(tau, k, n));
  INFO(rep.checks.front().name << ": " << rep.checks.front().detail);
  CHECK(!closed.fallback);
  CHECK(rep.ok());
}

QSqrtSum gram_hat(const ConnMatrix& g, std::size_t i, std::size_t j) {
  return QSqrtSum(normalize_entry(g.entries[i][j], g.order[i], g.order[j], g.kappa, act(g.tau, g.kappa)));
}
}  // namespace

TEST_CASE("triangle formulas reproduce the symbolic oracle") {
  Kappa k{1, 2, 0};
  std::vector<std::vector<Rational>> want{{Rational(3, 5), Rational(-7, 6), Rational(28, 15)},
                                          {Rational(-3, 10), Rational(1, 12), Rational(16, 15)},
                                          {Rational(1, 10), Rational(1, 4), Rational(1, 5)}};
  for (int j = 0; j <= 2; ++j)
    for (int m = 0; m <= 2; ++m) CHECK(cc_2d_tau12(2, j, m, k) == want[j][m]);
}

TEST_CASE("every permutation of the triangle against gram") {
  for (const Kappa& k : {Kappa{Rational(1, 2), Rational(5, 3), Rational(2, 7)}, Kappa{0, 0, 0},
                         Kappa{Rational(-1, 2), Rational(-1, 2), 3}})
    for (const auto& tau : all_permutations(3))
      for (int n = 0; n <= 4; ++n) require_gram(tau, k, n);
}

TEST_CASE("both one-variable racah forms of the transposition (12)") {
  Kappa k{Rational(1, 2), Rational(5, 3), Rational(2, 7)};
  const Kappa tk = act(Permutation::parse("(12)", 3), k);
  for (int n = 0; n <= 4; ++n)
    for (int j = 0; j <= n; ++j)
      for (int m = 0; m <= n; ++m) {
        QSqrt want = normalize_entry(cc_2d_tau12(n, j, m, k), {n - j, j}, {n - m, m}, k, tk);
        CHECK(cc_2d_tau12_racah(n, j, m, k, 1) == want);
        CHECK(cc_2d_tau12_racah(n, j, m, k, 2) == want);
      }
}

TEST_CASE("restriction to x1 = 1") {
  for (int n = 0; n <= 4; ++n) {
    auto rep = verify_restriction_2d(n, {Rational(1, 2), Rational(5, 3), Rational(2, 7)});
    INFO(rep.failures());
    CHECK(rep.ok());
  }
}

TEST_CASE("summation identity for products of 4F3") {
  for (const Kappa& k : {Kappa{Rational(1, 2), Rational(5, 3), Rational(2, 7)}, Kappa{1, 0, 2}})
    for (int n = 0; n <= 4; ++n)
      for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) {
          auto s = sum_identity(n, a, b, k);
          CHECK(s.lhs == s.rhs);
        }
}

TEST_CASE("every permutation of the tetrahedron against gram") {
  const Kappa k{Rational(1, 2), Rational(5, 3), Rational(2, 7), Rational(3, 4)};
  for (const auto& tau : all_permutations(4))
    for (int n = 0; n <= 3; ++n) require_gram(tau, k, n);
  const Kappa integral{0, 1, 0, 2};
  for (const auto& tau : all_permutations(4)) require_gram(tau, integral, 2);
}

TEST_CASE("(13) uses the degree nu_2 in the one-variable factor") {
  const Kappa k{Rational(1, 2), Rational(5, 3), Rational(2, 7), Rational(3, 4)};
  const auto tau = Permutation::parse("(13)", 4);
  for (int n = 1; n <= 3; ++n) {
    auto g = gram_connection(tau, k, n);
    int mu_degree_mismatches = 0;
    for (std::size_t i = 0; i < g.order.size(); ++i)
      for (std::size_t j = 0; j < g.order.size(); ++j) {
        CHECK(cc_3d_tau13(g.order[i], g.order[j], k) == gram_hat(g, i, j));
        if (!(cc_3d_tau13(g.order[i], g.order[j], k, true) == gram_hat(g, i, j))) ++mu_degree_mismatches;
      }
    CHECK(mu_degree_mismatches > 0);
  }
}

TEST_CASE("(1342) relates to (132) without transposing indices") {
  const Kappa k{Rational(1, 2), Rational(5, 3), Rational(2, 7), Rational(3, 4)};
  auto g = gram_connection(Permutation::parse("(1342)", 4), k, 2);
  int transposed_mismatches = 0;
  for (std::size_t i = 0; i < g.order.size(); ++i)
    for (std::size_t j = 0; j < g.order.size(); ++j) {
      const auto& nu = g.order[i];
      const auto& mu = g.order[j];
      QSqrt direct = cc_3d_tau132(nu, mu, k);
      QSqrt transposed = cc_3d_tau132(mu, nu, k);
      if (nu[2] % 2) {
        direct = -direct;
        transposed = -transposed;
      }
      CHECK(QSqrtSum(direct) == gram_hat(g, i, j));
      if (!(QSqrtSum(transposed) == gram_hat(g, i, j))) ++transposed_mismatches;
    }
  CHECK(transposed_mismatches > 0);
}

TEST_CASE("three racah forms of the cyclic permutation") {
  for (std::size_t d = 2; d <= 5; ++d) {
    const Kappa k = generic(d);
    const auto tau = cycle_prefix(d, d + 1);
    for (int n = 0; n <= (d <= 3 ? 3 : 2); ++n) {
      auto g = gram_connection(tau, k, n);
      for (std::size_t i = 0; i < g.order.size(); ++i)
        for (std::size_t j = 0; j < g.order.size(); ++j)
          for (int form = 1; form <= 3; ++form)
            CHECK(QSqrtSum(cc_cyclic(g.order[i], g.order[j], k, form)) == gram_hat(g, i, j));
    }
  }
}

TEST_CASE("adjacent transpositions") {
  for (std::size_t d = 2; d <= 5; ++d) {
    const Kappa k = generic(d);
    for (std::size_t j = 1; j <= d; ++j) {
      std::vector<int> img(d + 1);
      for (std::size_t i = 0; i <= d; ++i) img[i] = static_cast<int>(i);
      std::swap(img[j - 1], img[j]);
      auto g = gram_connection(Permutation::from_images(img), k, 2);
      for (std::size_t a = 0; a < g.order.size(); ++a)
        for (std::size_t b = 0; b < g.order.size(); ++b)
          CHECK(QSqrtSum(cc_adjacent(j, g.order[a], g.order[b], k)) == gram_hat(g, a, b));
    }
  }
}

TEST_CASE("reductions for fixed leading and trailing symbols") {
  const Kappa k = generic(4);
  const auto fix_first = Permutation::parse("(34)", 5);
  const auto fix_last = Permutation::parse("(123)", 5);
  for (int n = 0; n <= 3; ++n) {
    auto g1 = gram_connection(fix_first, k, n);
    auto g2 = gram_connection(fix_last, k, n);
    const Kappa t1 = act(fix_first, k), t2 = act(fix_last, k);
    for (std::size_t a = 0; a < g1.order.size(); ++a)
      for (std::size_t b = 0; b < g1.order.size(); ++b) {
        const auto& nu = g1.order[a];
        const auto& mu = g1.order[b];
        CHECK(to_normalized(cc_fix_first(fix_first, nu, mu, k), nu, mu, k, t1) == gram_hat(g1, a, b));
        CHECK(to_normalized(cc_fix_last(fix_last, nu, mu, k), nu, mu, k, t2) == gram_hat(g2, a, b));
      }
  }
}

TEST_CASE("all of S_5 has a closed form that matches gram") {
  const Kappa k = generic(4);
  for (const auto& tau : all_permutations(5)) {
    CHECK(has_closed_form(tau));
    require_gram(tau, k, 2);
  }
}

TEST_CASE("S_6 at degree one, with gram fallback flagged") {
  const Kappa k = generic(5);
  int fallback = 0;
  for (const auto& tau : all_permutations(6)) {
    auto closed = closed_connection(tau, k, 1);
    CHECK(closed.fallback == !has_closed_form(tau));
    fallback += closed.fallback ? 1 : 0;
    CHECK(compare_with_gram(closed, gram_connection(tau, k, 1)).ok());
  }
  CHECK(fallback < 720 / 10);
}

TEST_CASE("closed matrices are orthogonal and scale back to raw coefficients") {
  const Kappa k{Rational(1, 2), Rational(5, 3), Rational(2, 7), Rational(3, 4)};
  for (const char* t : {"(123)", "(13)", "(14)(23)", "(1342)"}) {
    const auto tau = Permutation::parse(t, 4);
    auto raw = to_conn_matrix(closed_connection(tau, k, 2));
    CHECK(raw.entries == gram_connection(tau, k, 2).entries);
    CHECK(verify_orthogonality(raw).ok());
  }
}

TEST_CASE("single entries follow the same routes as whole matrices") {
  const Kappa k = generic(4);
  const auto tau = Permutation::parse("(15)(24)", 5);
  auto g = gram_connection(tau, k, 1);
  for (std::size_t a = 0; a < g.order.size(); ++a)
    for (std::size_t b = 0; b < g.order.size(); ++b)
      CHECK(to_normalized(closed_entry(tau, g.order[a], g.order[b], k), g.order[a], g.order[b], k, act(tau, k)) ==
            gram_hat(g, a, b));
}

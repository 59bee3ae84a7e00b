#include "orthopoly/suites.hpp"

#include <string>

#include "orthopoly/ball_sphere.hpp"
#include "orthopoly/closed_forms.hpp"
#include "orthopoly/discrete_families.hpp"
#include "orthopoly/errors.hpp"
#include "orthopoly/hypergeom.hpp"
#include "orthopoly/racah.hpp"

namespace orthopoly {

namespace {

std::string kappa_str(const std::vector<Rational>& k) {
  std::string s = "(";
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + k[i].str();
  return s + ")";
}

std::vector<MultiIndex> degrees_up_to(int n, std::size_t d) {
  std::vector<MultiIndex> out;
  for (int m = 0; m <= n; ++m)
    for (const auto& nu : enumerate_basis(m, d)) out.push_back(nu);
  return out;
}

QSqrtSum gram_hat(const ConnMatrix& g, std::size_t i, std::size_t j) {
  return QSqrtSum(normalize_entry(g.entries[i][j], g.order[i], g.order[j], g.kappa, act(g.tau, g.kappa)));
}

// Exact orthogonality sum_x w f_a f_b = delta_ab norm_a over a finite lattice.
template <class Value, class Weight, class Norm>
std::size_t lattice_orthogonality(const std::vector<MultiIndex>& degrees, const std::vector<MultiIndex>& lattice,
                                  Value value, Weight weight, Norm norm) {
  std::vector<Rational> w;
  for (const auto& x : lattice) w.push_back(weight(x));
  std::vector<std::vector<Rational>> vals;
  for (const auto& nu : degrees) {
    std::vector<Rational> row;
    for (const auto& x : lattice) row.push_back(value(nu, x));
    vals.push_back(std::move(row));
  }
  std::size_t bad = 0;
  for (std::size_t a = 0; a < degrees.size(); ++a)
    for (std::size_t b = 0; b <= a; ++b) {
      Rational s = 0;
      for (std::size_t i = 0; i < lattice.size(); ++i) s += w[i] * vals[a][i] * vals[b][i];
      if (s != (a == b ? norm(degrees[a]) : Rational(0))) ++bad;
    }
  return bad;
}

std::string count_detail(std::size_t bad, std::size_t total) {
  return std::to_string(bad) + " of " + std::to_string(total) + " failed";
}

}  // namespace

Rational Sampler::rational(long lo, long hi, long max_den) {
  const long q = integer(1, max_den);
  const long p = integer(lo * q, hi * q - 1);
  return Rational(p, q);
}

Kappa Sampler::kappa(std::size_t d) {
  Kappa k;
  for (std::size_t i = 0; i <= d; ++i) k.push_back(rational(0, 3, 6) - Rational(1, 2) + Rational(1, 7));
  return k;
}

Permutation Sampler::permutation(std::size_t m) {
  std::vector<int> image(m);
  for (std::size_t i = 0; i < m; ++i) image[i] = static_cast<int>(i);
  for (std::size_t i = m; i > 1; --i) std::swap(image[i - 1], image[static_cast<std::size_t>(integer(0, static_cast<long>(i) - 1))]);
  return Permutation::from_images(image);
}

Kappa generic_kappa(std::size_t d) {
  Kappa k;
  for (std::size_t i = 0; i <= d; ++i) k.push_back(Rational(static_cast<long>(2 * i + 1), static_cast<long>(3 + i)));
  return k;
}

std::vector<Rational> generic_beta(std::size_t d) {
  std::vector<Rational> b{Rational(1, 2)};
  for (std::size_t j = 1; j <= d + 1; ++j) b.push_back(b.back() + Rational(7, 6) + Rational(static_cast<long>(j), 5));
  return b;
}

VerificationReport closed_vs_gram_suite(const std::vector<Permutation>& taus, const std::vector<Kappa>& kappas,
                                        int n_max, std::vector<ConnMatrix>* produced) {
  VerificationReport rep;
  for (const auto& k : kappas)
    for (const auto& tau : taus)
      for (int n = 0; n <= n_max; ++n) {
        const std::string tag = tau.str() + " kappa=" + kappa_str(k) + " n=" + std::to_string(n);
        auto gram = gram_connection(tau, k, n);
        auto closed = closed_connection(tau, k, n);
        if (closed.fallback) {
          rep.add("closed form exists " + tag, false, closed.note);
          continue;
        }
        const auto cmp = compare_with_gram(closed, gram);
        rep.add("closed = gram " + tag, cmp.ok(), cmp.ok() ? "" : cmp.checks.front().detail);
        if (produced) produced->push_back(std::move(gram));
      }
  return rep;
}

VerificationReport cyclic_suite(std::size_t d, const std::vector<Kappa>& kappas, int n_max,
                                std::vector<ConnMatrix>* produced) {
  VerificationReport rep;
  const auto tau = cycle_prefix(d, d + 1);
  for (const auto& k : kappas)
    for (int n = 0; n <= n_max; ++n) {
      auto g = gram_connection(tau, k, n);
      std::size_t disagree = 0, off_gram = 0, total = 0;
      for (std::size_t i = 0; i < g.order.size(); ++i)
        for (std::size_t j = 0; j < g.order.size(); ++j) {
          const QSqrt f1 = cc_cyclic(g.order[i], g.order[j], k, 1);
          const QSqrt f2 = cc_cyclic(g.order[i], g.order[j], k, 2);
          const QSqrt f3 = cc_cyclic(g.order[i], g.order[j], k, 3);
          ++total;
          if (!(f1 == f2) || !(f2 == f3)) ++disagree;
          if (!(QSqrtSum(f1) == gram_hat(g, i, j))) ++off_gram;
        }
      const std::string tag = tau.str() + " kappa=" + kappa_str(k) + " n=" + std::to_string(n);
      rep.add("three cyclic forms agree " + tag, disagree == 0, count_detail(disagree, total));
      rep.add("cyclic form = gram " + tag, off_gram == 0, count_detail(off_gram, total));
      if (produced) produced->push_back(std::move(g));
    }
  return rep;
}

VerificationReport structural_suite(const std::vector<ConnMatrix>& matrices, int random_pairs, std::uint64_t seed) {
  VerificationReport rep;
  std::size_t bad_orth = 0, bad_inv = 0;
  for (const auto& m : matrices) {
    if (!verify_orthogonality(m).ok()) ++bad_orth;
    if (!verify_inverse(m.tau, m.kappa, m.n).ok()) ++bad_inv;
  }
  rep.add("orthogonality of every matrix", bad_orth == 0, count_detail(bad_orth, matrices.size()));
  rep.add("inverse relation of every matrix", bad_inv == 0, count_detail(bad_inv, matrices.size()));
  Sampler s(seed);
  for (int p = 0; p < random_pairs; ++p) {
    const std::size_t d = static_cast<std::size_t>(s.integer(2, 3));
    const auto t1 = s.permutation(d + 1), t2 = s.permutation(d + 1);
    const Kappa k = s.kappa(d);
    const int n = static_cast<int>(s.integer(1, d == 2 ? 4 : 3));
    const auto r = verify_convolution(t1, t2, k, n);
    rep.add("convolution " + t1.str() + " " + t2.str() + " kappa=" + kappa_str(k) + " n=" + std::to_string(n),
            r.ok(), r.ok() ? "" : r.checks.front().detail);
  }
  return rep;
}

VerificationReport orthogonality_suite(const Kappa& kappa, int n) {
  VerificationReport rep;
  const std::size_t d = kappa.size() - 1;
  SimplexMoments mom(kappa);
  std::vector<MultiIndex> all = degrees_up_to(n, d);
  std::vector<SparsePoly> polys;
  for (const auto& nu : all) polys.push_back(simplex_basis(nu, kappa));
  std::size_t bad = 0, total = 0;
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = 0; b <= a; ++b) {
      ++total;
      const Rational ip = mom.inner_product(polys[a], polys[b]);
      if (ip != (a == b ? norm_A(all[a], kappa) : Rational(0))) ++bad;
    }
  rep.add("basis orthogonal with norm A, kappa=" + kappa_str(kappa), bad == 0, count_detail(bad, total));
  for (const auto& tau : all_permutations(d + 1)) {
    const auto g = gram_connection(tau, kappa, n);
    rep.add("connection matrix orthogonal " + tau.str(), verify_orthogonality(g).ok());
    rep.add("connection matrix reconstructs " + tau.str(), verify_reconstruction(g).ok());
  }
  return rep;
}

VerificationReport racah_params_suite(const std::vector<Rational>& beta, int N) {
  VerificationReport rep;
  const RacahParams p{beta, N};
  const std::size_t d = p.dim();
  const auto lattice = racah_lattice(d, N);
  const auto degs = degrees_up_to(N, d);
  const std::string tag = "d=" + std::to_string(d) + " N=" + std::to_string(N) + " beta=" + kappa_str(beta);
  const auto bad = lattice_orthogonality(
      degs, lattice, [&](const MultiIndex& nu, const MultiIndex& x) { return racah_multi(nu, x, p); },
      [&](const MultiIndex& x) { return racah_weight(x, p); }, [&](const MultiIndex& nu) { return racah_norm(nu, p); });
  rep.add("racah orthogonality " + tag, bad == 0, std::to_string(bad) + " pairs failed");
  std::size_t dual_bad = 0, second_bad = 0, total = 0;
  for (const auto& x : lattice)
    for (const auto& nu : degs) {
      ++total;
      const RacahPoint du = racah_dual({x, nu, p});
      const RacahPoint back = racah_dual(du);
      const bool same = racah_multi(nu, x, p) / racah_dual_normalizer(nu, p) ==
                        racah_multi(du.nu, du.x, du.params) / racah_dual_normalizer(du.nu, du.params);
      const bool hat = racah_weighted_normalized(nu, x, p) == racah_weighted_normalized(du.nu, du.x, du.params);
      if (!same || !hat || !(back.x == x) || !(back.nu == nu) || back.params.beta != p.beta) ++dual_bad;
      const RacahPoint c = racah_conjugate({x, nu, p});
      const RacahPoint t = racah_dual_prime({x, nu, p});
      if (racah_multi(nu, x, p) != racah_prime(c.nu, c.x, c.params) ||
          !(racah_weighted_normalized(nu, x, p) == racah_prime_weighted_normalized(t.nu, t.x, t.params)))
        ++second_bad;
    }
  rep.add("racah duality " + tag, dual_bad == 0, count_detail(dual_bad, total));
  rep.add("second racah family " + tag, second_bad == 0, count_detail(second_bad, total));
  return rep;
}

VerificationReport racah_suite(const std::vector<std::size_t>& dims, int N_max, int whipple_tuples, std::uint64_t seed) {
  VerificationReport rep;
  for (std::size_t d : dims)
    for (int N = 1; N <= N_max; ++N) rep.merge(racah_params_suite(generic_beta(d), N));

  Sampler s(seed);
  int checked = 0, bad = 0;
  while (checked < whipple_tuples) {
    const long m = s.integer(0, 5);
    const Rational X = s.rational(-3, 3, 7), Y = s.rational(-3, 3, 7), Z = s.rational(-3, 3, 7);
    const Rational U = s.rational(-3, 3, 7), V = s.rational(-3, 3, 7);
    const Rational W = Rational(1 - m) + X + Y + Z - U - V;
    const Rational V2 = Rational(1 - m) - V + Z, W2 = Rational(1 - m) - W + Z;
    try {
      const Rational lhs = pochhammer(U, m) * pochhammer(V, m) * pochhammer(W, m) *
                           hyp_terminating({{Rational(-m), X, Y, Z}, {U, V, W}, 1});
      const Rational rhs = pochhammer(V2, m) * pochhammer(W2, m) * pochhammer(U, m) *
                           hyp_terminating({{Rational(-m), U - X, U - Y, Z}, {V2, W2, U}, 1});
      if (lhs != rhs) ++bad;
      ++checked;
    } catch (const BottomPole&) {
    }
  }
  rep.add("whipple transformation on " + std::to_string(checked) + " balanced tuples", bad == 0,
          std::to_string(bad) + " failed");

  std::size_t bridge_bad = 0;
  for (int N = 1; N <= N_max; ++N) {
    const RacahParams p{generic_beta(1), N};
    const Racah1DParams q = racah_bridge_params(p);
    const Rational wratio = racah_weight({0}, p) / racah_weight_1d(0, q);
    for (int x = 0; x <= N; ++x) {
      if (racah_weight({x}, p) != wratio * racah_weight_1d(x, q)) ++bridge_bad;
      for (int n = 0; n <= N; ++n) {
        const Rational f = racah_bridge_factor(n, p);
        if (f.is_zero() || racah_multi({n}, {x}, p) != f * racah_1d(n, x, q)) ++bridge_bad;
      }
    }
  }
  rep.add("one-variable bridge", bridge_bad == 0, std::to_string(bridge_bad) + " failed");
  return rep;
}

VerificationReport sum_identity_suite(const std::vector<Kappa>& kappas, int n_max) {
  VerificationReport rep;
  for (const auto& k : kappas) {
    std::size_t bad = 0, total = 0;
    for (int n = 0; n <= n_max; ++n)
      for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) {
          ++total;
          const auto s = sum_identity(n, a, b, k);
          if (s.lhs != s.rhs) ++bad;
        }
    rep.add("summation identity kappa=" + kappa_str(k), bad == 0, count_detail(bad, total));
  }
  return rep;
}

VerificationReport hahn_params_suite(const Kappa& kappa, int N) {
  VerificationReport rep;
  const HahnContext ctx{kappa, N};
  const std::size_t d = ctx.dim();
  const std::string tag = "kappa=" + kappa_str(kappa) + " N=" + std::to_string(N);
  const auto lattice = hahn_lattice(d, N);
  const auto degs = degrees_up_to(N, d);
  std::vector<std::vector<Rational>> vals;
  for (const auto& nu : degs) {
    std::vector<Rational> row;
    for (const auto& a : lattice) row.push_back(hahn_multi(nu, a, ctx));
    vals.push_back(std::move(row));
  }
  std::size_t bad = 0;
  for (std::size_t a = 0; a < degs.size(); ++a)
    for (std::size_t b = 0; b <= a; ++b)
      if (hahn_inner(vals[a], vals[b], ctx) != (a == b ? hahn_norm_B(degs[a], ctx) : Rational(0))) ++bad;
  rep.add("hahn orthogonality with B " + tag, bad == 0, std::to_string(bad) + " pairs failed");
  std::size_t ba_bad = 0;
  for (const auto& nu : degs)
    if (!verify_B_A(nu, ctx).ok()) ++ba_bad;
  rep.add("B against A " + tag, ba_bad == 0, count_detail(ba_bad, degs.size()));
  return rep;
}

VerificationReport hahn_suite(std::size_t d_max, int N_max, int nu_max, int conn_n_max) {
  VerificationReport rep;
  for (std::size_t d = 1; d <= d_max; ++d) {
    const Kappa k = generic_kappa(d);
    for (int N = 0; N <= N_max; ++N) {
      const HahnContext ctx{k, N};
      const auto lattice = hahn_lattice(d, N);
      std::size_t bad = 0, total = 0;
      for (const auto& nu : degrees_up_to(std::min(nu_max, N), d)) {
        const auto gen = hahn_from_generating(nu, ctx);
        for (std::size_t i = 0; i < lattice.size(); ++i) {
          ++total;
          if (gen[i] != hahn_multi(nu, lattice[i], ctx)) ++bad;
        }
      }
      const std::string tag = "d=" + std::to_string(d) + " N=" + std::to_string(N);
      rep.add("product formula = generating function " + tag, bad == 0, count_detail(bad, total));
      rep.merge(hahn_params_suite(k, N));
    }
    const int top = d <= 2 ? conn_n_max : std::min(conn_n_max, 2);
    for (const auto& tau : all_permutations(d + 1))
      for (int n = 0; n <= top; ++n) {
        const auto r = verify_hahn_connection(tau, k, n, {std::max(n, 1), std::max(n, 1) + 1, std::max(n, 1) + 2});
        rep.add("hahn connection at N, N+1, N+2 " + tau.str() + " n=" + std::to_string(n), r.ok(),
                r.ok() ? "" : r.checks.front().detail);
      }
  }
  return rep;
}

VerificationReport kraw_params_suite(const std::vector<Rational>& rho, int N) {
  VerificationReport rep;
  const KrawContext ctx{rho, N};
  validate(ctx);
  const std::string tag = "rho=" + kappa_str(rho) + " N=" + std::to_string(N);
  const auto bad = lattice_orthogonality(
      degrees_up_to(N, ctx.dim()), kraw_lattice(ctx.dim(), N),
      [&](const MultiIndex& nu, const MultiIndex& x) { return krawtchouk_multi(nu, x, ctx); },
      [&](const MultiIndex& x) { return kraw_weight(x, ctx); },
      [&](const MultiIndex& nu) { return krawtchouk_norm_C(nu, ctx); });
  rep.add("krawtchouk orthogonality with C " + tag, bad == 0, std::to_string(bad) + " pairs failed");
  const auto dual = verify_kraw_duality(ctx);
  rep.add("krawtchouk duality " + tag, dual.ok(), std::to_string(dual.failures()) + " failed");
  return rep;
}

VerificationReport kraw_suite(std::size_t d_max, int N_max, int cyc_n_max, int limit_cases) {
  VerificationReport rep;
  const std::vector<std::vector<Rational>> rhos{{Rational(1, 3)},
                                                {Rational(1, 4), Rational(1, 3)},
                                                {Rational(1, 5), Rational(1, 3), Rational(1, 6)}};
  for (std::size_t d = 1; d <= d_max && d <= rhos.size(); ++d)
    for (int N = 1; N <= N_max; ++N) rep.merge(kraw_params_suite(rhos[d - 1], N));

  for (std::size_t d = 2; d <= d_max && d <= rhos.size(); ++d) {
    const auto& rho = rhos[d - 1];
    const auto tau = cycle_prefix(d, d + 1);
    const auto trho = kraw_act(tau, rho);
    for (int n = 0; n <= cyc_n_max; ++n) {
      const int N = n + 1;
      const auto g = kraw_gram_connection(tau, rho, n, N);
      std::size_t bad = 0, total = 0;
      for (std::size_t i = 0; i < g.order.size(); ++i)
        for (std::size_t j = 0; j < g.order.size(); ++j) {
          ++total;
          const QSqrt want = kraw_normalize_entry(g.entries[i][j], g.order[i], g.order[j], rho, trho, N);
          if (!(kraw_cc_cyclic(g.order[i], g.order[j], rho, 1) == want) ||
              !(kraw_cc_cyclic(g.order[i], g.order[j], rho, 2) == want))
            ++bad;
        }
      rep.add("cyclic krawtchouk = discrete gram " + tau.str() + " rho=" + kappa_str(rho) + " n=" + std::to_string(n),
              bad == 0, count_detail(bad, total));
    }
  }

  // Limit of Hahn to Krawtchouk, pointwise, then on normalized coefficients.
  int counted = 0, failed = 0;
  std::string worst;
  auto record = [&](const LimitReport& r, const std::string& what) {
    if (r.exact) return;
    ++counted;
    if (!r.ok) {
      ++failed;
      worst = what + " ratio " + std::to_string(r.ratio);
    }
  };
  const std::vector<Rational> rho2{Rational(1, 4), Rational(1, 3)};
  for (const auto& nu : degrees_up_to(2, 2))
    for (const auto& x : kraw_lattice(2, 3)) {
      if (counted >= limit_cases) break;
      record(hahn_to_kraw_limit_check(nu, x, rho2, 3), "H " + nu.str() + " at " + x.str());
    }
  const auto tau = Permutation::parse("(123)", 3);
  for (const auto& nu : enumerate_basis(2, 2))
    for (const auto& mu : enumerate_basis(2, 2)) record(hat_limit_check(tau, nu, mu, rho2, 2), "h-hat " + nu.str() + mu.str());
  rep.add("hahn to krawtchouk limit on " + std::to_string(counted) + " non-exact cases",
          failed == 0 && counted >= limit_cases, failed ? worst : "");
  return rep;
}

VerificationReport ball_params_suite(const Kappa& kappa, int n) {
  VerificationReport rep;
  const std::size_t d = kappa.size() - 1;
  const std::string tag = "kappa=" + kappa_str(kappa) + " n<=" + std::to_string(n);
  std::vector<ParityPoly> all;
  for (int m = 0; m <= n; ++m)
    for (const auto& [nu, eps] : ball_parity_classes(m, d)) all.push_back(q_ball(nu, eps, kappa));
  std::vector<SparsePoly> expanded;
  for (const auto& p : all) expanded.push_back(expand_ball(p));
  std::size_t bad = 0, total = 0;
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = 0; b <= a; ++b) {
      ++total;
      const Rational parity = ball_inner_product(all[a], all[b], kappa);
      const Rational direct = ball_inner_product(expanded[a], expanded[b], kappa);
      if (parity != direct || (a == b) == parity.is_zero()) ++bad;
    }
  rep.add("ball parity orthogonality " + tag, bad == 0, count_detail(bad, total));
  std::size_t eq_bad = 0, eq_total = 0;
  for (int m = 0; m <= n; ++m)
    for (const auto& alpha : compositions(d, m)) {
      ++eq_total;
      if (!verify_ball_equivalence(alpha, kappa).ok()) ++eq_bad;
    }
  rep.add("gegenbauer basis proportional to parity images " + tag, eq_bad == 0, count_detail(eq_bad, eq_total));
  for (const auto& tau : all_permutations(d)) {
    auto images = tau.images();
    images.push_back(static_cast<int>(d));
    const auto t = Permutation::from_images(images);
    for (int m = 0; m <= n; ++m) rep.merge(verify_ball_blocks(t, kappa, m));
  }
  return rep;
}

VerificationReport sphere_params_suite(const Kappa& kappa, int n) {
  VerificationReport rep;
  const std::size_t d = kappa.size() - 1;
  const std::string tag = "kappa=" + kappa_str(kappa) + " n<=" + std::to_string(n);
  std::vector<ParityPoly> all;
  std::vector<int> deg;
  for (int m = 0; m <= n; ++m)
    for (const auto& [nu, eps] : sphere_parity_classes(m, d)) {
      all.push_back(sphere_basis(nu, eps, kappa, m));
      deg.push_back(m);
    }
  std::vector<SparsePoly> expanded;
  for (const auto& p : all) expanded.push_back(expand_sphere(p));
  std::size_t bad = 0, total = 0;
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = 0; b <= a; ++b) {
      ++total;
      const Rational direct = sphere_inner_product(expanded[a], expanded[b], kappa);
      if ((a == b) == direct.is_zero()) ++bad;
      if (deg[a] == deg[b] && sphere_inner_product(all[a], all[b], kappa) != direct) ++bad;
    }
  rep.add("sphere orthogonality " + tag, bad == 0, count_detail(bad, total));
  return rep;
}

VerificationReport ball_sphere_suite(std::size_t d_max, int n_max) {
  VerificationReport rep;
  for (std::size_t d = 1; d <= d_max; ++d) {
    rep.merge(ball_params_suite(generic_kappa(d), n_max));
    // four homogeneous variables at d = 3; one degree less keeps the run short
    rep.merge(sphere_params_suite(generic_kappa(d), d <= 2 ? n_max : n_max - 1));
  }
  const Kappa half_kappa{Rational(-1, 2), Rational(-1, 2), 0};
  rep.merge(ball_params_suite(half_kappa, n_max));
  for (const Rational& mu : {Rational(0), Rational(1, 2), Rational(2, 3)})
    for (int n = 0; n <= n_max; ++n) {
      const auto r = verify_disk_polar(n, mu);
      rep.add("disk polar basis n=" + std::to_string(n) + " mu=" + mu.str(), r.ok(), r.ok() ? "" : r.checks.front().detail);
    }
  return rep;
}

VerificationReport harmonics_suite(int n) {
  VerificationReport rep;
  for (int m = 0; m <= n; ++m) rep.merge(harmonics_check(m));
  return rep;
}

VerificationReport dimension_suite(std::size_t d_max, int n_max) {
  VerificationReport rep;
  std::size_t bad = 0, total = 0;
  for (std::size_t d = 1; d <= d_max; ++d)
    for (int n = 0; n <= n_max; ++n) {
      const long D = static_cast<long>(d);
      const long dim = binomial(n + D - 1, n).to_long();
      total += 3;
      if (static_cast<long>(enumerate_basis(n, d).size()) != dim) ++bad;
      if (static_cast<long>(ball_parity_classes(n, d).size()) != dim) ++bad;
      if (static_cast<long>(sphere_parity_classes(n, d).size()) != harmonic_dimension(n, d)) ++bad;
    }
  rep.add("basis and parity-class counts, d<=" + std::to_string(d_max) + " n<=" + std::to_string(n_max), bad == 0,
          count_detail(bad, total));
  return rep;
}

}  // namespace orthopoly

#include <sstream>

#include "orthopoly/discrete_families.hpp"
#include "orthopoly/errors.hpp"
#include "orthopoly/hypergeom.hpp"

namespace orthopoly {

namespace {

// |rho_k|, the sum of the first k entries.
Rational head(const std::vector<Rational>& rho, std::size_t k) {
  Rational s = 0;
  for (std::size_t i = 0; i < k; ++i) s += rho[i];
  return s;
}

// (x, N - |x|) permuted by tau, first d entries kept.
MultiIndex act_point(const Permutation& tau, const MultiIndex& x, int N) {
  auto full = x.to_vector();
  full.push_back(N - x.total());
  auto moved = tau.act(full);
  moved.pop_back();
  return MultiIndex(moved);
}

std::vector<Rational> kraw_values(const MultiIndex& nu, const KrawContext& ctx) {
  std::vector<Rational> v;
  for (const auto& x : kraw_lattice(ctx.dim(), ctx.N)) v.push_back(krawtchouk_multi(nu, x, ctx));
  return v;
}

Rational kraw_sum(const std::vector<Rational>& f, const std::vector<Rational>& g, const KrawContext& ctx) {
  const auto lattice = kraw_lattice(ctx.dim(), ctx.N);
  Rational s = 0;
  for (std::size_t i = 0; i < lattice.size(); ++i)
    if (!f[i].is_zero() && !g[i].is_zero()) s += f[i] * g[i] * kraw_weight(lattice[i], ctx);
  return s;
}

Rational signed_square(const QSqrt& q) { return q.signed_square(); }

}  // namespace

void validate(const KrawContext& ctx) {
  if (ctx.rho.empty()) throw DimensionMismatch("krawtchouk: rho must be nonempty");
  for (const auto& r : ctx.rho)
    if (r <= Rational(0)) throw InvalidParameter("krawtchouk: rho_i must be positive");
  if (total(ctx.rho) >= Rational(1)) throw InvalidParameter("krawtchouk: |rho| must be below 1");
  if (ctx.N < 0) throw InvalidParameter("krawtchouk: N must be nonnegative");
}

Rational krawtchouk_1d(int n, int x, const Rational& p, int N) {
  if (n < 0 || n > N) throw InvalidParameter("krawtchouk_1d: need 0 <= n <= N");
  return hyp_terminating({{Rational(-n), Rational(-x)}, {Rational(-N)}, Rational(1) / p});
}

Rational kraw_weight(const MultiIndex& x, const KrawContext& ctx) {
  const int rest = ctx.N - x.total();
  if (rest < 0) return 0;
  Rational w = factorial(ctx.N) * pow(Rational(1) - total(ctx.rho), rest) / factorial(rest);
  for (std::size_t i = 0; i < x.size(); ++i) w *= pow(ctx.rho[i], x[i]) / factorial(x[i]);
  return w;
}

std::vector<MultiIndex> kraw_lattice(std::size_t d, int N) {
  std::vector<MultiIndex> out;
  for (const auto& a : compositions(d + 1, N)) {
    MultiIndex x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = a[i];
    out.push_back(x);
  }
  return out;
}

Rational krawtchouk_multi(const MultiIndex& nu, const MultiIndex& x, const KrawContext& ctx) {
  if (nu.size() != ctx.dim() || x.size() != ctx.dim()) throw DimensionMismatch("krawtchouk_multi: size mismatch");
  if (nu.total() > ctx.N) throw InvalidParameter("krawtchouk_multi: |nu| exceeds N");
  Rational v = Rational(1) / pochhammer(Rational(-ctx.N), nu.total());
  for (std::size_t j = 0; j < ctx.dim(); ++j) {
    if (nu[j] == 0) continue;
    const Rational c = Rational(-ctx.N + x.prefix(j) + nu.suffix(j + 2));
    const Rational z = (Rational(1) - head(ctx.rho, j)) / ctx.rho[j];
    v *= hyp_cleared_one({{Rational(-nu[j]), Rational(-x[j])}, {c}, z}, 0, nu[j]);
    if (v.is_zero()) break;
  }
  return v;
}

Rational krawtchouk_norm_C(const MultiIndex& nu, const KrawContext& ctx) {
  const std::size_t d = ctx.dim();
  Rational c = pow(Rational(-1), nu.total()) / pochhammer(Rational(-ctx.N), nu.total());
  for (std::size_t j = 0; j < d; ++j) {
    const int next = j + 1 < d ? nu[j + 1] : 0;
    c *= factorial(nu[j]) * pow(Rational(1) - head(ctx.rho, j + 1), nu[j] + next) / pow(ctx.rho[j], nu[j]);
  }
  return c;
}

Rational kraw_norm_by_sum(const MultiIndex& nu, const KrawContext& ctx) {
  const auto v = kraw_values(nu, ctx);
  return kraw_sum(v, v, ctx);
}

std::vector<Rational> kraw_act(const Permutation& tau, const std::vector<Rational>& rho) {
  auto full = rho;
  full.push_back(Rational(1) - total(rho));
  auto moved = tau.act(full);
  moved.pop_back();
  return moved;
}

KrawDual kraw_dual_map(const MultiIndex& x, const MultiIndex& nu, const std::vector<Rational>& rho) {
  const std::size_t d = rho.size();
  if (x.size() != d || nu.size() != d) throw DimensionMismatch("kraw_dual_map: size mismatch");
  KrawDual out{MultiIndex(d), MultiIndex(d), {}};
  const Rational rest = Rational(1) - total(rho);
  for (std::size_t j = 1; j <= d; ++j) {
    out.x[j - 1] = nu[d - j];
    out.nu[j - 1] = x[d - j];
    out.rho.push_back(rho[d - j] * rest /
                      ((Rational(1) - head(rho, d + 1 - j)) * (Rational(1) - head(rho, d - j))));
  }
  return out;
}

VerificationReport verify_kraw_duality(const KrawContext& ctx) {
  validate(ctx);
  VerificationReport rep;
  const auto grid = kraw_lattice(ctx.dim(), ctx.N);
  const Rational target = pow(Rational(1) - total(ctx.rho), ctx.N);
  std::size_t bad_inv = 0, bad_val = 0, bad_norm = 0;
  Rational rho_sum;
  for (const auto& x : grid)
    for (const auto& nu : grid) {
      const auto dual = kraw_dual_map(x, nu, ctx.rho);
      rho_sum = total(dual.rho);
      const auto back = kraw_dual_map(dual.x, dual.nu, dual.rho);
      if (!(back.x == x && back.nu == nu && back.rho == ctx.rho)) ++bad_inv;
      const KrawContext dctx{dual.rho, ctx.N};
      if (!(krawtchouk_multi(nu, x, ctx) == krawtchouk_multi(dual.nu, dual.x, dctx))) ++bad_val;
      if (!(krawtchouk_norm_C(nu, ctx) * kraw_weight(dual.x, dctx) == target)) ++bad_norm;
    }
  rep.add("dual map is an involution", bad_inv == 0, std::to_string(bad_inv) + " failures");
  rep.add("|rho~| = |rho|", rho_sum == total(ctx.rho), rho_sum.str());
  rep.add("K_nu(x) = K_nu~(x~)", bad_val == 0, std::to_string(bad_val) + " failures");
  rep.add("C_nu K_{rho~,N}(x~) = (1-|rho|)^N", bad_norm == 0, std::to_string(bad_norm) + " failures");
  return rep;
}

DiscreteConnection kraw_gram_connection(const Permutation& tau, const std::vector<Rational>& rho, int n, int N) {
  const KrawContext ctx{rho, N};
  validate(ctx);
  const KrawContext tctx{kraw_act(tau, rho), N};
  DiscreteConnection out{tau, n, N, enumerate_basis(n, ctx.dim()), {}};
  const auto lattice = kraw_lattice(ctx.dim(), N);
  std::vector<std::vector<Rational>> base;
  for (const auto& mu : out.order) base.push_back(kraw_values(mu, ctx));
  for (const auto& nu : out.order) {
    std::vector<Rational> row;
    for (const auto& x : lattice) row.push_back(krawtchouk_multi(nu, act_point(tau, x, N), tctx));
    std::vector<Rational> entries;
    for (std::size_t j = 0; j < out.order.size(); ++j)
      entries.push_back(kraw_sum(row, base[j], ctx) / krawtchouk_norm_C(out.order[j], ctx));
    out.entries.push_back(std::move(entries));
  }
  return out;
}

QSqrt kraw_normalize_entry(const Rational& k, const MultiIndex& nu, const MultiIndex& mu,
                           const std::vector<Rational>& rho, const std::vector<Rational>& tau_rho, int N) {
  const Rational scale = krawtchouk_norm_C(mu, {rho, N}) / krawtchouk_norm_C(nu, {tau_rho, N});
  return QSqrt::signed_root(k.sign(), k * k * scale);
}

std::vector<Rational> kraw_rho_hat(const std::vector<Rational>& rho) {
  const std::size_t d = rho.size();
  const Rational r1 = rho[0];
  std::vector<Rational> out;
  for (std::size_t j = 1; j < d; ++j)
    out.push_back(r1 * rho[j] /
                  ((Rational(1) - r1) * (Rational(1) + r1 - head(rho, j + 1)) * (Rational(1) + r1 - head(rho, j))));
  return out;
}

std::vector<Rational> kraw_rho_tilde(const std::vector<Rational>& rho) {
  const std::size_t d = rho.size();
  const Rational r1 = rho[0], rest = Rational(1) - total(rho);
  std::vector<Rational> out;
  for (std::size_t j = 1; j < d; ++j)
    out.push_back(r1 * rho[d - j] * rest /
                  ((Rational(1) - head(rho, d - j)) * (Rational(1) - head(rho, d + 1 - j)) * (Rational(1) + r1 - total(rho))));
  return out;
}

QSqrt kraw_cc_cyclic(const MultiIndex& nu, const MultiIndex& mu, const std::vector<Rational>& rho, int form) {
  const std::size_t d = rho.size();
  if (d < 2 || nu.size() != d || mu.size() != d) throw DimensionMismatch("kraw_cc_cyclic: need d >= 2");
  if (nu.total() != mu.total()) throw InvalidParameter("kraw_cc_cyclic: |nu| must equal |mu|");
  validate({rho, 0});
  const int n = nu.total();
  MultiIndex point(d - 1), degree(d - 1);
  std::vector<Rational> r;
  if (form == 1) {
    r = kraw_rho_hat(rho);
    for (std::size_t j = 0; j + 1 < d; ++j) {
      point[j] = nu[j];
      degree[j] = mu[j + 1];
    }
  } else if (form == 2) {
    r = kraw_rho_tilde(rho);
    for (std::size_t j = 0; j + 1 < d; ++j) {
      point[j] = mu[d - 1 - j];
      degree[j] = nu[d - 2 - j];
    }
  } else {
    throw InvalidParameter("kraw_cc_cyclic: form must be 1 or 2");
  }
  const KrawContext ctx{r, n};
  const Rational w = kraw_weight(point, ctx);
  const Rational K = krawtchouk_multi(degree, point, ctx);
  if (w.is_zero() || K.is_zero()) return {};
  const int sign = ((n + nu[d - 1]) % 2 ? -1 : 1) * K.sign();
  return QSqrt::signed_root(sign, w * K * K / krawtchouk_norm_C(degree, ctx));
}

namespace {

LimitReport finish(LimitReport r) {
  r.exact = true;
  r.monotone = true;
  for (std::size_t i = 0; i < r.deviation.size(); ++i) {
    if (!r.deviation[i].is_zero()) r.exact = false;
    if (i > 0 && !(r.deviation[i] < r.deviation[i - 1]) && !r.deviation[i].is_zero()) r.monotone = false;
  }
  const std::size_t m = r.deviation.size();
  if (m >= 2 && !r.deviation[m - 1].is_zero()) r.ratio = (r.deviation[m - 2] / r.deviation[m - 1]).to_double();
  r.ok = r.exact || (r.monotone && r.ratio >= 5.0 && r.ratio <= 20.0);
  return r;
}

Kappa scaled_kappa(const Rational& t, const std::vector<Rational>& rho) {
  Kappa k;
  for (const auto& r : rho) k.push_back(t * r);
  k.push_back(t * (Rational(1) - total(rho)));
  return k;
}

}  // namespace

LimitReport hahn_to_kraw_limit_check(const MultiIndex& nu, const MultiIndex& x, const std::vector<Rational>& rho,
                                     int N, const std::vector<Rational>& t_grid) {
  const KrawContext kctx{rho, N};
  validate(kctx);
  const Rational K = krawtchouk_multi(nu, x, kctx);
  // (-1)^{|nu|} prod (1-|rho_j|)^{nu_j} / rho_j^{nu_j} undoes the limit factor.
  Rational scale = pow(Rational(-1), nu.total());
  for (std::size_t j = 0; j < rho.size(); ++j) scale *= pow((Rational(1) - head(rho, j + 1)) / rho[j], nu[j]);
  auto alpha_v = x.to_vector();
  alpha_v.push_back(N - x.total());
  const MultiIndex alpha(alpha_v);
  LimitReport r;
  for (const auto& t : t_grid) {
    const Rational H = hahn_multi(nu, alpha, {scaled_kappa(t, rho), N});
    r.t.push_back(t);
    r.deviation.push_back(abs(H * scale - K));
  }
  return finish(r);
}

LimitReport hat_limit_check(const Permutation& tau, const MultiIndex& nu, const MultiIndex& mu,
                            const std::vector<Rational>& rho, int N, const std::vector<Rational>& t_grid) {
  const auto trho = kraw_act(tau, rho);
  const auto kg = kraw_gram_connection(tau, rho, nu.total(), N);
  std::size_t row = 0, col = 0;
  for (std::size_t i = 0; i < kg.order.size(); ++i) {
    if (kg.order[i] == nu) row = i;
    if (kg.order[i] == mu) col = i;
  }
  const Rational target = signed_square(kraw_normalize_entry(kg.entries[row][col], nu, mu, rho, trho, N));
  LimitReport r;
  for (const auto& t : t_grid) {
    const Kappa k = scaled_kappa(t, rho);
    const auto hg = hahn_gram_connection(tau, k, nu.total(), N);
    const QSqrt h = hahn_normalize_entry(hg.entries[row][col], nu, mu, k, act(tau, k), N);
    r.t.push_back(t);
    r.deviation.push_back(abs(signed_square(h) - target));
  }
  return finish(r);
}

}  // namespace orthopoly

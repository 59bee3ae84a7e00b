#include <sstream>

#include "orthopoly/closed_forms.hpp"
#include "orthopoly/discrete_families.hpp"
#include "orthopoly/errors.hpp"
#include "orthopoly/hypergeom.hpp"

namespace orthopoly {

namespace {

void check_sizes(const MultiIndex& nu, const HahnContext& ctx) {
  if (ctx.kappa.size() < 2 || nu.size() != ctx.dim())
    throw DimensionMismatch("hahn: nu needs d entries and kappa d+1");
  for (const auto& k : ctx.kappa)
    if (k <= Rational(-1)) throw InvalidParameter("hahn: kappa_i must exceed -1");
  if (nu.total() > ctx.N) throw InvalidParameter("hahn: |nu| exceeds N");
}

Rational lambda(const Kappa& kappa) { return total(kappa) + static_cast<long>(kappa.size()); }

MultiIndex permuted(const Permutation& tau, const MultiIndex& a) {
  return MultiIndex(tau.act(a.to_vector()));
}

}  // namespace

Rational hahn_1d(int n, int x, const Rational& a, const Rational& b, int N) {
  if (n < 0 || n > N) throw InvalidParameter("hahn_1d: need 0 <= n <= N");
  return hyp_terminating({{Rational(-n), Rational(n) + a + b + 1, Rational(-x)}, {a + 1, Rational(-N)}, 1});
}

Rational hahn_weight(const MultiIndex& alpha, const Kappa& kappa) {
  Rational w = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i) w *= pochhammer(kappa[i] + 1, alpha[i]) / factorial(alpha[i]);
  return w;
}

std::vector<MultiIndex> hahn_lattice(std::size_t d, int N) { return compositions(d + 1, N); }

Rational hahn_multi(const MultiIndex& nu, const MultiIndex& alpha, const HahnContext& ctx) {
  check_sizes(nu, ctx);
  if (alpha.size() != ctx.dim() + 1 || alpha.total() != ctx.N)
    throw DimensionMismatch("hahn_multi: lattice point must have d+1 entries summing to N");
  const std::size_t d = ctx.dim();
  const auto a = a_coefficients(nu, ctx.kappa);
  Rational v = pow(Rational(-1), nu.total()) / pochhammer(Rational(-ctx.N), nu.total());
  for (std::size_t j = 0; j < d; ++j) {
    const int nj = nu[j];
    const long top = ctx.N - alpha.prefix(j) - nu.suffix(j + 2);
    v *= pochhammer(ctx.kappa[j] + 1, nj) / pochhammer(a[j] + 1, nj);
    // (-N')_{nu_j} Q_{nu_j}(x_j; kappa_j, a_j, N') with the -N' bottom cleared
    HypSeries s{{Rational(-nj), Rational(nj) + ctx.kappa[j] + a[j] + 1, Rational(-alpha[j])},
                {ctx.kappa[j] + 1, Rational(-top)},
                1};
    v *= nj == 0 ? Rational(1) : hyp_cleared_one(s, 1, nj);
    if (v.is_zero()) break;
  }
  return v;
}

std::vector<Rational> hahn_from_generating(const MultiIndex& nu, const HahnContext& ctx) {
  check_sizes(nu, ctx);
  const SparsePoly P = simplex_basis(nu, ctx.kappa);
  const Rational p = endpoint_product(nu, ctx.kappa);
  const std::size_t d = ctx.dim();
  std::vector<Rational> out;
  // y'^a |y|^{N-|a|} contributes (N-|a|)!/prod (alpha-a)! to the coefficient of y^alpha.
  for (const auto& alpha : hahn_lattice(d, ctx.N)) {
    Rational coef = 0;
    for (const auto& [a, c] : P.terms()) {
      Rational t = c * factorial(ctx.N - a.total());
      bool fits = true;
      for (std::size_t i = 0; i <= d && fits; ++i) {
        const int ai = i < d ? a[i] : 0;
        if (alpha[i] < ai) fits = false;
        else t /= factorial(alpha[i] - ai);
      }
      if (fits) coef += t;
    }
    Rational fact = 1;
    for (int ai : alpha) fact *= factorial(ai);
    out.push_back(coef * fact / (factorial(ctx.N) * p));
  }
  return out;
}

Rational hahn_inner(const std::vector<Rational>& f, const std::vector<Rational>& g, const HahnContext& ctx) {
  const auto lattice = hahn_lattice(ctx.dim(), ctx.N);
  if (f.size() != lattice.size() || g.size() != lattice.size())
    throw DimensionMismatch("hahn_inner: value vectors must cover the lattice");
  Rational s = 0;
  for (std::size_t i = 0; i < lattice.size(); ++i)
    if (!f[i].is_zero() && !g[i].is_zero()) s += f[i] * g[i] * hahn_weight(lattice[i], ctx.kappa);
  return s * factorial(ctx.N) / pochhammer(lambda(ctx.kappa), ctx.N);
}

Rational hahn_norm_B(const MultiIndex& nu, const HahnContext& ctx) {
  check_sizes(nu, ctx);
  const auto a = a_coefficients(nu, ctx.kappa);
  const Rational lam = lambda(ctx.kappa);
  const int n = nu.total();
  Rational b = pow(Rational(-1), n) * pochhammer(lam, ctx.N + n) /
               (pochhammer(Rational(-ctx.N), n) * pochhammer(lam, ctx.N) * pochhammer(lam, 2 * n));
  for (std::size_t j = 0; j < ctx.dim(); ++j) {
    const Rational ka = ctx.kappa[j] + a[j] + 1;
    b *= pochhammer(ka, 2 * nu[j]) * pochhammer(ctx.kappa[j] + 1, nu[j]) * factorial(nu[j]) /
         (pochhammer(ka, nu[j]) * pochhammer(a[j] + 1, nu[j]));
  }
  return b;
}

namespace {
std::vector<Rational> hahn_values(const MultiIndex& nu, const HahnContext& ctx) {
  std::vector<Rational> v;
  for (const auto& alpha : hahn_lattice(ctx.dim(), ctx.N)) v.push_back(hahn_multi(nu, alpha, ctx));
  return v;
}

// H_nu(tau alpha; tau kappa, N) on the lattice of kappa.
std::vector<Rational> hahn_values_permuted(const Permutation& tau, const MultiIndex& nu, const HahnContext& ctx) {
  const HahnContext tctx{act(tau, ctx.kappa), ctx.N};
  std::vector<Rational> v;
  for (const auto& alpha : hahn_lattice(ctx.dim(), ctx.N)) v.push_back(hahn_multi(nu, permuted(tau, alpha), tctx));
  return v;
}
}  // namespace

Rational hahn_norm_by_sum(const MultiIndex& nu, const HahnContext& ctx) {
  const auto v = hahn_values(nu, ctx);
  return hahn_inner(v, v, ctx);
}

VerificationReport verify_B_A(const MultiIndex& nu, const HahnContext& ctx) {
  VerificationReport rep;
  const Rational B = hahn_norm_B(nu, ctx);
  const Rational lam = lambda(ctx.kappa);
  const int n = nu.total();
  const Rational p = endpoint_product(nu, ctx.kappa);
  const Rational via_A = pow(Rational(-1), n) * pochhammer(lam, ctx.N + n) /
                         (pochhammer(Rational(-ctx.N), n) * pochhammer(lam, ctx.N)) * norm_A(nu, ctx.kappa) / (p * p);
  const Rational by_sum = hahn_norm_by_sum(nu, ctx);
  rep.add("B from A " + nu.str(), B == via_A, B.str() + " vs " + via_A.str());
  rep.add("B by lattice sum " + nu.str(), B == by_sum, B.str() + " vs " + by_sum.str());
  return rep;
}

DiscreteConnection hahn_gram_connection(const Permutation& tau, const Kappa& kappa, int n, int N) {
  const HahnContext ctx{kappa, N};
  DiscreteConnection out{tau, n, N, enumerate_basis(n, ctx.dim()), {}};
  std::vector<std::vector<Rational>> base;
  std::vector<Rational> norms;
  for (const auto& mu : out.order) {
    base.push_back(hahn_values(mu, ctx));
    norms.push_back(hahn_norm_B(mu, ctx));
  }
  for (const auto& nu : out.order) {
    const auto row = hahn_values_permuted(tau, nu, ctx);
    std::vector<Rational> entries;
    for (std::size_t j = 0; j < out.order.size(); ++j) entries.push_back(hahn_inner(row, base[j], ctx) / norms[j]);
    out.entries.push_back(std::move(entries));
  }
  return out;
}

Rational hahn_connection(const Permutation& tau, const MultiIndex& nu, const MultiIndex& mu, const Kappa& kappa) {
  const Kappa tk = act(tau, kappa);
  const Rational c = has_closed_form(tau) ? to_raw(closed_entry(tau, nu, mu, kappa), nu, mu, kappa, tk)
                                          : gram_connection(tau, kappa, nu.total()).at(nu, mu);
  return endpoint_product(mu, kappa) / endpoint_product(nu, tk) * c;
}

std::vector<std::vector<Rational>> hahn_connection(const Permutation& tau, const Kappa& kappa, int n) {
  const ConnMatrix c = to_conn_matrix(closed_connection(tau, kappa, n));
  const Kappa tk = act(tau, kappa);
  auto h = c.entries;
  for (std::size_t i = 0; i < c.order.size(); ++i)
    for (std::size_t j = 0; j < c.order.size(); ++j)
      h[i][j] *= endpoint_product(c.order[j], kappa) / endpoint_product(c.order[i], tk);
  return h;
}

QSqrt hahn_normalize_entry(const Rational& h, const MultiIndex& nu, const MultiIndex& mu, const Kappa& kappa,
                           const Kappa& tau_kappa, int N) {
  const Rational scale = hahn_norm_B(mu, {kappa, N}) / hahn_norm_B(nu, {tau_kappa, N});
  return QSqrt::signed_root(h.sign(), h * h * scale);
}

VerificationReport verify_hahn_connection(const Permutation& tau, const Kappa& kappa, int n,
                                          const std::vector<int>& sizes) {
  VerificationReport rep;
  const auto h = hahn_connection(tau, kappa, n);
  const ConnMatrix c = gram_connection(tau, kappa, n);
  const Kappa tk = act(tau, kappa);
  for (int N : sizes) {
    const auto g = hahn_gram_connection(tau, kappa, n, N);
    std::size_t bad = 0, bad_hat = 0;
    for (std::size_t i = 0; i < g.order.size(); ++i)
      for (std::size_t j = 0; j < g.order.size(); ++j) {
        if (!(g.entries[i][j] == h[i][j])) ++bad;
        const QSqrt hh = hahn_normalize_entry(g.entries[i][j], g.order[i], g.order[j], kappa, tk, N);
        if (!(hh == normalize_entry(c.entries[i][j], g.order[i], g.order[j], kappa, tk))) ++bad_hat;
      }
    std::ostringstream tag;
    tag << tau.str() << " n=" << n << " N=" << N;
    rep.add("h = (p_mu/p_nu) c " + tag.str(), bad == 0, std::to_string(bad) + " entries differ");
    rep.add("h-hat = c-hat " + tag.str(), bad_hat == 0, std::to_string(bad_hat) + " entries differ");
  }
  return rep;
}

}  // namespace orthopoly

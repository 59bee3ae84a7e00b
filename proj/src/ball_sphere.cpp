#include "orthopoly/ball_sphere.hpp"

#include <map>

#include "orthopoly/closed_forms.hpp"
#include "orthopoly/errors.hpp"

namespace orthopoly {

namespace {

const Rational kHalf(1, 2);

SparsePoly monomial(std::size_t nvars, const MultiIndex& eps) {
  MultiIndex e(nvars);
  for (std::size_t i = 0; i < eps.size() && i < nvars; ++i) e[i] = eps[i];
  return SparsePoly::monomial(e, 1);
}

// u_i -> y_i^2 in nvars >= core variables.
SparsePoly squared(const SparsePoly& core, std::size_t nvars) {
  std::vector<SparsePoly> images;
  for (std::size_t i = 0; i < core.nvars(); ++i) {
    MultiIndex e(nvars);
    e[i] = 2;
    images.push_back(SparsePoly::monomial(e, 1));
  }
  return core.compose(images);
}

MultiIndex halves(const MultiIndex& a, bool* even) {
  MultiIndex h(a.size());
  *even = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] % 2) *even = false;
    h[i] = a[i] / 2;
  }
  return h;
}

MultiIndex parity_of(const MultiIndex& a) {
  MultiIndex e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] % 2;
  return e;
}

Kappa shifted(const Kappa& kappa, const MultiIndex& eps) {
  Kappa k = kappa;
  for (std::size_t i = 0; i < eps.size(); ++i) k[i] += eps[i];
  return k;
}

// All eps in {0,1}^m, in increasing binary order.
std::vector<MultiIndex> parity_vectors(std::size_t m) {
  std::vector<MultiIndex> out;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    MultiIndex e(m);
    for (std::size_t i = 0; i < m; ++i) e[i] = (mask >> i) & 1u;
    out.push_back(e);
  }
  return out;
}

void check_ball(const MultiIndex& index, const Kappa& kappa) {
  if (kappa.size() != index.size() + 1) throw DimensionMismatch("ball: kappa needs d+1 entries");
  for (const auto& k : kappa)
    if (k <= Rational(-1)) throw InvalidParameter("ball: kappa_i must exceed -1");
}

// tau on d+1 symbols fixing the last one.
void check_ball_tau(const Permutation& tau, std::size_t d) {
  if (tau.size() != d + 1 || tau(static_cast<int>(d)) != static_cast<int>(d))
    throw InvalidParameter("ball: tau must act on the first d symbols only");
}

SparsePoly permute_ball(const SparsePoly& p, const Permutation& tau) {
  std::vector<SparsePoly> vars;
  for (std::size_t i = 0; i < p.nvars(); ++i) vars.push_back(SparsePoly::variable(p.nvars(), i));
  vars.push_back(SparsePoly::constant(p.nvars(), 0));
  auto images = tau.act(vars);
  images.pop_back();
  return p.compose(images);
}

// c-hat^tau_{nu,mu}(k), closed form when one exists.
QSqrt simplex_hat(const Permutation& tau, const MultiIndex& nu, const MultiIndex& mu, const Kappa& k) {
  const Kappa tk = act(tau, k);
  if (has_closed_form(tau)) {
    const auto v = to_normalized(closed_entry(tau, nu, mu, k), nu, mu, k, tk).as_qsqrt();
    if (v) return *v;
  }
  return normalize_entry(gram_connection(tau, k, nu.total()).at(nu, mu), nu, mu, k, tk);
}

// tau eps' == eps, both of length tau.size() after padding with zeros.
bool moves_to(const Permutation& tau, const MultiIndex& eps_col, const MultiIndex& eps) {
  auto moved = eps_col.to_vector();
  moved.resize(tau.size(), 0);
  moved = tau.act(moved);
  moved.resize(eps.size());
  return MultiIndex(moved) == eps;
}

// sum_k f_k (2s - 1)^k in ascending powers of s.
UniPoly shift_to_unit(const UniPoly& f) {
  UniPoly out(f.size());
  for (std::size_t k = 0; k < f.size(); ++k)
    for (std::size_t i = 0; i <= k; ++i) {
      const long sign = (k - i) % 2 ? -1 : 1;
      out[i] += f[k] * binomial(static_cast<long>(k), static_cast<long>(i)) * pow(Rational(2), static_cast<long>(i)) *
                Rational(sign);
    }
  return out;
}

}  // namespace

GegenbauerGen gegenbauer_gen(int n, const Rational& lambda, const Rational& mu) {
  if (n < 0) throw InvalidParameter("gegenbauer_gen: n must be nonnegative");
  GegenbauerGen g;
  g.parity = n % 2;
  g.m = n / 2;
  g.scale = pochhammer(lambda + mu, g.m + g.parity) / pochhammer(mu + kHalf, g.m + g.parity);
  g.alpha = lambda - kHalf;
  g.beta = mu - kHalf + g.parity;
  g.core = shift_to_unit(jacobi_1d(g.m, g.alpha, g.beta));
  for (auto& c : g.core) c *= g.scale;
  return g;
}

UniPoly gegenbauer_poly(int n, const Rational& lambda, const Rational& mu) {
  const auto g = gegenbauer_gen(n, lambda, mu);
  UniPoly out(static_cast<std::size_t>(n) + 1);
  for (std::size_t k = 0; k < g.core.size(); ++k) out[2 * k + static_cast<std::size_t>(g.parity)] = g.core[k];
  return out;
}

Rational ball_moment(const MultiIndex& beta, const Kappa& kappa) {
  bool even = false;
  const MultiIndex half = halves(beta, &even);
  return even ? simplex_moment(half, kappa) : Rational(0);
}

Rational ball_inner_product(const ParityPoly& p, const ParityPoly& q, const Kappa& kappa) {
  if (p.eps.size() != q.eps.size()) throw DimensionMismatch("ball_inner_product: parity sizes differ");
  if (!(p.eps == q.eps)) return 0;
  SimplexMoments m(kappa);
  return m.inner_product(monomial(p.core.nvars(), p.eps) * p.core, q.core);
}

Rational ball_inner_product(const SparsePoly& p, const SparsePoly& q, const Kappa& kappa) {
  SimplexMoments m(kappa);
  Rational s = 0;
  const SparsePoly pq = p * q;
  for (const auto& [e, c] : pq.terms()) {
    bool even = false;
    const MultiIndex half = halves(e, &even);
    if (even) s += c * m.moment(half);
  }
  return s;
}

SparsePoly expand_ball(const ParityPoly& p) {
  const std::size_t d = p.core.nvars();
  return monomial(d, p.eps) * squared(p.core, d);
}

ParityPoly q_ball(const MultiIndex& nu, const MultiIndex& eps, const Kappa& kappa) {
  check_ball(nu, kappa);
  if (eps.size() != nu.size()) throw DimensionMismatch("q_ball: eps needs d entries");
  return {eps, simplex_basis(nu, shifted(kappa, eps)), 2 * nu.total() + eps.total()};
}

ParityPoly q_ball(const MultiIndex& nu, const MultiIndex& eps, const Kappa& kappa, int n) {
  if ((n - eps.total()) % 2 != 0 || n < eps.total()) throw ParityMismatch("q_ball: n - |eps| must be even");
  if (2 * nu.total() != n - eps.total()) throw ParityMismatch("q_ball: |nu| must be (n - |eps|)/2");
  return q_ball(nu, eps, kappa);
}

ParityPoly ball_basis(const MultiIndex& alpha, const Kappa& kappa) {
  check_ball(alpha, kappa);
  const std::size_t d = alpha.size();
  SparsePoly core = SparsePoly::constant(d, 1);
  SparsePoly rest = SparsePoly::constant(d, 1);  // 1 - |u_{j-1}|
  for (std::size_t j = 0; j < d; ++j) {
    // lambda_j = |alpha^{j+1}| + |kappa^{j+1}| + d - j, 1-based j
    const Rational lambda = Rational(alpha.suffix(j + 2)) + suffix_sum(kappa, j + 2) + Rational(static_cast<long>(d - j - 1));
    const auto g = gegenbauer_gen(alpha[j], lambda + kHalf, kappa[j] + kHalf);
    const SparsePoly uj = SparsePoly::variable(d, j);
    core = core * substitute_homogeneous(jacobi_1d(g.m, g.alpha, g.beta), uj * Rational(2) - rest, rest, g.m) * g.scale;
    rest -= uj;
  }
  return {parity_of(alpha), core, alpha.total()};
}

std::vector<std::pair<MultiIndex, MultiIndex>> ball_parity_classes(int n, std::size_t d) {
  std::vector<std::pair<MultiIndex, MultiIndex>> out;
  for (const auto& eps : parity_vectors(d)) {
    const int rest = n - eps.total();
    if (rest < 0 || rest % 2) continue;
    for (const auto& nu : enumerate_basis(rest / 2, d)) out.emplace_back(nu, eps);
  }
  return out;
}

VerificationReport verify_ball_equivalence(const MultiIndex& alpha, const Kappa& kappa, Rational* scalar) {
  VerificationReport rep;
  bool even = false;
  const MultiIndex nu = halves(alpha, &even);
  const SparsePoly lhs = expand_ball(ball_basis(alpha, kappa));
  const SparsePoly rhs = expand_ball(q_ball(nu, parity_of(alpha), kappa));
  const auto r = lhs.ratio_to(rhs);
  const bool ok = r.has_value() && !r->is_zero();
  if (ok && scalar) *scalar = *r;
  rep.add("ball basis " + alpha.str() + " is a multiple of the parity image", ok, ok ? r->str() : "not proportional");
  return rep;
}

BallConnection ball_gram_connection(const Permutation& tau, const Kappa& kappa, int n) {
  const std::size_t d = kappa.size() - 1;
  check_ball_tau(tau, d);
  const Kappa tk = act(tau, kappa);
  BallConnection out{tau, n, compositions(d, n), {}, {}};
  std::vector<SparsePoly> left, right;
  std::vector<Rational> left_norm, right_norm;
  for (const auto& alpha : out.order) {
    left.push_back(permute_ball(expand_ball(ball_basis(alpha, tk)), tau));
    right.push_back(expand_ball(ball_basis(alpha, kappa)));
    left_norm.push_back(ball_inner_product(left.back(), left.back(), kappa));
    right_norm.push_back(ball_inner_product(right.back(), right.back(), kappa));
  }
  for (std::size_t i = 0; i < out.order.size(); ++i) {
    std::vector<Rational> row;
    std::vector<QSqrt> hat;
    for (std::size_t j = 0; j < out.order.size(); ++j) {
      const Rational b = ball_inner_product(left[i], right[j], kappa) / right_norm[j];
      row.push_back(b);
      hat.push_back(QSqrt::signed_root(b.sign(), b * b * right_norm[j] / left_norm[i]));
    }
    out.entries.push_back(std::move(row));
    out.normalized.push_back(std::move(hat));
  }
  return out;
}

QSqrt ball_connection(const Permutation& tau, const MultiIndex& alpha, const MultiIndex& beta, const Kappa& kappa) {
  check_ball(alpha, kappa);
  const std::size_t d = alpha.size();
  check_ball_tau(tau, d);
  if (beta.size() != d || alpha.total() != beta.total()) throw DimensionMismatch("ball_connection: index mismatch");
  const MultiIndex eps = parity_of(alpha), eps_col = parity_of(beta);
  if (!moves_to(tau, eps_col, eps)) return {};
  bool even = false;
  const MultiIndex nu = halves(alpha, &even), mu = halves(beta, &even);
  return simplex_hat(tau, nu, mu, shifted(kappa, eps_col));
}

VerificationReport verify_ball_blocks(const Permutation& tau, const Kappa& kappa, int n) {
  VerificationReport rep;
  const auto g = ball_gram_connection(tau, kappa, n);
  std::size_t cross = 0, mismatch = 0;
  for (std::size_t i = 0; i < g.order.size(); ++i)
    for (std::size_t j = 0; j < g.order.size(); ++j) {
      const QSqrt want = ball_connection(tau, g.order[i], g.order[j], kappa);
      if (want.is_zero() && !g.entries[i][j].is_zero()) ++cross;
      if (!(want == g.normalized[i][j])) ++mismatch;
    }
  const std::string tag = tau.str() + " n=" + std::to_string(n);
  rep.add("parity blocks " + tag, cross == 0, std::to_string(cross) + " nonzero entries across classes");
  rep.add("b-hat = c-hat(kappa + eps) " + tag, mismatch == 0, std::to_string(mismatch) + " entries differ");
  return rep;
}

SparsePoly disk_polar_basis(int j, int i, int n, const Rational& mu) {
  const int m = n - 2 * j;
  if (j < 0 || m < 0 || (i == 2 && m == 0) || (i != 1 && i != 2))
    throw InvalidParameter("disk_polar_basis: need 0 <= j <= n/2, and j < n/2 for the sin branch");
  // Re and Im of (x1 + i x2)^m
  SparsePoly re = SparsePoly::constant(2, 1), im = SparsePoly::constant(2, 0);
  const SparsePoly x1 = SparsePoly::variable(2, 0), x2 = SparsePoly::variable(2, 1);
  for (int k = 0; k < m; ++k) {
    SparsePoly next_re = re * x1 - im * x2;
    im = re * x2 + im * x1;
    re = std::move(next_re);
  }
  const SparsePoly r2 = x1 * x1 + x2 * x2;
  const SparsePoly radial = substitute(jacobi_1d(j, mu, Rational(m)), r2 * Rational(2) - SparsePoly::constant(2, 1));
  return radial * (i == 1 ? re : im);
}

VerificationReport verify_disk_polar(int n, const Rational& mu) {
  VerificationReport rep;
  const auto tau = Permutation::parse("(13)", 3);
  const Kappa weight{-kHalf, -kHalf, mu};
  std::vector<SparsePoly> polar;
  for (int j = 0; 2 * j <= n; ++j)
    for (int i = 1; i <= 2; ++i) {
      const int m = n - 2 * j;
      if (i == 2 && m == 0) continue;
      const SparsePoly q = disk_polar_basis(j, i, n, mu);
      polar.push_back(q);
      // cos m theta is even in x2, sin m theta odd in x2; the x1 parity is that of m (cos) or m-1 (sin)
      const MultiIndex eps = i == 1 ? MultiIndex{m % 2, 0} : MultiIndex{(m + 1) % 2, 1};
      const MultiIndex nu{j, (m - eps.total()) / 2};
      const Kappa k = shifted(weight, eps);
      const SparsePoly core = permute_vars(simplex_basis(nu, act(tau, k)), tau);
      const SparsePoly image = expand_ball({eps, core, n});
      const auto r = q.ratio_to(image);
      const bool ok = r.has_value() && !r->is_zero();
      rep.add("polar (" + std::to_string(j) + "," + std::to_string(i) + ") n=" + std::to_string(n) + " eps " + eps.str(),
              ok, ok ? r->str() : "not proportional");
    }
  rep.add("polar count n=" + std::to_string(n), polar.size() == static_cast<std::size_t>(n + 1),
          std::to_string(polar.size()));
  std::size_t bad = 0;
  for (std::size_t a = 0; a < polar.size(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (!ball_inner_product(polar[a], polar[b], weight).is_zero()) ++bad;
  rep.add("polar orthogonality n=" + std::to_string(n), bad == 0, std::to_string(bad) + " nonorthogonal pairs");
  return rep;
}

Rational sphere_moment(const MultiIndex& beta, const Kappa& kappa) {
  if (beta.size() != kappa.size()) throw DimensionMismatch("sphere_moment: beta needs d+1 entries");
  bool even = false;
  const MultiIndex g = halves(beta, &even);
  if (!even) return 0;
  Rational num = 1;
  for (std::size_t i = 0; i < g.size(); ++i) num *= pochhammer(kappa[i] + 1, g[i]);
  return num / pochhammer(total(kappa) + Rational(static_cast<long>(kappa.size())), g.total());
}

ParityPoly sphere_basis(const MultiIndex& nu, const MultiIndex& eps, const Kappa& kappa, int n) {
  if (eps.size() != nu.size() + 1 || kappa.size() != nu.size() + 1)
    throw DimensionMismatch("sphere_basis: eps and kappa need d+1 entries");
  if (n < eps.total() || (n - eps.total()) % 2 || 2 * nu.total() != n - eps.total())
    throw ParityMismatch("sphere_basis: |nu| must be (n - |eps|)/2");
  return {eps, simplex_basis(nu, shifted(kappa, eps)), n};
}

SparsePoly expand_sphere(const ParityPoly& p) {
  const std::size_t d = p.core.nvars();
  const std::size_t D = d + 1;
  const int m = (p.degree - p.eps.total()) / 2;
  SparsePoly r2(D);
  for (std::size_t i = 0; i < D; ++i) {
    MultiIndex e(D);
    e[i] = 2;
    r2.add_term(e, 1);
  }
  std::map<int, SparsePoly> powers;
  SparsePoly out(D);
  for (const auto& [a, c] : p.core.terms()) {
    MultiIndex e(D);
    for (std::size_t i = 0; i < d; ++i) e[i] = 2 * a[i];
    const int k = m - a.total();
    auto it = powers.find(k);
    if (it == powers.end()) it = powers.emplace(k, pow(r2, k)).first;
    out += SparsePoly::monomial(e, c) * it->second;
  }
  return monomial(D, p.eps) * out;
}

Rational sphere_inner_product(const ParityPoly& p, const ParityPoly& q, const Kappa& kappa) {
  if (p.eps.size() != q.eps.size()) throw DimensionMismatch("sphere_inner_product: parity sizes differ");
  if (!(p.eps == q.eps)) return 0;
  const std::size_t d = p.core.nvars();
  // y^{2 eps} = u^{eps'} (1 - |u|)^{eps_{d+1}} on the sphere
  SparsePoly factor = monomial(d, p.eps);
  if (p.eps[d]) factor = factor * SparsePoly::linear(1, std::vector<Rational>(d, Rational(-1)));
  SimplexMoments m(kappa);
  return m.inner_product(factor * p.core, q.core);
}

Rational sphere_inner_product(const SparsePoly& p, const SparsePoly& q, const Kappa& kappa) {
  Rational s = 0;
  const SparsePoly pq = p * q;
  for (const auto& [e, c] : pq.terms()) s += c * sphere_moment(e, kappa);
  return s;
}

std::vector<std::pair<MultiIndex, MultiIndex>> sphere_parity_classes(int n, std::size_t d) {
  std::vector<std::pair<MultiIndex, MultiIndex>> out;
  for (const auto& eps : parity_vectors(d + 1)) {
    const int rest = n - eps.total();
    if (rest < 0 || rest % 2) continue;
    for (const auto& nu : enumerate_basis(rest / 2, d)) out.emplace_back(nu, eps);
  }
  return out;
}

long harmonic_dimension(int n, std::size_t d) {
  if (n < 0) return 0;
  const long D = static_cast<long>(d);
  const Rational all = binomial(n + D, D);
  const Rational lower = n >= 2 ? binomial(n - 2 + D, D) : Rational(0);
  return (all - lower).to_long();
}

SphereConnection sphere_gram_connection(const Permutation& tau, const Kappa& kappa, int n) {
  const std::size_t d = kappa.size() - 1;
  if (tau.size() != d + 1) throw DimensionMismatch("sphere_gram_connection: tau must act on d+1 symbols");
  const Kappa tk = act(tau, kappa);
  SphereConnection out{tau, n, sphere_parity_classes(n, d), {}, {}};
  std::vector<SparsePoly> vars;
  for (std::size_t i = 0; i <= d; ++i) vars.push_back(SparsePoly::variable(d + 1, i));
  const auto images = tau.act(vars);
  std::vector<SparsePoly> left, right;
  std::vector<Rational> left_norm, right_norm;
  for (const auto& [nu, eps] : out.order) {
    left.push_back(expand_sphere(sphere_basis(nu, eps, tk, n)).compose(images));
    right.push_back(expand_sphere(sphere_basis(nu, eps, kappa, n)));
    left_norm.push_back(sphere_inner_product(left.back(), left.back(), kappa));
    right_norm.push_back(sphere_inner_product(right.back(), right.back(), kappa));
  }
  for (std::size_t i = 0; i < out.order.size(); ++i) {
    std::vector<Rational> row;
    std::vector<QSqrt> hat;
    for (std::size_t j = 0; j < out.order.size(); ++j) {
      const Rational b = sphere_inner_product(left[i], right[j], kappa) / right_norm[j];
      row.push_back(b);
      hat.push_back(QSqrt::signed_root(b.sign(), b * b * right_norm[j] / left_norm[i]));
    }
    out.entries.push_back(std::move(row));
    out.normalized.push_back(std::move(hat));
  }
  return out;
}

QSqrt sphere_connection(const Permutation& tau, const std::pair<MultiIndex, MultiIndex>& row,
                        const std::pair<MultiIndex, MultiIndex>& col, const Kappa& kappa) {
  const auto& [nu, eps] = row;
  const auto& [mu, eps_col] = col;
  if (kappa.size() != nu.size() + 1 || eps.size() != kappa.size() || eps_col.size() != kappa.size() ||
      tau.size() != kappa.size())
    throw DimensionMismatch("sphere_connection: sizes must be d, d+1");
  if (2 * nu.total() + eps.total() != 2 * mu.total() + eps_col.total())
    throw DimensionMismatch("sphere_connection: degrees differ");
  if (!moves_to(tau, eps_col, eps) || nu.total() != mu.total()) return {};
  return simplex_hat(tau, nu, mu, shifted(kappa, eps_col));
}

VerificationReport verify_sphere_blocks(const Permutation& tau, const Kappa& kappa, int n) {
  VerificationReport rep;
  const auto g = sphere_gram_connection(tau, kappa, n);
  std::size_t cross = 0, mismatch = 0;
  for (std::size_t i = 0; i < g.order.size(); ++i)
    for (std::size_t j = 0; j < g.order.size(); ++j) {
      const QSqrt want = sphere_connection(tau, g.order[i], g.order[j], kappa);
      if (want.is_zero() && !g.entries[i][j].is_zero()) ++cross;
      if (!(want == g.normalized[i][j])) ++mismatch;
    }
  const std::string tag = tau.str() + " n=" + std::to_string(n);
  rep.add("sphere parity blocks " + tag, cross == 0, std::to_string(cross) + " nonzero entries across classes");
  rep.add("sphere c-hat(kappa + eps) " + tag, mismatch == 0, std::to_string(mismatch) + " entries differ");
  return rep;
}

VerificationReport harmonics_check(int n) {
  VerificationReport rep;
  const Kappa kappa{-kHalf, -kHalf, -kHalf};
  const std::vector<MultiIndex> even_classes{{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  const std::vector<MultiIndex> odd_classes{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
  for (int degree : {2 * n, 2 * n + 1}) {
    const auto& classes = degree % 2 ? odd_classes : even_classes;
    std::vector<SparsePoly> basis;
    std::size_t not_harmonic = 0, not_homogeneous = 0;
    for (const auto& eps : classes) {
      const int m = (degree - eps.total()) / 2;
      if (m < 0) continue;
      // P_{m-j,j}^{kappa+eps}(x1^2, x2^2) y^eps, homogenized
      for (int j = 0; j <= m; ++j) {
        const SparsePoly y = expand_sphere({eps, simplex_basis({m - j, j}, shifted(kappa, eps)), degree});
        if (!y.laplacian().is_zero()) ++not_harmonic;
        for (const auto& [e, c] : y.terms())
          if (e.total() != degree) {
            ++not_homogeneous;
            break;
          }
        basis.push_back(y);
      }
    }
    std::size_t bad = 0;
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = 0; b < a; ++b)
        if (!sphere_inner_product(basis[a], basis[b], kappa).is_zero()) ++bad;
    const std::string tag = " degree " + std::to_string(degree);
    rep.add("count" + tag, basis.size() == static_cast<std::size_t>(2 * degree + 1), std::to_string(basis.size()));
    rep.add("homogeneous" + tag, not_homogeneous == 0, std::to_string(not_homogeneous) + " elements");
    rep.add("harmonic" + tag, not_harmonic == 0, std::to_string(not_harmonic) + " elements");
    rep.add("orthogonal" + tag, bad == 0, std::to_string(bad) + " pairs");
  }
  return rep;
}

}  // namespace orthopoly

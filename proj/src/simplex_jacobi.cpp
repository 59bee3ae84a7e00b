#include "orthopoly/simplex_jacobi.hpp"

#include "orthopoly/errors.hpp"

namespace orthopoly {

namespace {
void check_dims(const MultiIndex& nu, const Kappa& kappa) {
  if (kappa.size() != nu.size() + 1)
    throw DimensionMismatch("kappa needs d+1 entries for a d-variable index");
}
}  // namespace

Rational total(const std::vector<Rational>& v) {
  Rational s = 0;
  for (const auto& x : v) s += x;
  return s;
}

Rational suffix_sum(const std::vector<Rational>& v, std::size_t k) {
  Rational s = 0;
  for (std::size_t i = k == 0 ? 0 : k - 1; i < v.size(); ++i) s += v[i];
  return s;
}

UniPoly jacobi_1d(int n, const Rational& alpha, const Rational& beta) {
  // (alpha+1)_n/n! 2F1(-n, n+alpha+beta+1; alpha+1; (1-t)/2), with (alpha+1)_n
  // absorbed into each term so no bottom parameter is ever divided out.
  UniPoly result(static_cast<std::size_t>(n) + 1, Rational(0));
  const Rational top = Rational(n) + alpha + beta + 1;
  UniPoly half_power{Rational(1)};  // ((1-t)/2)^k
  for (int k = 0; k <= n; ++k) {
    Rational c = pochhammer(Rational(-n), k) * pochhammer(top, k) *
                 pochhammer(alpha + 1 + k, n - k) / (factorial(k) * factorial(n));
    for (std::size_t i = 0; i < half_power.size(); ++i) result[i] += c * half_power[i];
    UniPoly next(half_power.size() + 1, Rational(0));
    for (std::size_t i = 0; i < half_power.size(); ++i) {
      next[i] += half_power[i] / 2;
      next[i + 1] -= half_power[i] / 2;
    }
    half_power = std::move(next);
  }
  return result;
}

std::vector<Rational> a_coefficients(const MultiIndex& nu, const Kappa& kappa) {
  check_dims(nu, kappa);
  const std::size_t d = nu.size();
  std::vector<Rational> a;
  for (std::size_t j = 1; j <= d; ++j)
    a.push_back(suffix_sum(kappa, j + 1) + Rational(2 * nu.suffix(j + 1)) +
                Rational(static_cast<long>(d - j)));
  return a;
}

SparsePoly simplex_basis(const MultiIndex& nu, const Kappa& kappa) {
  check_dims(nu, kappa);
  const std::size_t d = nu.size();
  const auto a = a_coefficients(nu, kappa);
  SparsePoly result = SparsePoly::constant(d, 1);
  SparsePoly rest = SparsePoly::constant(d, 1);  // 1 - |x_{j-1}|
  for (std::size_t j = 0; j < d; ++j) {
    SparsePoly xj = SparsePoly::variable(d, j);
    UniPoly f = jacobi_1d(nu[j], a[j], kappa[j]);
    // t = 2 x_j / rest - 1, homogenized by rest^{nu_j}
    SparsePoly lin = xj * Rational(2) - rest;
    result = result * substitute_homogeneous(f, lin, rest, nu[j]);
    rest -= xj;
  }
  return result;
}

Rational norm_A(const MultiIndex& nu, const Kappa& kappa) {
  check_dims(nu, kappa);
  const std::size_t d = nu.size();
  const auto a = a_coefficients(nu, kappa);
  Rational r = Rational(1) / pochhammer(total(kappa) + Rational(static_cast<long>(d + 1)), 2 * nu.total());
  for (std::size_t j = 0; j < d; ++j) {
    const Rational s = kappa[j] + a[j] + 1;
    r *= pochhammer(s, 2 * nu[j]) * pochhammer(kappa[j] + 1, nu[j]) * pochhammer(a[j] + 1, nu[j]) /
         (pochhammer(s, nu[j]) * factorial(nu[j]));
  }
  return r;
}

Rational endpoint_product(const MultiIndex& nu, const Kappa& kappa) {
  const auto a = a_coefficients(nu, kappa);
  Rational r = 1;
  for (std::size_t j = 0; j < nu.size(); ++j) r *= pochhammer(a[j] + 1, nu[j]) / factorial(nu[j]);
  return r;
}

std::vector<MultiIndex> enumerate_basis(int n, std::size_t d) { return compositions(d, n); }

SparsePoly permute_vars(const SparsePoly& p, const Permutation& tau) {
  const std::size_t d = p.nvars();
  if (tau.size() != d + 1) throw DimensionMismatch("permutation must act on d+1 symbols");
  std::vector<SparsePoly> homog;
  for (std::size_t i = 0; i < d; ++i) homog.push_back(SparsePoly::variable(d, i));
  std::vector<Rational> minus(d, Rational(-1));
  homog.push_back(SparsePoly::linear(1, minus));
  auto images = tau.act(homog);
  images.pop_back();
  return p.compose(images);
}

Rational simplex_moment(const MultiIndex& alpha, const Kappa& kappa) {
  check_dims(alpha, kappa);
  const std::size_t d = alpha.size();
  Rational num = 1;
  for (std::size_t i = 0; i < d; ++i) num *= pochhammer(kappa[i] + 1, alpha[i]);
  Rational den = pochhammer(total(kappa) + Rational(static_cast<long>(d + 1)), alpha.total());
  if (den.is_zero()) throw InvalidParameter("simplex moment undefined at this kappa");
  return num / den;
}

SimplexMoments::SimplexMoments(Kappa kappa) : kappa_(std::move(kappa)) {
  if (kappa_.empty()) throw DimensionMismatch("kappa must not be empty");
}

const Rational& SimplexMoments::moment(const MultiIndex& alpha) {
  auto it = cache_.find(alpha);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(alpha, simplex_moment(alpha, kappa_)).first->second;
}

Rational SimplexMoments::inner_product(const SparsePoly& f, const SparsePoly& g) {
  if (f.nvars() != dim() || g.nvars() != dim())
    throw DimensionMismatch("inner product: polynomial dimension differs from kappa");
  Rational s = 0;
  for (const auto& [ea, ca] : f.terms())
    for (const auto& [eb, cb] : g.terms()) s += ca * cb * moment(ea + eb);
  return s;
}

Rational inner_product_simplex(const SparsePoly& f, const SparsePoly& g, const Kappa& kappa) {
  SimplexMoments m(kappa);
  return m.inner_product(f, g);
}

}  // namespace orthopoly

#include "orthopoly/connection.hpp"

#include <algorithm>

#include "orthopoly/errors.hpp"

namespace orthopoly {

Kappa act(const Permutation& tau, const Kappa& kappa) {
  if (tau.size() != kappa.size()) throw DimensionMismatch("permutation and kappa sizes differ");
  return tau.act(kappa);
}

std::size_t ConnMatrix::index_of(const MultiIndex& nu) const {
  auto it = std::find(order.begin(), order.end(), nu);
  if (it == order.end()) throw std::out_of_range("index " + nu.str() + " not in this degree");
  return static_cast<std::size_t>(it - order.begin());
}

ConnMatrix gram_connection(const Permutation& tau, const Kappa& kappa, int n) {
  if (kappa.size() < 2) throw DimensionMismatch("kappa needs at least two entries");
  ConnMatrix m;
  m.d = kappa.size() - 1;
  m.n = n;
  m.kappa = kappa;
  m.tau = tau;
  m.order = enumerate_basis(n, m.d);
  const Kappa tk = act(tau, kappa);
  SimplexMoments moments(kappa);
  std::vector<SparsePoly> base, moved;
  std::vector<Rational> sq;
  for (const auto& mu : m.order) {
    base.push_back(simplex_basis(mu, kappa));
    sq.push_back(moments.inner_product(base.back(), base.back()));
    moved.push_back(permute_vars(simplex_basis(mu, tk), tau));
  }
  const std::size_t size = m.order.size();
  m.entries.assign(size, std::vector<Rational>(size));
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c)
      m.entries[r][c] = moments.inner_product(moved[r], base[c]) / sq[c];
  return m;
}

QSqrt normalize_entry(const Rational& c, const MultiIndex& nu, const MultiIndex& mu,
                      const Kappa& kappa, const Kappa& tau_kappa) {
  if (c.is_zero()) return QSqrt();
  const Rational ratio = norm_A(mu, kappa) / norm_A(nu, tau_kappa);
  if (ratio.sign() <= 0) throw InvalidParameter("norms of opposite sign; no real normalization");
  return QSqrt(c.sign(), c * c * ratio);
}

std::vector<std::vector<QSqrt>> normalized(const ConnMatrix& m) {
  const Kappa tk = act(m.tau, m.kappa);
  std::vector<std::vector<QSqrt>> out(m.order.size());
  for (std::size_t r = 0; r < m.order.size(); ++r)
    for (std::size_t c = 0; c < m.order.size(); ++c)
      out[r].push_back(normalize_entry(m.entries[r][c], m.order[r], m.order[c], m.kappa, tk));
  return out;
}

VerificationReport verify_reconstruction(const ConnMatrix& m) {
  VerificationReport rep;
  const Kappa tk = act(m.tau, m.kappa);
  std::vector<SparsePoly> base;
  for (const auto& mu : m.order) base.push_back(simplex_basis(mu, m.kappa));
  for (std::size_t r = 0; r < m.order.size(); ++r) {
    SparsePoly diff = permute_vars(simplex_basis(m.order[r], tk), m.tau);
    for (std::size_t c = 0; c < m.order.size(); ++c) diff -= base[c] * m.entries[r][c];
    rep.add("reconstruction " + m.order[r].str(), diff.is_zero(), diff.is_zero() ? "" : diff.str());
  }
  return rep;
}

VerificationReport verify_orthogonality(const ConnMatrix& m) {
  VerificationReport rep;
  const Kappa tk = act(m.tau, m.kappa);
  const std::size_t size = m.order.size();
  std::vector<Rational> a_src, a_dst;
  for (const auto& mu : m.order) {
    a_src.push_back(norm_A(mu, m.kappa));
    a_dst.push_back(norm_A(mu, tk));
  }
  bool rows = true, cols = true;
  std::string where;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      Rational row = 0, col = 0;
      for (std::size_t w = 0; w < size; ++w) {
        row += m.entries[i][w] * m.entries[j][w] * a_src[w];
        col += m.entries[w][i] * m.entries[w][j] / a_dst[w];
      }
      Rational want_row = i == j ? a_dst[i] : Rational(0);
      Rational want_col = i == j ? Rational(1) / a_src[i] : Rational(0);
      if (row != want_row) {
        rows = false;
        where = m.order[i].str() + "," + m.order[j].str();
      }
      if (col != want_col) {
        cols = false;
        where = m.order[i].str() + "," + m.order[j].str();
      }
    }
  }
  const std::string tag = " tau=" + m.tau.str() + " n=" + std::to_string(m.n);
  rep.add("row orthogonality" + tag, rows, rows ? "" : where);
  rep.add("column orthogonality" + tag, cols, cols ? "" : where);
  return rep;
}

VerificationReport verify_inverse(const Permutation& tau, const Kappa& kappa, int n) {
  VerificationReport rep;
  const Permutation inv = tau.inverse();
  const Kappa ik = act(inv, kappa);
  const ConnMatrix left = gram_connection(inv, kappa, n);
  const ConnMatrix right = gram_connection(tau, ik, n);
  bool ok = true;
  std::string where;
  for (const auto& nu : left.order)
    for (const auto& mu : left.order) {
      // c^{tau^{-1}}_{nu,mu}(kappa) A_mu(kappa) == c^tau_{mu,nu}(tau^{-1} kappa) A_nu(tau^{-1} kappa)
      Rational l = left.at(nu, mu) * norm_A(mu, kappa);
      Rational r = right.at(mu, nu) * norm_A(nu, ik);
      if (l != r) {
        ok = false;
        where = nu.str() + "," + mu.str();
      }
    }
  rep.add("inverse tau=" + tau.str() + " n=" + std::to_string(n), ok, where);
  return rep;
}

VerificationReport verify_convolution(const Permutation& t1, const Permutation& t2,
                                      const Kappa& kappa, int n) {
  VerificationReport rep;
  const Kappa k1 = act(t1, kappa);
  const ConnMatrix whole = gram_connection(t1 * t2, kappa, n);
  const ConnMatrix second = gram_connection(t2, k1, n);
  const ConnMatrix first = gram_connection(t1, kappa, n);
  const auto whole_hat = normalized(whole);
  const auto second_hat = normalized(second);
  const auto first_hat = normalized(first);
  const std::size_t size = whole.order.size();
  bool raw_ok = true, hat_ok = true;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      Rational s = 0;
      QSqrtSum h;
      for (std::size_t w = 0; w < size; ++w) {
        s += second.entries[i][w] * first.entries[w][j];
        h += QSqrtSum(second_hat[i][w]) * QSqrtSum(first_hat[w][j]);
      }
      raw_ok = raw_ok && s == whole.entries[i][j];
      hat_ok = hat_ok && h == QSqrtSum(whole_hat[i][j]);
    }
  const std::string tag = " " + t1.str() + "*" + t2.str() + " n=" + std::to_string(n);
  rep.add("convolution" + tag, raw_ok);
  rep.add("normalized convolution" + tag, hat_ok);
  return rep;
}

}  // namespace orthopoly

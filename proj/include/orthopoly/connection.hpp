#pragma once
// Connection coefficients between P^{tau kappa}(tau x) and P^kappa(x), computed
// from exact inner products, and the structural identities they satisfy.

#include <vector>

#include "orthopoly/permutation.hpp"
#include "orthopoly/qsqrt.hpp"
#include "orthopoly/report.hpp"
#include "orthopoly/simplex_jacobi.hpp"

namespace orthopoly {

Kappa act(const Permutation& tau, const Kappa& kappa);

struct ConnMatrix {
  std::size_t d = 0;
  int n = 0;
  Kappa kappa;
  Permutation tau;
  std::vector<MultiIndex> order;
  // entries[row nu][column mu]
  std::vector<std::vector<Rational>> entries;

  std::size_t index_of(const MultiIndex& nu) const;
  const Rational& at(const MultiIndex& nu, const MultiIndex& mu) const {
    return entries[index_of(nu)][index_of(mu)];
  }
};

// c_{nu,mu} = <P_nu^{tau kappa}(tau .), P_mu^kappa> / <P_mu^kappa, P_mu^kappa>.
ConnMatrix gram_connection(const Permutation& tau, const Kappa& kappa, int n);

// sqrt(A_mu(kappa) / A_nu(tau kappa)) * c.
QSqrt normalize_entry(const Rational& c, const MultiIndex& nu, const MultiIndex& mu,
                      const Kappa& kappa, const Kappa& tau_kappa);
std::vector<std::vector<QSqrt>> normalized(const ConnMatrix& m);

// Exact: sum_mu c_{nu,mu} P_mu^kappa == P_nu^{tau kappa}(tau x) for every nu.
VerificationReport verify_reconstruction(const ConnMatrix& m);
// Row and column orthogonality in rational form.
VerificationReport verify_orthogonality(const ConnMatrix& m);
// c-hat^{tau^{-1}}_{nu,mu}(kappa) == c-hat^{tau}_{mu,nu}(tau^{-1} kappa).
VerificationReport verify_inverse(const Permutation& tau, const Kappa& kappa, int n);
// c^{t1 t2}(kappa) == c^{t2}(t1 kappa) c^{t1}(kappa), raw and normalized.
VerificationReport verify_convolution(const Permutation& t1, const Permutation& t2,
                                      const Kappa& kappa, int n);

}  // namespace orthopoly

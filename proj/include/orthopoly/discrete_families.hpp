#pragma once
// Hahn polynomials on {alpha in N_0^{d+1} : |alpha| = N} and Krawtchouk
// polynomials on {x in N_0^d : |x| <= N}, their connection coefficients and
// the links to the simplex Jacobi polynomials.

#include <vector>

#include "orthopoly/connection.hpp"
#include "orthopoly/qsqrt.hpp"
#include "orthopoly/report.hpp"
#include "orthopoly/simplex_jacobi.hpp"

namespace orthopoly {

// Connection matrix computed by a discrete inner product on a lattice of size N.
struct DiscreteConnection {
  Permutation tau;
  int n = 0;
  int N = 0;
  std::vector<MultiIndex> order;
  std::vector<std::vector<Rational>> entries;
};

// ---- Hahn ----

struct HahnContext {
  Kappa kappa;  // d+1 entries, each > -1
  int N = 0;
  std::size_t dim() const { return kappa.size() - 1; }
};

// 3F2(-n, n+a+b+1, -x; a+1, -N; 1)
Rational hahn_1d(int n, int x, const Rational& a, const Rational& b, int N);
// (kappa+1)_alpha / alpha!
Rational hahn_weight(const MultiIndex& alpha, const Kappa& kappa);
// {alpha in N_0^{d+1} : |alpha| = N}
std::vector<MultiIndex> hahn_lattice(std::size_t d, int N);
// Product formula; alpha has d+1 entries.
Rational hahn_multi(const MultiIndex& nu, const MultiIndex& alpha, const HahnContext& ctx);
// Values read off the homogenized simplex polynomial, aligned with hahn_lattice.
std::vector<Rational> hahn_from_generating(const MultiIndex& nu, const HahnContext& ctx);
// N!/(|kappa|+d+1)_N sum_alpha f g H
Rational hahn_inner(const std::vector<Rational>& f, const std::vector<Rational>& g, const HahnContext& ctx);
Rational hahn_norm_B(const MultiIndex& nu, const HahnContext& ctx);
Rational hahn_norm_by_sum(const MultiIndex& nu, const HahnContext& ctx);
// B_nu against the simplex norm A_nu / (p_nu)^2 and against the lattice sum.
VerificationReport verify_B_A(const MultiIndex& nu, const HahnContext& ctx);

// h^tau from the discrete inner product at lattice size N.
DiscreteConnection hahn_gram_connection(const Permutation& tau, const Kappa& kappa, int n, int N);
// h^tau = (p_mu^kappa / p_nu^{tau kappa}) c^tau, no lattice involved.
Rational hahn_connection(const Permutation& tau, const MultiIndex& nu, const MultiIndex& mu, const Kappa& kappa);
// Whole matrix in enumerate_basis order.
std::vector<std::vector<Rational>> hahn_connection(const Permutation& tau, const Kappa& kappa, int n);
// sqrt(B_mu(kappa, N) / B_nu(tau kappa, N)) h.
QSqrt hahn_normalize_entry(const Rational& h, const MultiIndex& nu, const MultiIndex& mu, const Kappa& kappa,
                           const Kappa& tau_kappa, int N);
// Discrete Gram at each N equals the simplex relation; normalized h-hat = c-hat.
VerificationReport verify_hahn_connection(const Permutation& tau, const Kappa& kappa, int n,
                                          const std::vector<int>& sizes);

// ---- Krawtchouk ----

struct KrawContext {
  std::vector<Rational> rho;  // d entries in (0,1) with |rho| < 1
  int N = 0;
  std::size_t dim() const { return rho.size(); }
};

// Throws InvalidParameter unless 0 < rho_i and |rho| < 1.
void validate(const KrawContext& ctx);

// 2F1(-n, -x; -N; 1/p)
Rational krawtchouk_1d(int n, int x, const Rational& p, int N);
// N! prod rho_i^{x_i}/x_i! (1-|rho|)^{N-|x|}/(N-|x|)!
Rational kraw_weight(const MultiIndex& x, const KrawContext& ctx);
// {x in N_0^d : |x| <= N}
std::vector<MultiIndex> kraw_lattice(std::size_t d, int N);
Rational krawtchouk_multi(const MultiIndex& nu, const MultiIndex& x, const KrawContext& ctx);
Rational krawtchouk_norm_C(const MultiIndex& nu, const KrawContext& ctx);
Rational kraw_norm_by_sum(const MultiIndex& nu, const KrawContext& ctx);

// First d entries of tau (rho, 1 - |rho|).
std::vector<Rational> kraw_act(const Permutation& tau, const std::vector<Rational>& rho);

struct KrawDual {
  MultiIndex x;
  MultiIndex nu;
  std::vector<Rational> rho;
};
KrawDual kraw_dual_map(const MultiIndex& x, const MultiIndex& nu, const std::vector<Rational>& rho);
// Involution, |rho~| = |rho|, K_nu(x) = K_nu~(x~), C_nu weight~(x~) = (1-|rho|)^N on the full grid.
VerificationReport verify_kraw_duality(const KrawContext& ctx);

DiscreteConnection kraw_gram_connection(const Permutation& tau, const std::vector<Rational>& rho, int n, int N);
// k-hat from a discrete Gram matrix.
QSqrt kraw_normalize_entry(const Rational& k, const MultiIndex& nu, const MultiIndex& mu,
                           const std::vector<Rational>& rho, const std::vector<Rational>& tau_rho, int N);
std::vector<Rational> kraw_rho_hat(const std::vector<Rational>& rho);
std::vector<Rational> kraw_rho_tilde(const std::vector<Rational>& rho);
// k-hat for (1 2 ... d); form 1 uses rho-hat, form 2 rho-tilde.
QSqrt kraw_cc_cyclic(const MultiIndex& nu, const MultiIndex& mu, const std::vector<Rational>& rho, int form);

// ---- Hahn to Krawtchouk ----

struct LimitReport {
  std::vector<Rational> t;
  std::vector<Rational> deviation;  // |scaled H - K| at each t
  bool exact = false;               // zero at every t
  bool monotone = false;
  double ratio = 0;                 // deviation[size-2] / deviation[size-1]
  bool ok = false;
};

inline const std::vector<Rational>& default_t_grid() {
  static const std::vector<Rational> grid{1000, 10000, 100000};
  return grid;
}

// H_nu(x; t(rho, 1-|rho|), N) rescaled against K_nu(x; rho, N); x has d entries.
LimitReport hahn_to_kraw_limit_check(const MultiIndex& nu, const MultiIndex& x, const std::vector<Rational>& rho,
                                     int N, const std::vector<Rational>& t_grid = default_t_grid());
// Signed squares of h-hat^tau(t(rho, 1-|rho|)) against k-hat^tau(rho).
LimitReport hat_limit_check(const Permutation& tau, const MultiIndex& nu, const MultiIndex& mu,
                            const std::vector<Rational>& rho, int N,
                            const std::vector<Rational>& t_grid = default_t_grid());

}  // namespace orthopoly

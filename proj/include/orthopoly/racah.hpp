#pragma once
// Racah polynomials: the classical one-variable family and the multivariable
// family on the lattice 0 <= x_1 <= ... <= x_d <= N.

#include <vector>

#include "orthopoly/multi_index.hpp"
#include "orthopoly/qsqrt.hpp"
#include "orthopoly/rational.hpp"

namespace orthopoly {

// One variable: R_n(lambda(x); alpha, beta, gamma, delta) on x = 0..N,
// lambda(x) = x (x + gamma + delta + 1).
struct Racah1DParams {
  Rational alpha, beta, gamma, delta;
  int N = 0;
};

Rational racah_1d(int n, int x, const Racah1DParams& p);
Rational racah_weight_1d(int x, const Racah1DParams& p);
// sum_x w(x) R_n(x)^2, evaluated as a finite sum.
Rational racah_norm_1d(int n, const Racah1DParams& p);
// sign(R_n(x)) sqrt(w(x) R_n(x)^2 / norm): the orthonormal value times sqrt(w).
QSqrt racah_weighted_normalized_1d(int n, int x, const Racah1DParams& p);
// w(x; alpha, beta, gamma, delta) (delta+1)_x / (gamma+1)_x, the weight of the
// summation identity; equal to w when gamma = delta.
Rational racah_weight_star(int x, const Racah1DParams& p);

// d variables: beta_0, ..., beta_{d+1}.
struct RacahParams {
  std::vector<Rational> beta;
  int N = 0;
  std::size_t dim() const { return beta.size() - 2; }
};

// Chains 0 <= x_1 <= ... <= x_d <= N.
std::vector<MultiIndex> racah_lattice(std::size_t d, int N);

Rational racah_multi(const MultiIndex& nu, const MultiIndex& x, const RacahParams& p);
Rational racah_weight(const MultiIndex& x, const RacahParams& p);
// Closed-form squared norm r_nu^2.
Rational racah_norm(const MultiIndex& nu, const RacahParams& p);
// sum_x w(x) R_nu(x)^2 over the lattice.
Rational racah_norm_by_sum(const MultiIndex& nu, const RacahParams& p);
// sign(R_nu(x)) sqrt(w(x) R_nu(x)^2 / r_nu^2).
QSqrt racah_weighted_normalized(const MultiIndex& nu, const MultiIndex& x, const RacahParams& p);

// The second family R'_nu.
Rational racah_prime(const MultiIndex& nu, const MultiIndex& x, const RacahParams& p);
Rational racah_prime_norm(const MultiIndex& nu, const RacahParams& p);
QSqrt racah_prime_weighted_normalized(const MultiIndex& nu, const MultiIndex& x, const RacahParams& p);

struct RacahPoint {
  MultiIndex x;
  MultiIndex nu;
  RacahParams params;
};

// Exchanges the roles of variable and degree.
RacahPoint racah_dual(const RacahPoint& pt);
// Reflection x_j -> N - x_{d+1-j} relating R and R'.
RacahPoint racah_conjugate(const RacahPoint& pt);
// Dual map that lands in the second family.
RacahPoint racah_dual_prime(const RacahPoint& pt);

// (-N)_{|nu|} (-N-beta_0)_{|nu|} prod (beta_{j+1}-beta_j)_{nu_j}
Rational racah_dual_normalizer(const MultiIndex& nu, const RacahParams& p);

// The x-independent constant relating the d = 1 multivariable family to the
// classical parametrization, obtained as a ratio at x = 0.
Racah1DParams racah_bridge_params(const RacahParams& p);
Rational racah_bridge_factor(int n, const RacahParams& p);

}  // namespace orthopoly

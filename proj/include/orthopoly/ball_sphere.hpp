#pragma once
// Orthogonal polynomials on the unit ball for the weight
// prod |x_i|^{2 kappa_i + 1} (1 - |x|^2)^{kappa_{d+1}}, and on the unit sphere
// for prod |y_i|^{2 kappa_i + 1}, built from simplex Jacobi polynomials in the
// squared variables.

#include <utility>
#include <vector>

#include "orthopoly/connection.hpp"
#include "orthopoly/qsqrt.hpp"
#include "orthopoly/report.hpp"
#include "orthopoly/simplex_jacobi.hpp"

namespace orthopoly {

// x^eps core(x_1^2, ..., x_d^2). Ball: eps has d entries. Sphere: eps has d+1
// entries and the polynomial is homogenized to `degree` with r^2 = |y|^2.
struct ParityPoly {
  MultiIndex eps;
  SparsePoly core;  // in u_i = x_i^2, d variables
  int degree = 0;
};

// C_n^{(lambda, mu)}(t) = t^parity core(t^2), orthogonal for |t|^{2mu} (1-t^2)^{lambda-1/2}.
struct GegenbauerGen {
  int parity = 0;
  int m = 0;
  Rational scale;        // (lambda+mu)_{m+parity} / (mu+1/2)_{m+parity}
  Rational alpha, beta;  // core = scale P_m^{(alpha,beta)}(2s-1)
  UniPoly core;          // ascending powers of s = t^2
};
GegenbauerGen gegenbauer_gen(int n, const Rational& lambda, const Rational& mu);
// The same polynomial in ascending powers of t.
UniPoly gegenbauer_poly(int n, const Rational& lambda, const Rational& mu);

// ---- ball ----

// Normalized ball moment of x^beta (zero unless beta is even).
Rational ball_moment(const MultiIndex& beta, const Kappa& kappa);
// By parity reduction to a simplex inner product at kappa.
Rational ball_inner_product(const ParityPoly& p, const ParityPoly& q, const Kappa& kappa);
// Directly from monomial moments.
Rational ball_inner_product(const SparsePoly& p, const SparsePoly& q, const Kappa& kappa);

SparsePoly expand_ball(const ParityPoly& p);
// x^eps P_nu^{kappa+eps}(x_1^2, ...); throws DimensionMismatch on size errors.
ParityPoly q_ball(const MultiIndex& nu, const MultiIndex& eps, const Kappa& kappa);
// Same, indexed by degree n; throws ParityMismatch unless (n - |eps|)/2 = |nu|.
ParityPoly q_ball(const MultiIndex& nu, const MultiIndex& eps, const Kappa& kappa, int n);
// Product of generalized Gegenbauer factors with index alpha, kept in parity form.
ParityPoly ball_basis(const MultiIndex& alpha, const Kappa& kappa);
// All (nu, eps) with eps in {0,1}^d and 2|nu| + |eps| = n.
std::vector<std::pair<MultiIndex, MultiIndex>> ball_parity_classes(int n, std::size_t d);

// ball_basis(2 nu + eps) is a nonzero multiple of q_ball(nu, eps); the multiple
// is written to *scalar when given.
VerificationReport verify_ball_equivalence(const MultiIndex& alpha, const Kappa& kappa, Rational* scalar = nullptr);

// tau acts on d+1 symbols and fixes the last.
struct BallConnection {
  Permutation tau;
  int n = 0;
  std::vector<MultiIndex> order;  // all alpha with |alpha| = n
  std::vector<std::vector<Rational>> entries;
  std::vector<std::vector<QSqrt>> normalized;
};
// b from inner products of expanded ball bases.
BallConnection ball_gram_connection(const Permutation& tau, const Kappa& kappa, int n);
// Normalized b-hat for alpha = 2 nu + eps, beta = 2 mu + eps'. Zero unless
// tau eps' = eps; then c-hat^tau_{nu,mu}(kappa + eps').
QSqrt ball_connection(const Permutation& tau, const MultiIndex& alpha, const MultiIndex& beta, const Kappa& kappa);
// Gram matrix against ball_connection and the parity block structure.
VerificationReport verify_ball_blocks(const Permutation& tau, const Kappa& kappa, int n);

// Disk, weight (1 - |x|^2)^mu. i = 1: cos branch, i = 2: sin branch.
SparsePoly disk_polar_basis(int j, int i, int n, const Rational& mu);
// Each polar element is a multiple of a parity image of P^{(13) kappa}, kappa
// = (-1/2 + eps_1, -1/2 + eps_2, mu); the polar set is orthogonal.
VerificationReport verify_disk_polar(int n, const Rational& mu);

// ---- sphere ----

// Normalized moment of y^beta over the sphere (beta has d+1 entries).
Rational sphere_moment(const MultiIndex& beta, const Kappa& kappa);
ParityPoly sphere_basis(const MultiIndex& nu, const MultiIndex& eps, const Kappa& kappa, int n);
// Homogeneous polynomial in y_1, ..., y_{d+1}.
SparsePoly expand_sphere(const ParityPoly& p);
Rational sphere_inner_product(const ParityPoly& p, const ParityPoly& q, const Kappa& kappa);
Rational sphere_inner_product(const SparsePoly& p, const SparsePoly& q, const Kappa& kappa);
// All (nu, eps) with eps in {0,1}^{d+1} and 2|nu| + |eps| = n.
std::vector<std::pair<MultiIndex, MultiIndex>> sphere_parity_classes(int n, std::size_t d);
// dim of harmonics of degree n in d+1 variables.
long harmonic_dimension(int n, std::size_t d);

// tau acts on all d+1 coordinates; order lists the (nu, eps) labels of degree n.
struct SphereConnection {
  Permutation tau;
  int n = 0;
  std::vector<std::pair<MultiIndex, MultiIndex>> order;
  std::vector<std::vector<Rational>> entries;
  std::vector<std::vector<QSqrt>> normalized;
};
SphereConnection sphere_gram_connection(const Permutation& tau, const Kappa& kappa, int n);
// Zero unless tau eps' = eps; then c-hat^tau_{nu,mu}(kappa + eps').
QSqrt sphere_connection(const Permutation& tau, const std::pair<MultiIndex, MultiIndex>& row,
                        const std::pair<MultiIndex, MultiIndex>& col, const Kappa& kappa);
VerificationReport verify_sphere_blocks(const Permutation& tau, const Kappa& kappa, int n);

// The listed bases of degree 2n and 2n+1 on the 2-sphere: count, pairwise
// orthogonality under the surface measure and harmonicity.
VerificationReport harmonics_check(int n);

}  // namespace orthopoly

#pragma once
// Verification suites shared by the command line tool and the acceptance run.
// Each suite sweeps a parameter grid and records one check per case.

#include <cstdint>
#include <random>
#include <vector>

#include "orthopoly/connection.hpp"
#include "orthopoly/report.hpp"
#include "orthopoly/simplex_jacobi.hpp"

namespace orthopoly {

// Deterministic sampler over small rationals. Only the raw mt19937_64 stream is
// used, so draws agree across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  // Integer in [lo, hi].
  long integer(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  // p/q with q in [1, max_den] and p/q in [lo, hi).
  Rational rational(long lo, long hi, long max_den);
  // d+1 entries in (-1/2, 3), never -1 or below.
  Kappa kappa(std::size_t d);
  Permutation permutation(std::size_t m);

 private:
  std::mt19937_64 rng_;
};

// (2i+1)/(3+i), i = 0..d: a fixed asymmetric sample.
Kappa generic_kappa(std::size_t d);
// beta_0 = 1/2, beta_j = beta_{j-1} + 7/6 + j/5.
std::vector<Rational> generic_beta(std::size_t d);

// Closed forms against the Gram oracle for every tau, kappa and n <= n_max;
// the Gram matrices are appended to *produced when given.
VerificationReport closed_vs_gram_suite(const std::vector<Permutation>& taus, const std::vector<Kappa>& kappas,
                                        int n_max, std::vector<ConnMatrix>* produced = nullptr);
// The three Racah forms of (1 2 ... d) agree pairwise and match Gram.
VerificationReport cyclic_suite(std::size_t d, const std::vector<Kappa>& kappas, int n_max,
                                std::vector<ConnMatrix>* produced = nullptr);
// Orthogonality and inverse relation of each matrix, and convolution on
// random (tau1, tau2) pairs in dimensions 2 and 3.
VerificationReport structural_suite(const std::vector<ConnMatrix>& matrices, int random_pairs, std::uint64_t seed);
// Orthogonality of P^kappa up to degree n, and of every Gram matrix of degree n.
VerificationReport orthogonality_suite(const Kappa& kappa, int n);

// Multivariable orthogonality (dims, N <= n_max), duality and the second
// family on full grids, Whipple on random tuples, the d = 1 bridge.
VerificationReport racah_suite(const std::vector<std::size_t>& dims, int N_max, int whipple_tuples, std::uint64_t seed);
// Racah orthogonality and duality for one parameter set.
VerificationReport racah_params_suite(const std::vector<Rational>& beta, int N);
VerificationReport sum_identity_suite(const std::vector<Kappa>& kappas, int n_max);

// Product formula against the generating function (|nu| <= nu_max), lattice
// orthogonality with B, the B-A relation (N <= N_max, d <= d_max), and
// h^tau at N, N+1, N+2 for all tau with n <= conn_n_max.
VerificationReport hahn_suite(std::size_t d_max, int N_max, int nu_max, int conn_n_max);
VerificationReport hahn_params_suite(const Kappa& kappa, int N);
// Orthogonality with C, duality, cyclic formula (n <= cyc_n_max) and the
// limit ratio test on at least limit_cases non-exact cases.
VerificationReport kraw_suite(std::size_t d_max, int N_max, int cyc_n_max, int limit_cases);
VerificationReport kraw_params_suite(const std::vector<Rational>& rho, int N);

// Parity orthogonality, equivalence of the two ball bases, disk polar bases,
// the ball block rule and sphere bases for d <= d_max, n <= n_max.
VerificationReport ball_sphere_suite(std::size_t d_max, int n_max);
VerificationReport ball_params_suite(const Kappa& kappa, int n);
VerificationReport sphere_params_suite(const Kappa& kappa, int n);
// Harmonic bases of degrees 2m and 2m+1 on the 2-sphere for m <= n.
VerificationReport harmonics_suite(int n);
// Basis counts against binomials, parity-class counts against dimensions.
VerificationReport dimension_suite(std::size_t d_max, int n_max);

}  // namespace orthopoly

#pragma once
// Jacobi polynomials on the simplex T^d = {x in R^d : x_i >= 0, |x| <= 1}
// with weight x^kappa (1 - |x|)^kappa_{d+1}, normalized to total mass one.

#include <unordered_map>
#include <vector>

#include "orthopoly/multi_index.hpp"
#include "orthopoly/permutation.hpp"
#include "orthopoly/rational.hpp"
#include "orthopoly/sparse_poly.hpp"

namespace orthopoly {

// kappa_1, ..., kappa_{d+1}
using Kappa = std::vector<Rational>;

Rational total(const std::vector<Rational>& v);
// Sum of entries k..end, 1-based (|kappa^k|).
Rational suffix_sum(const std::vector<Rational>& v, std::size_t k);

// Classical Jacobi P_n^{(alpha,beta)}(t) in ascending powers of t.
UniPoly jacobi_1d(int n, const Rational& alpha, const Rational& beta);

// a_j = |kappa^{j+1}| + 2|nu^{j+1}| + d - j for j = 1..d (returned 0-based).
std::vector<Rational> a_coefficients(const MultiIndex& nu, const Kappa& kappa);

// P_nu^kappa in d variables.
SparsePoly simplex_basis(const MultiIndex& nu, const Kappa& kappa);

// Squared norm A_nu(kappa) of P_nu^kappa under the normalized weight.
Rational norm_A(const MultiIndex& nu, const Kappa& kappa);

// p_nu(kappa) = prod_j P_{nu_j}^{(a_j,kappa_j)}(1) = prod (a_j+1)_{nu_j} / nu_j!.
Rational endpoint_product(const MultiIndex& nu, const Kappa& kappa);

// All nu in N^d with |nu| = n, graded reverse-lex.
std::vector<MultiIndex> enumerate_basis(int n, std::size_t d);

// p(tau x) where (tau x)_i = X_{tau(i)} and X = (x, 1 - |x|).
SparsePoly permute_vars(const SparsePoly& p, const Permutation& tau);

// Normalized simplex integral of x^alpha (alpha of length d).
Rational simplex_moment(const MultiIndex& alpha, const Kappa& kappa);

// Moments of one fixed kappa, memoized; used by every Gram computation.
class SimplexMoments {
 public:
  explicit SimplexMoments(Kappa kappa);
  const Kappa& kappa() const { return kappa_; }
  std::size_t dim() const { return kappa_.size() - 1; }
  const Rational& moment(const MultiIndex& alpha);
  Rational inner_product(const SparsePoly& f, const SparsePoly& g);

 private:
  Kappa kappa_;
  std::unordered_map<MultiIndex, Rational, MultiIndexHash> cache_;
};

Rational inner_product_simplex(const SparsePoly& f, const SparsePoly& g, const Kappa& kappa);

}  // namespace orthopoly

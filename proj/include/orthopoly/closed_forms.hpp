#pragma once
// Explicit connection coefficients: hypergeometric for the triangle, Racah
// polynomials of one and two variables for the tetrahedron, and the general
// reductions (fixed leading or trailing coordinates, cyclic shifts).

#include <string>
#include <variant>

#include "orthopoly/connection.hpp"
#include "orthopoly/qsqrt.hpp"
#include "orthopoly/racah.hpp"
#include "orthopoly/report.hpp"

namespace orthopoly {

// A closed-form coefficient, either the raw c^tau or the normalized c-hat^tau.
struct ClosedValue {
  std::variant<Rational, QSqrtSum> value;
  std::string source;

  bool is_raw() const { return std::holds_alternative<Rational>(value); }
  const Rational& raw() const { return std::get<Rational>(value); }
  const QSqrtSum& hat() const { return std::get<QSqrtSum>(value); }
};

QSqrtSum to_normalized(const ClosedValue& v, const MultiIndex& nu, const MultiIndex& mu,
                       const Kappa& kappa, const Kappa& tau_kappa);
// Raw coefficient; throws if a normalized value does not scale to a rational.
Rational to_raw(const ClosedValue& v, const MultiIndex& nu, const MultiIndex& mu, const Kappa& kappa,
                const Kappa& tau_kappa);

// ---- two variables; j = nu_2, m = mu_2, n = |nu| ----

Rational d_coefficient(int n, int j, int m, const Kappa& kappa);
// c^{(12)}_{j,m}(kappa, n)
Rational cc_2d_tau12(int n, int j, int m, const Kappa& kappa);
// Every tau in S_3.
Rational cc_2d(const Permutation& tau, int n, int j, int m, const Kappa& kappa);
// Normalized c^{(12)} through one-variable Racah polynomials; variant 1
// evaluates at m with degree j, variant 2 at j with degree m.
QSqrt cc_2d_tau12_racah(int n, int j, int m, const Kappa& kappa, int variant);
// P^{(12)kappa}_{n-j,j}((12)(1, x_2)) and P^kappa_{n-m,m}(1, x_2) against
// their explicit expansions in x_2.
VerificationReport verify_restriction_2d(int n, const Kappa& kappa);
// Both sides of the summation identity between one-variable Racah polynomials.
struct SumIdentity {
  Rational lhs, rhs;
};
SumIdentity sum_identity(int n, int k, int l, const Kappa& kappa);

// ---- three variables ----

// Any tau in S_4.
ClosedValue cc_3d(const Permutation& tau, const MultiIndex& nu, const MultiIndex& mu, const Kappa& kappa);
QSqrt cc_3d_tau123(const MultiIndex& nu, const MultiIndex& mu, const Kappa& kappa);
QSqrt cc_3d_tau132(const MultiIndex& nu, const MultiIndex& mu, const Kappa& kappa);
// Single sum of products of one- and two-variable Racah polynomials. The
// one-variable degree is nu_2; degree_from_mu selects mu_2 instead.
QSqrtSum cc_3d_tau13(const MultiIndex& nu, const MultiIndex& mu, const Kappa& kappa,
                     bool degree_from_mu = false);

// ---- any dimension ----

// c-hat for the cycle (1 2 ... d) on d+1 symbols, in one of three Racah forms.
QSqrt cc_cyclic(const MultiIndex& nu, const MultiIndex& mu, const Kappa& kappa, int form);
// c-hat for the transposition (j, j+1), 1 <= j <= d.
QSqrt cc_adjacent(std::size_t j, const MultiIndex& nu, const MultiIndex& mu, const Kappa& kappa);

// Reduction when tau fixes 1..j (j = tau.fixed_prefix() >= 1).
ClosedValue cc_fix_first(const Permutation& tau, const MultiIndex& nu, const MultiIndex& mu,
                         const Kappa& kappa);
// Reduction when tau fixes the last two or more symbols.
ClosedValue cc_fix_last(const Permutation& tau, const MultiIndex& nu, const MultiIndex& mu,
                        const Kappa& kappa);

// True when closed_entry can evaluate tau without falling back to Gram.
bool has_closed_form(const Permutation& tau);
// Dispatcher over all of the above. Throws std::runtime_error when tau has no
// closed form.
ClosedValue closed_entry(const Permutation& tau, const MultiIndex& nu, const MultiIndex& mu,
                         const Kappa& kappa);

struct ClosedMatrix {
  Permutation tau;
  Kappa kappa;
  int n = 0;
  std::vector<MultiIndex> order;
  std::vector<std::vector<ClosedValue>> values;
  bool fallback = false;  // filled from the Gram matrix
  std::string note;
};

ClosedMatrix closed_connection(const Permutation& tau, const Kappa& kappa, int n);
// Raw entries, when every entry scales to a rational.
ConnMatrix to_conn_matrix(const ClosedMatrix& m);
// Exact agreement with the Gram oracle: raw formulas entrywise, normalized
// formulas in (sign, square).
VerificationReport compare_with_gram(const ClosedMatrix& closed, const ConnMatrix& gram);

}  // namespace orthopoly

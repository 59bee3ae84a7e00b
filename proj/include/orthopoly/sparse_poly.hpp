#pragma once
// Sparse multivariate polynomials with exact rational coefficients.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orthopoly/multi_index.hpp"
#include "orthopoly/rational.hpp"

namespace orthopoly {

// Coefficients in ascending powers of a single variable.
using UniPoly = std::vector<Rational>;

class SparsePoly {
 public:
  using TermMap = std::map<MultiIndex, Rational, GrevlexGreater>;

  SparsePoly() = default;
  explicit SparsePoly(std::size_t nvars) : nvars_(nvars) {}

  static SparsePoly constant(std::size_t nvars, const Rational& c);
  static SparsePoly variable(std::size_t nvars, std::size_t i);
  // c0 + sum_i coeffs[i] x_i
  static SparsePoly linear(const Rational& c0, const std::vector<Rational>& coeffs);
  static SparsePoly monomial(const MultiIndex& exponent, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  Rational coefficient(const MultiIndex& exponent) const;
  // The term that comes first in graded reverse-lex order.
  const std::pair<const MultiIndex, Rational>& leading() const;

  void add_term(const MultiIndex& exponent, const Rational& c);

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const Rational& c);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
  friend SparsePoly operator*(const Rational& c, SparsePoly a) { return a *= c; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  SparsePoly operator-() const { return *this * Rational(-1); }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Rational evaluate(const std::vector<Rational>& point) const;
  // Replaces variable i by images[i] (all images share one variable count).
  SparsePoly compose(const std::vector<SparsePoly>& images) const;
  // Fixes variable i to a value, keeping the variable count.
  SparsePoly fix_variable(std::size_t i, const Rational& value) const;
  SparsePoly derivative(std::size_t i) const;
  SparsePoly laplacian() const;
  // Some r with *this == r * other, if one exists. Throws if other is zero.
  std::optional<Rational> ratio_to(const SparsePoly& other) const;

  std::string str() const;

 private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

SparsePoly pow(const SparsePoly& p, int k);

// sum_k f_k lin^k hom^(n-k): the degree-n homogenization of f in (lin, hom).
SparsePoly substitute_homogeneous(const UniPoly& f, const SparsePoly& lin, const SparsePoly& hom,
                                  int n);

// Univariate composition f(g).
SparsePoly substitute(const UniPoly& f, const SparsePoly& g);

// Exact sum of f_k x^k.
Rational evaluate(const UniPoly& f, const Rational& x);

}  // namespace orthopoly

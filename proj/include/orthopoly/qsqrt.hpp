#pragma once
// Signed square roots of rationals, and finite sums of them.

#include <optional>
#include <string>
#include <vector>

#include "orthopoly/rational.hpp"

namespace orthopoly {

// The real number sign * sqrt(radicand) with radicand >= 0.
class QSqrt {
 public:
  QSqrt() = default;
  // sign must be -1, 0 or 1; radicand must be >= 0 and is zero iff sign is.
  QSqrt(int sign, Rational radicand);
  static QSqrt from_rational(const Rational& r) { return QSqrt(r.sign(), r * r); }
  // sign(s) * sqrt(|s| * t) style constructor: value = sign * sqrt(square).
  static QSqrt signed_root(int sign, const Rational& square);

  int sign() const { return sign_; }
  const Rational& radicand() const { return radicand_; }
  bool is_zero() const { return sign_ == 0; }
  // The signed square sign * radicand, handy for exact comparisons.
  Rational signed_square() const { return sign_ < 0 ? -radicand_ : radicand_; }
  std::optional<Rational> as_rational() const;
  double to_double() const;
  std::string str() const;

  QSqrt operator-() const { return QSqrt(-sign_, radicand_); }
  friend QSqrt operator*(const QSqrt& a, const QSqrt& b) {
    return QSqrt(a.sign_ * b.sign_, a.radicand_ * b.radicand_);
  }
  friend QSqrt operator*(const QSqrt& a, const Rational& r) { return a * from_rational(r); }
  friend bool operator==(const QSqrt& a, const QSqrt& b) {
    return a.sign_ == b.sign_ && a.radicand_ == b.radicand_;
  }

 private:
  int sign_ = 0;
  Rational radicand_;
};

// sum_k coef_k * sqrt(class_k), kept canonical: the class radicands are
// positive and no ratio of two of them is a rational square. Square roots from
// distinct classes are linearly independent over Q, so equality is exact.
class QSqrtSum {
 public:
  struct Term {
    Rational coef;
    Rational radicand;
  };

  QSqrtSum() = default;
  QSqrtSum(const QSqrt& q) { add(q); }  // NOLINT
  QSqrtSum(const Rational& r) { add(QSqrt::from_rational(r)); }  // NOLINT

  void add(const QSqrt& q);
  void add_scaled(const Rational& coef, const Rational& radicand);
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Collapses to a single signed root when only one class survives.
  std::optional<QSqrt> as_qsqrt() const;
  double to_double() const;

  QSqrtSum& operator+=(const QSqrtSum& o);
  QSqrtSum operator-() const;
  friend QSqrtSum operator+(QSqrtSum a, const QSqrtSum& b) { return a += b; }
  friend QSqrtSum operator-(QSqrtSum a, const QSqrtSum& b) { return a += -b; }
  friend QSqrtSum operator*(const QSqrtSum& a, const QSqrtSum& b);
  friend bool operator==(const QSqrtSum& a, const QSqrtSum& b) { return (a - b).is_zero(); }

 private:
  std::vector<Term> terms_;
};

}  // namespace orthopoly

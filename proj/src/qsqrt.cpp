#include "orthopoly/qsqrt.hpp"

#include <cmath>
#include <stdexcept>

namespace orthopoly {

QSqrt::QSqrt(int sign, Rational radicand) : sign_(sign), radicand_(std::move(radicand)) {
  if (sign < -1 || sign > 1) throw std::invalid_argument("QSqrt: sign must be -1, 0 or 1");
  if (radicand_.sign() < 0) throw std::domain_error("QSqrt: negative radicand");
  if ((sign_ == 0) != radicand_.is_zero()) {
    if (radicand_.is_zero()) {
      sign_ = 0;
    } else {
      throw std::invalid_argument("QSqrt: zero sign with nonzero radicand");
    }
  }
}

QSqrt QSqrt::signed_root(int sign, const Rational& square) {
  if (square.is_zero()) return QSqrt();
  return QSqrt(sign, square);
}

std::optional<Rational> QSqrt::as_rational() const {
  Rational root;
  if (!is_rational_square(radicand_, &root)) return std::nullopt;
  return sign_ < 0 ? -root : root;
}

double QSqrt::to_double() const { return sign_ * std::sqrt(radicand_.to_double()); }

std::string QSqrt::str() const {
  if (sign_ == 0) return "0";
  return std::string(sign_ < 0 ? "-" : "") + "sqrt(" + radicand_.str() + ")";
}

void QSqrtSum::add(const QSqrt& q) {
  if (q.is_zero()) return;
  add_scaled(Rational(q.sign()), q.radicand());
}

void QSqrtSum::add_scaled(const Rational& coef, const Rational& radicand) {
  if (coef.is_zero() || radicand.is_zero()) return;
  if (radicand.sign() < 0) throw std::domain_error("QSqrtSum: negative radicand");
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    Rational ratio;
    if (is_rational_square(radicand / it->radicand, &ratio)) {
      it->coef += coef * ratio;
      if (it->coef.is_zero()) terms_.erase(it);
      return;
    }
  }
  terms_.push_back({coef, radicand});
}

std::optional<QSqrt> QSqrtSum::as_qsqrt() const {
  if (terms_.empty()) return QSqrt();
  if (terms_.size() > 1) return std::nullopt;
  const auto& t = terms_.front();
  return QSqrt(t.coef.sign(), t.coef * t.coef * t.radicand);
}

double QSqrtSum::to_double() const {
  double v = 0;
  for (const auto& t : terms_) v += t.coef.to_double() * std::sqrt(t.radicand.to_double());
  return v;
}

QSqrtSum& QSqrtSum::operator+=(const QSqrtSum& o) {
  for (const auto& t : o.terms_) add_scaled(t.coef, t.radicand);
  return *this;
}

QSqrtSum QSqrtSum::operator-() const {
  QSqrtSum r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

QSqrtSum operator*(const QSqrtSum& a, const QSqrtSum& b) {
  QSqrtSum r;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) r.add_scaled(s.coef * t.coef, s.radicand * t.radicand);
  return r;
}

}  // namespace orthopoly

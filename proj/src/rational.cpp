#include "orthopoly/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace orthopoly {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto begin = s.find_first_not_of(" \t");
  auto end = s.find_last_not_of(" \t");
  if (begin == std::string::npos) throw std::invalid_argument("empty rational");
  s = s.substr(begin, end - begin + 1);
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos) throw std::invalid_argument("bad rational: " + s);
    bool neg = !s.empty() && s[0] == '-';
    std::string digits = s.substr(neg || s[0] == '+' ? 1 : 0);
    dot = digits.find('.');
    std::string whole = digits.substr(0, dot);
    std::string frac = digits.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (frac.empty()) frac = "0";
    for (char c : whole + frac)
      if (c < '0' || c > '9') throw std::invalid_argument("bad rational: " + s);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpq_class q(mpz_class(whole + frac, 10), scale);
    q.canonicalize();
    if (neg) q = -q;
    return Rational(q);
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
  q.canonicalize();
  return Rational(q);
}

long Rational::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p())
    throw std::domain_error("Rational " + str() + " is not a machine integer");
  return v_.get_num().get_si();
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) return Rational(1) / pow(base, -exponent);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(n, d));
}

Rational pochhammer(const Rational& a, long k) {
  if (k < 0) throw std::domain_error("pochhammer: negative length");
  mpq_class acc(1), term(a.raw());
  for (long i = 0; i < k; ++i) {
    acc *= term;
    term += 1;
  }
  return Rational(acc);
}

Rational factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational binomial(long n, long k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

bool is_rational_square(const Rational& r, Rational* root) {
  if (r.sign() < 0) return false;
  const mpq_class& q = r.raw();
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return false;
  if (root) {
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    *root = Rational(mpq_class(n, d));
  }
  return true;
}

bool is_nonpositive_integer(const Rational& r) { return r.is_integer() && r.sign() <= 0; }

std::size_t RationalHash::operator()(const Rational& r) const {
  const mpq_class& q = r.raw();
  std::size_t h = mpz_get_ui(q.get_num_mpz_t());
  h ^= mpz_get_ui(q.get_den_mpz_t()) * 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h ^ static_cast<std::size_t>(mpz_sgn(q.get_num_mpz_t()) + 1);
}

}  // namespace orthopoly

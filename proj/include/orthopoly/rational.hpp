#pragma once
// Exact rational numbers on top of GMP, plus the Pochhammer/factorial helpers
// every other module leans on.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace orthopoly {

class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT: implicit from integers is intended
  Rational(int v) : v_(v) {}   // NOLINT
  Rational(long num, long den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
  explicit Rational(const mpz_class& v) : v_(v) {}

  // Accepts "p", "p/q", "-p/q" and plain decimals such as "0.25".
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  // Throws std::domain_error unless the value is an integer fitting in long.
  long to_long() const;
  double to_double() const { return v_.get_d(); }

  // "p/q", or "p" when q == 1.
  std::string str() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);
Rational pow(const Rational& base, long exponent);

// Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.
Rational pochhammer(const Rational& a, long k);
Rational factorial(long n);
Rational binomial(long n, long k);

// True when r = s^2 for some rational s; writes s >= 0 to *root when given.
bool is_rational_square(const Rational& r, Rational* root = nullptr);

// True when r is 0, -1, -2, ...
bool is_nonpositive_integer(const Rational& r);

struct RationalHash {
  std::size_t operator()(const Rational& r) const;
};

}  // namespace orthopoly

#include "orthopoly/hypergeom.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "orthopoly/errors.hpp"

namespace orthopoly {

long termination_order(const HypSeries& s) {
  long m = std::numeric_limits<long>::max();
  for (const auto& a : s.top)
    if (is_nonpositive_integer(a)) m = std::min(m, -a.to_long());
  if (m == std::numeric_limits<long>::max())
    throw NonTerminating("hypergeometric series has no nonpositive integer top parameter");
  return m;
}

Rational hyp_terminating(const HypSeries& s) {
  const long m = termination_order(s);
  for (const auto& b : s.bottom)
    if (is_nonpositive_integer(b) && -b.to_long() <= m - 1)
      throw BottomPole("bottom parameter " + b.str() + " meets the series before it ends");
  Rational sum = 1, term = 1;
  for (long k = 0; k < m; ++k) {
    Rational num = s.z, den = k + 1;
    for (const auto& a : s.top) num *= a + k;
    for (const auto& b : s.bottom) den *= b + k;
    term *= num / den;
    sum += term;
  }
  return sum;
}

Rational hyp_cleared(const HypSeries& s, long len) {
  if (termination_order(s) > len)
    throw std::invalid_argument("hyp_cleared: series longer than the cleared prefactor");
  Rational sum = 0, head = 1;  // head = prod (a)_k z^k / k!
  for (long k = 0; k <= len; ++k) {
    if (k > 0) {
      Rational f = s.z / Rational(k);
      for (const auto& a : s.top) f *= a + (k - 1);
      head *= f;
    }
    if (head.is_zero()) break;
    Rational tail = head;
    for (const auto& b : s.bottom) tail *= pochhammer(b + k, len - k);
    sum += tail;
  }
  return sum;
}

Rational hyp_cleared_one(const HypSeries& s, std::size_t i, long len) {
  const long m = termination_order(s);
  if (m > len) throw std::invalid_argument("hyp_cleared_one: series longer than the cleared prefactor");
  for (std::size_t j = 0; j < s.bottom.size(); ++j)
    if (j != i && is_nonpositive_integer(s.bottom[j]) && -s.bottom[j].to_long() <= m - 1)
      throw BottomPole("bottom parameter " + s.bottom[j].str() + " meets the series before it ends");
  Rational sum = 0, head = 1;  // prod (a)_k z^k / (k! prod_{j != i} (b_j)_k)
  for (long k = 0; k <= m; ++k) {
    if (k > 0) {
      Rational num = s.z, den = k;
      for (const auto& a : s.top) num *= a + (k - 1);
      for (std::size_t j = 0; j < s.bottom.size(); ++j)
        if (j != i) den *= s.bottom[j] + (k - 1);
      head *= num / den;
    }
    if (head.is_zero()) break;
    sum += head * pochhammer(s.bottom[i] + k, len - k);
  }
  return sum;
}

}  // namespace orthopoly

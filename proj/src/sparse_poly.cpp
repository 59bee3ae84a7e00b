#include "orthopoly/sparse_poly.hpp"

#include <stdexcept>

#include "orthopoly/errors.hpp"

namespace orthopoly {

namespace {
void require_same(const SparsePoly& a, const SparsePoly& b) {
  if (a.nvars() != b.nvars()) throw DimensionMismatch("polynomials in different variable counts");
}
}  // namespace

SparsePoly SparsePoly::constant(std::size_t nvars, const Rational& c) {
  SparsePoly p(nvars);
  p.add_term(MultiIndex(nvars), c);
  return p;
}

SparsePoly SparsePoly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw DimensionMismatch("variable index out of range");
  MultiIndex e(nvars);
  e[i] = 1;
  return monomial(e, 1);
}

SparsePoly SparsePoly::linear(const Rational& c0, const std::vector<Rational>& coeffs) {
  SparsePoly p = constant(coeffs.size(), c0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    MultiIndex e(coeffs.size());
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

SparsePoly SparsePoly::monomial(const MultiIndex& exponent, const Rational& c) {
  SparsePoly p(exponent.size());
  p.add_term(exponent, c);
  return p;
}

int SparsePoly::degree() const { return terms_.empty() ? -1 : terms_.begin()->first.total(); }

Rational SparsePoly::coefficient(const MultiIndex& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const MultiIndex, Rational>& SparsePoly::leading() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return *terms_.begin();
}

void SparsePoly::add_term(const MultiIndex& exponent, const Rational& c) {
  if (exponent.size() != nvars_) throw DimensionMismatch("exponent length differs from nvars");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  require_same(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  require_same(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  require_same(a, b);
  SparsePoly r(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

Rational SparsePoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw DimensionMismatch("evaluation point has wrong length");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i]) t *= orthopoly::pow(point[i], e[i]);
    sum += t;
  }
  return sum;
}

SparsePoly SparsePoly::compose(const std::vector<SparsePoly>& images) const {
  if (images.size() != nvars_) throw DimensionMismatch("compose: one image per variable");
  const std::size_t target = images.empty() ? 0 : images.front().nvars();
  std::vector<std::vector<SparsePoly>> powers(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (images[i].nvars() != target) throw DimensionMismatch("compose: images disagree");
    powers[i].push_back(constant(target, 1));
  }
  SparsePoly r(target);
  for (const auto& [e, c] : terms_) {
    SparsePoly t = constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      while (static_cast<int>(powers[i].size()) <= e[i])
        powers[i].push_back(powers[i].back() * images[i]);
      if (e[i]) t = t * powers[i][e[i]];
    }
    r += t;
  }
  return r;
}

SparsePoly SparsePoly::fix_variable(std::size_t i, const Rational& value) const {
  if (i >= nvars_) throw DimensionMismatch("fix_variable: index out of range");
  SparsePoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    MultiIndex f = e;
    f[i] = 0;
    r.add_term(f, c * orthopoly::pow(value, e[i]));
  }
  return r;
}

SparsePoly SparsePoly::derivative(std::size_t i) const {
  if (i >= nvars_) throw DimensionMismatch("derivative: index out of range");
  SparsePoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    MultiIndex f = e;
    f[i] -= 1;
    r.add_term(f, c * Rational(e[i]));
  }
  return r;
}

SparsePoly SparsePoly::laplacian() const {
  SparsePoly r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) r += derivative(i).derivative(i);
  return r;
}

std::optional<Rational> SparsePoly::ratio_to(const SparsePoly& other) const {
  require_same(*this, other);
  if (other.is_zero()) throw std::domain_error("ratio_to: zero reference polynomial");
  const auto& [e, c] = other.leading();
  Rational r = coefficient(e) / c;
  if (*this == other * r) return r;
  return std::nullopt;
}

std::string SparsePoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    if (s.empty()) s += c.sign() < 0 ? "-" : "";
    else s += c.sign() < 0 ? " - " : " + ";
    std::vector<std::string> factors;
    Rational a = orthopoly::abs(c);
    if (a != Rational(1) || e.total() == 0) factors.push_back(a.str());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      factors.push_back("x" + std::to_string(i + 1) + (e[i] > 1 ? "^" + std::to_string(e[i]) : ""));
    }
    for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "*" : "") + factors[i];
  }
  return s;
}

SparsePoly pow(const SparsePoly& p, int k) {
  if (k < 0) throw std::domain_error("negative polynomial power");
  SparsePoly r = SparsePoly::constant(p.nvars(), 1);
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

SparsePoly substitute_homogeneous(const UniPoly& f, const SparsePoly& lin, const SparsePoly& hom,
                                  int n) {
  if (lin.nvars() != hom.nvars()) throw DimensionMismatch("substitute_homogeneous");
  if (static_cast<int>(f.size()) > n + 1) {
    for (std::size_t k = n + 1; k < f.size(); ++k)
      if (!f[k].is_zero()) throw std::invalid_argument("substitute_homogeneous: degree exceeds n");
  }
  std::vector<SparsePoly> lin_pow{SparsePoly::constant(lin.nvars(), 1)};
  std::vector<SparsePoly> hom_pow{SparsePoly::constant(lin.nvars(), 1)};
  for (int k = 1; k <= n; ++k) {
    lin_pow.push_back(lin_pow.back() * lin);
    hom_pow.push_back(hom_pow.back() * hom);
  }
  SparsePoly r(lin.nvars());
  for (int k = 0; k < static_cast<int>(f.size()) && k <= n; ++k) {
    if (f[k].is_zero()) continue;
    r += (lin_pow[k] * hom_pow[n - k]) * f[k];
  }
  return r;
}

SparsePoly substitute(const UniPoly& f, const SparsePoly& g) {
  SparsePoly r(g.nvars()), power = SparsePoly::constant(g.nvars(), 1);
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (k) power = power * g;
    if (!f[k].is_zero()) r += power * f[k];
  }
  return r;
}

Rational evaluate(const UniPoly& f, const Rational& x) {
  Rational r = 0;
  for (std::size_t k = f.size(); k-- > 0;) r = r * x + f[k];
  return r;
}

}  // namespace orthopoly

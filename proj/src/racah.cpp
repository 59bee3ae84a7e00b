#include "orthopoly/racah.hpp"

#include "orthopoly/errors.hpp"
#include "orthopoly/hypergeom.hpp"

namespace orthopoly {

namespace {

Rational divide(const Rational& num, const Rational& den, const char* what) {
  if (den.is_zero()) throw InvalidParameter(std::string("Racah ") + what + " has a vanishing denominator");
  return num / den;
}

void check(const MultiIndex& nu, const MultiIndex& x, const RacahParams& p) {
  if (p.beta.size() < 3) throw DimensionMismatch("Racah parameters need beta_0..beta_{d+1}");
  if (nu.size() != p.dim() || x.size() != p.dim()) throw DimensionMismatch("Racah index length");
  if (nu.total() > p.N) throw InvalidParameter("Racah degree exceeds N");
  int prev = 0;
  for (int v : x) {
    if (v < prev || v > p.N) throw InvalidParameter("Racah point is not a lattice chain");
    prev = v;
  }
}

// x_0 = 0, x_1..x_d, x_{d+1} = N
Rational chain(const MultiIndex& x, int N, std::size_t j) {
  if (j == 0) return 0;
  if (j == x.size() + 1) return N;
  return x[j - 1];
}

QSqrt weighted(const Rational& value, const Rational& weight, const Rational& norm) {
  if (value.is_zero()) return QSqrt();
  Rational sq = divide(weight, norm, "norm") * value * value;
  if (sq.sign() < 0) throw InvalidParameter("weight/norm negative: no real normalization");
  return QSqrt(value.sign(), sq);
}

}  // namespace

Rational racah_1d(int n, int x, const Racah1DParams& p) {
  const Rational lx = x;
  HypSeries s{{Rational(-n), Rational(n) + p.alpha + p.beta + 1, -lx, lx + p.gamma + p.delta + 1},
              {p.alpha + 1, p.beta + p.delta + 1, p.gamma + 1},
              1};
  return hyp_terminating(s);
}

Rational racah_weight_1d(int x, const Racah1DParams& p) {
  const Rational gd = p.gamma + p.delta;
  Rational num = pochhammer(gd + 1, x) * pochhammer((gd + 3) / 2, x) * pochhammer(p.alpha + 1, x) *
                 pochhammer(p.beta + p.delta + 1, x) * pochhammer(p.gamma + 1, x);
  Rational den = factorial(x) * pochhammer((gd + 1) / 2, x) * pochhammer(gd - p.alpha + 1, x) *
                 pochhammer(p.gamma - p.beta + 1, x) * pochhammer(p.delta + 1, x);
  return divide(num, den, "weight");
}

Rational racah_norm_1d(int n, const Racah1DParams& p) {
  Rational s = 0;
  for (int x = 0; x <= p.N; ++x) {
    Rational r = racah_1d(n, x, p);
    s += racah_weight_1d(x, p) * r * r;
  }
  return s;
}

QSqrt racah_weighted_normalized_1d(int n, int x, const Racah1DParams& p) {
  return weighted(racah_1d(n, x, p), racah_weight_1d(x, p), racah_norm_1d(n, p));
}

Rational racah_weight_star(int x, const Racah1DParams& p) {
  return racah_weight_1d(x, p) * divide(pochhammer(p.delta + 1, x), pochhammer(p.gamma + 1, x), "weight");
}

std::vector<MultiIndex> racah_lattice(std::size_t d, int N) {
  std::vector<MultiIndex> out;
  MultiIndex cur(d);
  auto rec = [&](auto&& self, std::size_t pos, int lo) -> void {
    if (pos == d) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v <= N; ++v) {
      cur[pos] = v;
      self(self, pos + 1, v);
    }
  };
  rec(rec, 0, 0);
  return out;
}

Rational racah_multi(const MultiIndex& nu, const MultiIndex& x, const RacahParams& p) {
  check(nu, x, p);
  const std::size_t d = p.dim();
  const auto& b = p.beta;
  Rational result = 1;
  for (std::size_t j = 1; j <= d; ++j) {
    const Rational pv = nu.prefix(j - 1);
    const Rational xj = chain(x, p.N, j), xn = chain(x, p.N, j + 1);
    const int deg = nu[j - 1];
    HypSeries s{{Rational(-deg), Rational(deg) + 2 * pv + b[j + 1] - b[0] - 1, pv - xj, pv + b[j] + xj},
                {2 * pv + b[j] - b[0], pv + b[j + 1] + xn, pv - xn},
                1};
    result *= hyp_cleared(s, deg);
    if (result.is_zero()) break;
  }
  return result;
}

Rational racah_weight(const MultiIndex& x, const RacahParams& p) {
  check(MultiIndex(p.dim()), x, p);
  const std::size_t d = p.dim();
  const auto& b = p.beta;
  Rational num = 1, den = 1;
  for (std::size_t j = 0; j <= d; ++j) {
    const long lo = chain(x, p.N, j).to_long(), hi = chain(x, p.N, j + 1).to_long();
    num *= pochhammer(b[j + 1] - b[j], hi - lo) * pochhammer(b[j + 1], hi + lo);
    den *= factorial(hi - lo) * pochhammer(b[j] + 1, hi + lo);
  }
  for (std::size_t j = 1; j <= d; ++j) {
    num *= pochhammer((b[j] + 2) / 2, x[j - 1]);
    den *= pochhammer(b[j] / 2, x[j - 1]);
  }
  return divide(num, den, "weight");
}

Rational racah_norm(const MultiIndex& nu, const RacahParams& p) {
  check(nu, MultiIndex(p.dim()), p);
  const std::size_t d = p.dim();
  const auto& b = p.beta;
  const long N = p.N, m = nu.total();
  Rational num = pochhammer(b[d + 1], N + m) * pochhammer(Rational(-N), m) *
                 pochhammer(Rational(-N) - b[0], m) * pochhammer(Rational(2 * m) + b[d + 1] - b[0], N - m);
  Rational den = factorial(N) * pochhammer(b[0] + 1, N);
  for (std::size_t k = 1; k <= d; ++k) {
    const Rational pk = nu.prefix(k), pk1 = nu.prefix(k - 1);
    const int v = nu[k - 1];
    num *= factorial(v) * pochhammer(b[k + 1] - b[k], v) * pochhammer(2 * pk1 + b[k] - b[0], v) *
           pochhammer(pk + pk1 + b[k + 1] - b[0] - 1, v);
  }
  return divide(num, den, "norm");
}

Rational racah_norm_by_sum(const MultiIndex& nu, const RacahParams& p) {
  Rational s = 0;
  for (const auto& x : racah_lattice(p.dim(), p.N)) {
    Rational r = racah_multi(nu, x, p);
    if (!r.is_zero()) s += racah_weight(x, p) * r * r;
  }
  return s;
}

QSqrt racah_weighted_normalized(const MultiIndex& nu, const MultiIndex& x, const RacahParams& p) {
  return weighted(racah_multi(nu, x, p), racah_weight(x, p), racah_norm(nu, p));
}

Rational racah_prime(const MultiIndex& nu, const MultiIndex& x, const RacahParams& p) {
  check(nu, x, p);
  const std::size_t d = p.dim();
  const auto& b = p.beta;
  const Rational N = p.N;
  Rational result = 1;
  for (std::size_t j = 1; j <= d; ++j) {
    const Rational sv = nu.suffix(j + 1);
    const Rational xj = chain(x, p.N, j), xp = chain(x, p.N, j - 1);
    const int deg = nu[j - 1];
    HypSeries s{{Rational(-deg), Rational(deg) + 2 * sv + b[d + 1] - b[j - 1] - 1, sv - N + xj, sv - N - b[j] - xj},
                {2 * sv + b[d + 1] - b[j], sv - N - b[j - 1] - xp, sv - N + xp},
                1};
    result *= hyp_cleared(s, deg);
    if (result.is_zero()) break;
  }
  return result;
}

Rational racah_prime_norm(const MultiIndex& nu, const RacahParams& p) {
  Rational s = 0;
  for (const auto& x : racah_lattice(p.dim(), p.N)) {
    Rational r = racah_prime(nu, x, p);
    if (!r.is_zero()) s += racah_weight(x, p) * r * r;
  }
  return s;
}

QSqrt racah_prime_weighted_normalized(const MultiIndex& nu, const MultiIndex& x, const RacahParams& p) {
  return weighted(racah_prime(nu, x, p), racah_weight(x, p), racah_prime_norm(nu, p));
}

RacahPoint racah_dual(const RacahPoint& pt) {
  const std::size_t d = pt.params.dim();
  const int N = pt.params.N;
  const auto& b = pt.params.beta;
  RacahPoint out{MultiIndex(d), MultiIndex(d), {std::vector<Rational>(d + 2), N}};
  for (std::size_t j = 1; j <= d; ++j) {
    out.x[j - 1] = N - pt.nu.prefix(d + 1 - j);
    out.nu[j - 1] = chain(pt.x, N, d + 2 - j).to_long() - chain(pt.x, N, d + 1 - j).to_long();
  }
  out.params.beta[0] = b[0];
  for (std::size_t j = 1; j <= d + 1; ++j) out.params.beta[j] = b[0] - b[d + 2 - j] - 2 * N + 1;
  return out;
}

RacahPoint racah_conjugate(const RacahPoint& pt) {
  const std::size_t d = pt.params.dim();
  const int N = pt.params.N;
  const auto& b = pt.params.beta;
  RacahPoint out{MultiIndex(d), MultiIndex(d), {std::vector<Rational>(d + 2), N}};
  for (std::size_t j = 1; j <= d; ++j) {
    out.x[j - 1] = N - pt.x[d - j];
    out.nu[j - 1] = pt.nu[d - j];
  }
  for (std::size_t j = 0; j <= d + 1; ++j) out.params.beta[j] = Rational(-2 * N) - b[d + 1 - j];
  return out;
}

RacahPoint racah_dual_prime(const RacahPoint& pt) {
  const std::size_t d = pt.params.dim();
  const int N = pt.params.N;
  const auto& b = pt.params.beta;
  RacahPoint out{MultiIndex(d), MultiIndex(d), {std::vector<Rational>(d + 2), N}};
  for (std::size_t j = 1; j <= d; ++j) {
    out.x[j - 1] = pt.nu.prefix(j);
    out.nu[j - 1] = chain(pt.x, N, j + 1).to_long() - chain(pt.x, N, j).to_long();
  }
  for (std::size_t j = 0; j <= d; ++j) out.params.beta[j] = b[j + 1] - b[0] - 1;
  out.params.beta[d + 1] = Rational(-2 * N) - b[0];
  return out;
}

Rational racah_dual_normalizer(const MultiIndex& nu, const RacahParams& p) {
  const auto& b = p.beta;
  const long m = nu.total();
  Rational r = pochhammer(Rational(-p.N), m) * pochhammer(Rational(-p.N) - b[0], m);
  for (std::size_t j = 1; j <= p.dim(); ++j) r *= pochhammer(b[j + 1] - b[j], nu[j - 1]);
  return r;
}

Racah1DParams racah_bridge_params(const RacahParams& p) {
  if (p.dim() != 1) throw DimensionMismatch("bridge needs the one-variable family");
  const auto& b = p.beta;
  return {Rational(-p.N - 1), b[2] - b[0] - 1 + p.N, b[1] - b[0] - 1, b[0], p.N};
}

Rational racah_bridge_factor(int n, const RacahParams& p) {
  const Racah1DParams q = racah_bridge_params(p);
  return divide(racah_multi({n}, {0}, p), racah_1d(n, 0, q), "bridge");
}

}  // namespace orthopoly

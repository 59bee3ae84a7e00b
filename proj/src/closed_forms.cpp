#include "orthopoly/closed_forms.hpp"

#include <map>
#include <stdexcept>

#include "orthopoly/errors.hpp"
#include "orthopoly/hypergeom.hpp"

namespace orthopoly {

namespace {

int parity_sign(long e) { return e % 2 == 0 ? 1 : -1; }

ClosedValue raw_value(Rational r, std::string source) { return {std::move(r), std::move(source)}; }
ClosedValue hat_value(QSqrtSum s, std::string source) { return {std::move(s), std::move(source)}; }

ClosedValue scaled(ClosedValue v, int sign, const std::string& note) {
  if (sign < 0) {
    if (v.is_raw()) v.value = -v.raw();
    else v.value = -v.hat();
  }
  if (!note.empty()) v.source = note + " > " + v.source;
  return v;
}

ClosedValue zero_value(const std::string& source) { return raw_value(Rational(0), source); }

MultiIndex slice(const MultiIndex& v, std::size_t from, std::size_t to) {
  MultiIndex r(to - from);
  for (std::size_t i = from; i < to; ++i) r[i - from] = v[i];
  return r;
}

bool same_slice(const MultiIndex& a, const MultiIndex& b, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

Permutation transposition(std::size_t a, std::size_t b, std::size_t m) {
  std::vector<int> img(m);
  for (std::size_t i = 0; i < m; ++i) img[i] = static_cast<int>(i);
  std::swap(img[a], img[b]);
  return Permutation::from_images(img);
}

Permutation named(const char* cycles, std::size_t m) { return Permutation::parse(cycles, m); }

void check_entry(const Permutation& tau, const MultiIndex& nu, const MultiIndex& mu, const Kappa& kappa) {
  const std::size_t d = nu.size();
  if (mu.size() != d || kappa.size() != d + 1 || tau.size() != d + 1)
    throw DimensionMismatch("connection entry: tau, nu, mu and kappa sizes disagree");
  if (nu.total() != mu.total()) throw std::invalid_argument("connection entry: |nu| != |mu|");
}

Permutation sub_first(const Permutation& tau, std::size_t j) {
  std::vector<int> img;
  for (std::size_t i = j; i < tau.size(); ++i) img.push_back(tau(static_cast<int>(i)) - static_cast<int>(j));
  return Permutation::from_images(img);
}

Permutation sub_last(const Permutation& tau, std::size_t k) {
  std::vector<int> img;
  for (std::size_t i = 0; i < k; ++i) img.push_back(tau(static_cast<int>(i)));
  img.push_back(static_cast<int>(k));
  return Permutation::from_images(img);
}

enum class Route {
  Identity, Line, Triangle, Tetrahedron, FixFirst, FixLast, Cyclic, TailSwap, TailConjugate, Convolution, None
};

Route direct_route(const Permutation& tau, bool allow_swap = true, bool allow_conjugate = true) {
  const std::size_t m = tau.size();
  const std::size_t d = m - 1;
  if (tau.is_identity()) return Route::Identity;
  if (d == 1) return Route::Line;
  if (d == 2) return Route::Triangle;
  if (d == 3) return Route::Tetrahedron;
  const std::size_t j = tau.fixed_prefix();
  if (j >= 1 && direct_route(sub_first(tau, j)) != Route::None) return Route::FixFirst;
  const std::size_t s = tau.fixed_suffix();
  if (s >= 2 && direct_route(sub_last(tau, m - s)) != Route::None) return Route::FixLast;
  if (tau == cycle_prefix(d, m)) return Route::Cyclic;
  const Permutation t = transposition(d - 1, d, m);
  if (allow_swap && direct_route(tau * t, false, false) != Route::None) return Route::TailSwap;
  if (allow_conjugate && direct_route(t * tau * t, true, false) != Route::None) return Route::TailConjugate;
  return Route::None;
}

// tau = rest * (j, j+1) (adjacent factor acts on the rows) or
// tau = (j, j+1) * rest (adjacent factor acts on the columns).
struct Split {
  std::size_t j = 0;
  bool on_rows = true;
  Permutation rest;
};

// Products of two permutations: c-hat^{t1 t2}(kappa) = c-hat^{t2}(t1 kappa) c-hat^{t1}(kappa).
// Single entries recurse through every level, so the depth is capped.
constexpr int kMaxConvolutionDepth = 6;

struct Plan {
  Route route = Route::None;
  int depth = 0;
  Split split;
};

// Shortest product decomposition, searched by increasing depth; plans are
// cached per permutation once complete.
bool reachable(const Permutation& tau, int depth, Split* out) {
  static std::map<std::pair<std::vector<int>, int>, bool> seen;
  if (direct_route(tau) != Route::None) return true;
  if (depth == 0) return false;
  auto key = std::make_pair(tau.images(), depth);
  if (!out) {
    auto it = seen.find(key);
    if (it != seen.end()) return it->second;
  }
  const std::size_t m = tau.size();
  bool found = false;
  for (std::size_t j = 1; j < m && !found; ++j)
    for (bool rows : {true, false}) {
      const Permutation t = transposition(j - 1, j, m);
      Permutation rest = rows ? tau * t : t * tau;
      if (reachable(rest, depth - 1, nullptr)) {
        if (out) *out = {j, rows, rest};
        found = true;
        break;
      }
    }
  seen[key] = found;
  return found;
}

const Plan& plan(const Permutation& tau) {
  static std::map<std::vector<int>, Plan> cache;
  auto it = cache.find(tau.images());
  if (it != cache.end()) return it->second;
  Plan p;
  p.route = direct_route(tau);
  for (int depth = 1; p.route == Route::None && depth <= kMaxConvolutionDepth; ++depth)
    if (reachable(tau, depth, &p.split)) {
      p.route = Route::Convolution;
      p.depth = depth;
    }
  return cache.emplace(tau.images(), p).first->second;
}

Route route(const Permutation& tau) { return plan(tau).route; }

}  // namespace

QSqrtSum to_normalized(const ClosedValue& v, const MultiIndex& nu, const MultiIndex& mu,
                       const Kappa& kappa, const Kappa& tau_kappa) {
  if (!v.is_raw()) return v.hat();
  return QSqrtSum(normalize_entry(v.raw(), nu, mu, kappa, tau_kappa));
}

Rational to_raw(const ClosedValue& v, const MultiIndex& nu, const MultiIndex& mu, const Kappa& kappa,
                const Kappa& tau_kappa) {
  if (v.is_raw()) return v.raw();
  const QSqrt scale(1, norm_A(nu, tau_kappa) / norm_A(mu, kappa));
  auto single = (v.hat() * QSqrtSum(scale)).as_qsqrt();
  if (!single) throw std::runtime_error("normalized value is not a single square root");
  auto r = single->as_rational();
  if (!r) throw std::runtime_error("normalized value does not scale to a rational");
  return *r;
}

// ---- two variables ----

Rational d_coefficient(int n, int j, int m, const Kappa& k) {
  const Rational total = k[0] + k[1] + k[2];
  Rational num = pochhammer(Rational(-n), j) * pochhammer(k[1] + 1, n - j) * pochhammer(k[2] + 1, j) *
                 pochhammer(Rational(n + 2) + total, m);
  Rational den = factorial(j) * pochhammer(k[1] + 1, m) *
                 pochhammer(k[1] + k[2] + Rational(2 * m + 2), n - m) * pochhammer(k[1] + k[2] + Rational(m + 1), m);
  return Rational(parity_sign(n + m)) * num / den;
}

Rational cc_2d_tau12(int n, int j, int m, const Kappa& k) {
  if (k.size() != 3) throw DimensionMismatch("triangle formulas need three kappa entries");
  const Rational total = k[0] + k[1] + k[2];
  HypSeries s{{Rational(-m), Rational(m + 1) + k[1] + k[2], Rational(-j), Rational(j + 1) + k[0] + k[2]},
              {Rational(-n), k[2] + 1, Rational(n + 2) + total},
              1};
  return d_coefficient(n, j, m, k) * hyp_terminating(s);
}

Rational cc_2d(const Permutation& tau, int n, int j, int m, const Kappa& k) {
  if (tau.size() != 3) throw DimensionMismatch("triangle formulas need tau in S_3");
  const std::string t = tau.str();
  const Kappa k23{k[0], k[2], k[1]};
  if (t == "(1)") return Rational(j == m ? 1 : 0);
  if (t == "(12)") return cc_2d_tau12(n, j, m, k);
  if (t == "(13)") return Rational(parity_sign(m + j)) * cc_2d_tau12(n, j, m, k23);
  if (t == "(23)") return Rational(j == m ? parity_sign(j) : 0);
  if (t == "(123)") return Rational(parity_sign(j)) * cc_2d_tau12(n, j, m, k);
  if (t == "(132)") return Rational(parity_sign(m)) * cc_2d_tau12(n, j, m, k23);
  throw std::logic_error("unreachable permutation " + t);
}

QSqrt cc_2d_tau12_racah(int n, int j, int m, const Kappa& k, int variant) {
  const int sign = parity_sign(n + m + j);
  if (variant == 1) {
    Racah1DParams s{Rational(-n - 1), Rational(n + 1) + k[0] + k[2], k[2], k[1], n};
    return QSqrt(sign, Rational(1)) * racah_weighted_normalized_1d(j, m, s);
  }
  Racah1DParams s{Rational(-n - 1), Rational(n + 1) + k[1] + k[2], k[2], k[0], n};
  return QSqrt(sign, Rational(1)) * racah_weighted_normalized_1d(m, j, s);
}

VerificationReport verify_restriction_2d(int n, const Kappa& k) {
  VerificationReport rep;
  const Permutation t12 = named("(12)", 3);
  const Rational total = k[0] + k[1] + k[2];
  for (int j = 0; j <= n; ++j) {
    SparsePoly lhs = permute_vars(simplex_basis({n - j, j}, act(t12, k)), t12).fix_variable(0, 1);
    SparsePoly rhs(2);
    const Rational front = Rational(parity_sign(n - j)) * pochhammer(k[1] + 1, n - j) *
                           pochhammer(k[2] + 1, j) / (factorial(n - j) * factorial(j));
    for (int m = 0; m <= n; ++m) {
      HypSeries s{{Rational(-m), Rational(m + 1) + k[1] + k[2], Rational(-j), Rational(j + 1) + k[0] + k[2]},
                  {Rational(-n), k[2] + 1, Rational(n + 2) + total},
                  1};
      Rational c = front * pochhammer(Rational(-n), m) * pochhammer(Rational(n + 2) + total, m) /
                   (factorial(m) * pochhammer(k[1] + 1, m)) * hyp_terminating(s);
      rhs.add_term({0, m}, c);
    }
    rep.add("moved restriction j=" + std::to_string(j), lhs == rhs, lhs == rhs ? "" : lhs.str() + " vs " + rhs.str());
  }
  for (int m = 0; m <= n; ++m) {
    SparsePoly lhs = simplex_basis({n - m, m}, k).fix_variable(0, 1);
    Rational c = pochhammer(k[1] + k[2] + Rational(2 * m + 2), n - m) *
                 pochhammer(k[1] + k[2] + Rational(m + 1), m) / (factorial(n - m) * factorial(m));
    SparsePoly rhs = SparsePoly::monomial({0, m}, c);
    rep.add("base restriction m=" + std::to_string(m), lhs == rhs, lhs == rhs ? "" : lhs.str());
  }
  return rep;
}

SumIdentity sum_identity(int n, int k, int l, const Kappa& kp) {
  const Rational total = kp[0] + kp[1] + kp[2];
  const Racah1DParams u{Rational(-n - 1), Rational(n + 1) + total - kp[0], kp[2], kp[0], n};
  SumIdentity out;
  for (int m = 0; m <= n; ++m) {
    HypSeries f1{{Rational(-m), Rational(m + 1) + kp[0] + kp[2], Rational(-k), Rational(k + 1) + kp[0] + kp[1]},
                 {Rational(-n), kp[0] + 1, Rational(n + 2) + total},
                 1};
    HypSeries f2{{Rational(-m), Rational(m + 1) + kp[0] + kp[2], Rational(-l), Rational(l + 1) + kp[1] + kp[2]},
                 {Rational(-n), kp[2] + 1, Rational(n + 2) + total},
                 1};
    out.lhs += Rational(parity_sign(m)) * racah_weight_star(m, u) * hyp_terminating(f1) * hyp_terminating(f2);
  }
  HypSeries f3{{Rational(-k), Rational(k + 1) + kp[0] + kp[1], Rational(-l), Rational(l + 1) + kp[1] + kp[2]},
               {Rational(-n), kp[1] + 1, Rational(n + 2) + total},
               1};
  out.rhs = Rational(parity_sign(n + k + l)) * pochhammer(kp[1] + 1, k) * pochhammer(kp[1] + 1, l) /
            pochhammer(kp[1] + 1, n) * pochhammer(kp[0] + kp[2] + 2, n) /
            (pochhammer(kp[0] + 1, k) * pochhammer(kp[2] + 1, l)) * hyp_terminating(f3);
  return out;
}

// ---- three variables ----

// The factors (|nu_{j-1}| - x_{j+1})_{nu_j} in R_nu contribute (-1)^{|nu|} at
// x_d = N, so the Racah forms below carry (-1)^{n + nu_3} where the usual
// statement has (-1)^{mu_1 + nu_3}; the Gram matrices settle the sign.

QSqrt cc_3d_tau123(const MultiIndex& nu, const MultiIndex& mu, const Kappa& k) {
  const int n = nu.total();
  const Rational total = k[0] + k[1] + k[2] + k[3];
  RacahParams p{{k[0], k[0] + k[3] + 1, k[0] + k[2] + k[3] + 2, total + 3}, n};
  QSqrt v = racah_weighted_normalized({mu[2], mu[1]}, {nu[2], nu[1] + nu[2]}, p);
  return parity_sign(n + nu[2]) < 0 ? -v : v;
}

QSqrt cc_3d_tau132(const MultiIndex& nu, const MultiIndex& mu, const Kappa& k) {
  const int n = nu.total();
  const Rational total = k[0] + k[1] + k[2] + k[3];
  RacahParams p{{k[2], k[2] + k[3] + 1, k[1] + k[2] + k[3] + 2, total + 3}, n};
  QSqrt v = racah_weighted_normalized({nu[2], nu[1]}, {mu[2], mu[1] + mu[2]}, p);
  return parity_sign(n + mu[2]) < 0 ? -v : v;
}

QSqrtSum cc_3d_tau13(const MultiIndex& nu, const MultiIndex& mu, const Kappa& k, bool degree_from_mu) {
  const int n = nu.total();
  const Rational total = k[0] + k[1] + k[2] + k[3];
  const int top = n - nu[2];
  const Racah1DParams sigma{Rational(nu[2] - n - 1), Rational(n + nu[2] + 2) + total - k[2],
                            k[0] + k[3] + Rational(2 * nu[2] + 1), k[2], top};
  const RacahParams beta{{k[0], k[0] + k[3] + 1, k[0] + k[2] + k[3] + 2, total + 3}, n};
  const int degree = degree_from_mu ? mu[1] : nu[1];
  QSqrtSum sum;
  for (int l = 0; l <= top; ++l) {
    QSqrt a = racah_weighted_normalized_1d(degree, l, sigma);
    QSqrt b = racah_weighted_normalized({mu[2], mu[1]}, {nu[2], l + nu[2]}, beta);
    QSqrt term = a * b;
    sum.add(parity_sign(l) < 0 ? -term : term);
  }
  return parity_sign(nu[1]) < 0 ? -sum : sum;
}

namespace {

ClosedValue tetra_primary(const std::string& t, const MultiIndex& nu, const MultiIndex& mu, const Kappa& k);

ClosedValue tetra_entry(const Permutation& tau, const MultiIndex& nu, const MultiIndex& mu, const Kappa& k) {
  static const std::vector<std::string> primary{"(1)",  "(12)", "(13)",  "(14)",  "(23)",      "(24)",
                                                "(123)", "(124)", "(132)", "(142)", "(13)(24)", "(14)(23)"};
  const std::string t = tau.str();
  for (const auto& p : primary)
    if (p == t) return tetra_primary(t, nu, mu, k);
  // tau = sigma (34) with sigma primary: P^{tau kappa}(tau x) = (-1)^{nu_3} P^{sigma kappa}(sigma x).
  const Permutation sigma = tau * named("(34)", 4);
  return scaled(tetra_primary(sigma.str(), nu, mu, k), parity_sign(nu[2]), "(34)-sign of " + sigma.str());
}

ClosedValue tetra_primary(const std::string& t, const MultiIndex& nu, const MultiIndex& mu, const Kappa& k) {
  const int n = nu.total();
  const Kappa k34{k[0], k[1], k[3], k[2]};
  const int swap_sign = parity_sign(nu[2] + mu[2]);
  if (t == "(1)") return raw_value(Rational(nu == mu ? 1 : 0), "identity");
  if (t == "(12)") {
    if (nu[2] != mu[2]) return zero_value("(12) in 3d");
    const Kappa hat{k[0], k[1], k[2] + k[3] + Rational(2 * nu[2] + 1)};
    return raw_value(cc_2d_tau12(n - nu[2], nu[1], mu[1], hat), "(12) in 3d");
  }
  if (t == "(23)") {
    if (nu[0] != mu[0]) return zero_value("(23) in 3d");
    return raw_value(cc_2d_tau12(n - nu[0], nu[2], mu[2], {k[1], k[2], k[3]}), "(23) in 3d");
  }
  if (t == "(24)") return scaled(tetra_primary("(23)", nu, mu, k34), swap_sign, "(34)-conjugate");
  if (t == "(123)") return hat_value(cc_3d_tau123(nu, mu, k), "(123) two-variable Racah");
  if (t == "(132)") return hat_value(cc_3d_tau132(nu, mu, k), "(132) two-variable Racah");
  if (t == "(124)") return scaled(tetra_primary("(123)", nu, mu, k34), swap_sign, "(34)-conjugate");
  if (t == "(142)") return scaled(tetra_primary("(132)", nu, mu, k34), swap_sign, "(34)-conjugate");
  if (t == "(13)") return hat_value(cc_3d_tau13(nu, mu, k), "(13) Racah sum");
  if (t == "(14)") return scaled(tetra_primary("(13)", nu, mu, k34), swap_sign, "(34)-conjugate");
  if (t == "(13)(24)") {
    // (13)(24) = (13) o (24): sum over omega of c-hat^{(24)}((13)kappa) c-hat^{(13)}(kappa)
    const Permutation t13 = named("(13)", 4), t24 = named("(24)", 4);
    const Kappa k13 = act(t13, k);
    const Kappa k_after = act(t24, k13);
    QSqrtSum sum;
    for (const auto& omega : enumerate_basis(n, 3)) {
      if (omega[0] != nu[0]) continue;  // (24) keeps nu_1
      ClosedValue left = tetra_primary("(24)", nu, omega, k13);
      if (left.is_raw() && left.raw().is_zero()) continue;
      QSqrtSum a = to_normalized(left, nu, omega, k13, k_after);
      sum += a * cc_3d_tau13(omega, mu, k);
    }
    return hat_value(sum, "(13)(24) as (13) o (24)");
  }
  if (t == "(14)(23)") return scaled(tetra_primary("(13)(24)", nu, mu, k34), swap_sign, "(34)-conjugate");
  throw std::logic_error("not a primary tetrahedral permutation: " + t);
}

}  // namespace

ClosedValue cc_3d(const Permutation& tau, const MultiIndex& nu, const MultiIndex& mu, const Kappa& kappa) {
  check_entry(tau, nu, mu, kappa);
  if (nu.size() != 3) throw DimensionMismatch("cc_3d needs three variables");
  return tetra_entry(tau, nu, mu, kappa);
}

// ---- any dimension ----

QSqrt cc_cyclic(const MultiIndex& nu, const MultiIndex& mu, const Kappa& k, int form) {
  const std::size_t d = nu.size();
  if (d < 2 || mu.size() != d || k.size() != d + 1) throw DimensionMismatch("cyclic formula sizes");
  const int n = nu.total();
  const int sign = parity_sign(n + nu[d - 1]);
  QSqrt v;
  if (form == 1) {
    MultiIndex x(d - 1), deg(d - 1);
    for (std::size_t i = 0; i + 1 < d; ++i) {
      x[i] = nu.suffix(d - i);
      deg[i] = mu[d - 1 - i];
    }
    RacahParams p{{}, n};
    for (std::size_t j = 0; j <= d; ++j) p.beta.push_back(k[0] + suffix_sum(k, d + 2 - j) + Rational(static_cast<long>(j)));
    v = racah_weighted_normalized(deg, x, p);
  } else if (form == 2) {
    MultiIndex x(d - 1), deg(d - 1);
    for (std::size_t i = 0; i + 1 < d; ++i) {
      x[i] = mu.prefix(i + 1);
      deg[i] = nu[i];
    }
    RacahParams p{{k[0]}, n};
    for (std::size_t j = 1; j <= d; ++j)
      p.beta.push_back(-suffix_sum(k, j + 1) - Rational(2 * n) - Rational(static_cast<long>(d)) + Rational(static_cast<long>(j)));
    v = racah_weighted_normalized(deg, x, p);
  } else if (form == 3) {
    MultiIndex x(d - 1), deg(d - 1);
    for (std::size_t i = 0; i + 1 < d; ++i) {
      x[i] = mu.suffix(d - i);
      deg[i] = nu[d - 2 - i];
    }
    RacahParams p{{}, n};
    for (std::size_t j = 0; j + 1 <= d; ++j) p.beta.push_back(suffix_sum(k, d + 1 - j) + Rational(static_cast<long>(j)));
    p.beta.push_back(Rational(-2 * n) - k[0]);
    v = racah_prime_weighted_normalized(deg, x, p);
  } else {
    throw std::invalid_argument("cyclic form must be 1, 2 or 3");
  }
  return sign < 0 ? -v : v;
}

QSqrt cc_adjacent(std::size_t j, const MultiIndex& nu, const MultiIndex& mu, const Kappa& k) {
  const std::size_t d = nu.size();
  if (j < 1 || j > d) throw std::invalid_argument("adjacent transposition index out of range");
  if (j == d) return nu == mu ? QSqrt(parity_sign(nu[d - 1]), Rational(1)) : QSqrt();
  if (!same_slice(nu, mu, 0, j - 1) || !same_slice(nu, mu, j + 1, d)) return QSqrt();
  const int a = nu[j - 1], b = nu[j];
  const long dl = static_cast<long>(d), jl = static_cast<long>(j);
  Racah1DParams s{Rational(-a - b - 1),
                  suffix_sum(k, j + 1) + Rational(nu.suffix(j) + nu.suffix(j + 2)) + Rational(dl - jl),
                  suffix_sum(k, j + 2) + Rational(2 * nu.suffix(j + 2)) + Rational(dl - jl - 1), k[j - 1], a + b};
  QSqrt v = racah_weighted_normalized_1d(mu[j], b, s);
  return parity_sign(mu[j - 1] + nu[j]) < 0 ? -v : v;
}

ClosedValue cc_fix_first(const Permutation& tau, const MultiIndex& nu, const MultiIndex& mu, const Kappa& kappa) {
  check_entry(tau, nu, mu, kappa);
  const std::size_t d = nu.size();
  const std::size_t j = tau.fixed_prefix();
  if (j < 1 || j >= d) throw std::invalid_argument("fix-first reduction needs tau fixing 1..j with j < d");
  const std::string note = "fix-first " + std::to_string(j);
  if (!same_slice(nu, mu, 0, j)) return zero_value(note);
  Kappa sub(kappa.begin() + static_cast<long>(j), kappa.end());
  ClosedValue v = closed_entry(sub_first(tau, j), slice(nu, j, d), slice(mu, j, d), sub);
  return scaled(std::move(v), 1, note);
}

ClosedValue cc_fix_last(const Permutation& tau, const MultiIndex& nu, const MultiIndex& mu, const Kappa& kappa) {
  check_entry(tau, nu, mu, kappa);
  const std::size_t d = nu.size();
  const std::size_t k = d + 1 - tau.fixed_suffix();
  if (k >= d || k < 2) throw std::invalid_argument("fix-last reduction needs tau in S_k with 2 <= k < d");
  const std::string note = "fix-last " + std::to_string(k);
  if (!same_slice(nu, mu, k, d)) return zero_value(note);
  Kappa hat(kappa.begin(), kappa.begin() + static_cast<long>(k));
  hat.push_back(suffix_sum(kappa, k + 1) + Rational(2 * nu.suffix(k + 1)) + Rational(static_cast<long>(d - k)));
  ClosedValue v = closed_entry(sub_last(tau, k), slice(nu, 0, k), slice(mu, 0, k), hat);
  return scaled(std::move(v), 1, note);
}

bool has_closed_form(const Permutation& tau) { return route(tau) != Route::None; }

ClosedValue closed_entry(const Permutation& tau, const MultiIndex& nu, const MultiIndex& mu, const Kappa& kappa) {
  check_entry(tau, nu, mu, kappa);
  const std::size_t d = nu.size();
  const std::size_t m = d + 1;
  switch (route(tau)) {
    case Route::Identity:
      return raw_value(Rational(nu == mu ? 1 : 0), "identity");
    case Route::Line:
      return raw_value(Rational(nu == mu ? parity_sign(nu[0]) : 0), "reflection of the interval");
    case Route::Triangle:
      return raw_value(cc_2d(tau, nu.total(), nu[1], mu[1], kappa), "triangle " + tau.str());
    case Route::Tetrahedron:
      return cc_3d(tau, nu, mu, kappa);
    case Route::FixFirst:
      return cc_fix_first(tau, nu, mu, kappa);
    case Route::FixLast:
      return cc_fix_last(tau, nu, mu, kappa);
    case Route::Cyclic:
      return hat_value(QSqrtSum(cc_cyclic(nu, mu, kappa, 1)), "cyclic Racah form");
    case Route::TailSwap: {
      const Permutation sigma = tau * transposition(d - 1, d, m);
      return scaled(closed_entry(sigma, nu, mu, kappa), parity_sign(nu[d - 1]), "tail-swap sign");
    }
    case Route::TailConjugate: {
      const Permutation t = transposition(d - 1, d, m);
      const Permutation sigma = t * tau * t;
      return scaled(closed_entry(sigma, nu, mu, act(t, kappa)), parity_sign(nu[d - 1] + mu[d - 1]),
                    "tail conjugate");
    }
    case Route::Convolution: {
      const Split& sp = plan(tau).split;
      const Permutation t = transposition(sp.j - 1, sp.j, m);
      QSqrtSum sum;
      const MultiIndex& anchor = sp.on_rows ? nu : mu;
      for (const auto& omega : enumerate_basis(nu.total(), d)) {
        bool reachable = true;
        for (std::size_t i = 0; i < d; ++i)
          if (i + 1 != sp.j && i != sp.j && omega[i] != anchor[i]) reachable = false;
        if (sp.j == d && omega != anchor) reachable = false;
        if (!reachable) continue;
        if (sp.on_rows) {
          // tau = rest * t
          const Kappa rk = act(sp.rest, kappa);
          QSqrt a = cc_adjacent(sp.j, nu, omega, rk);
          if (a.is_zero()) continue;
          sum += QSqrtSum(a) * to_normalized(closed_entry(sp.rest, omega, mu, kappa), omega, mu, kappa, rk);
        } else {
          // tau = t * rest
          const Kappa tk = act(t, kappa);
          QSqrt b = cc_adjacent(sp.j, omega, mu, kappa);
          if (b.is_zero()) continue;
          sum += to_normalized(closed_entry(sp.rest, nu, omega, tk), nu, omega, tk, act(sp.rest, tk)) * QSqrtSum(b);
        }
      }
      return hat_value(sum, "product with (" + std::to_string(sp.j) + "," + std::to_string(sp.j + 1) + ")");
    }
    case Route::None:
      break;
  }
  throw std::runtime_error("no closed form for " + tau.str() + " in dimension " + std::to_string(d));
}

ClosedMatrix closed_connection(const Permutation& tau, const Kappa& kappa, int n) {
  ClosedMatrix out;
  out.tau = tau;
  out.kappa = kappa;
  out.n = n;
  out.order = enumerate_basis(n, kappa.size() - 1);
  if (!has_closed_form(tau)) {
    out.fallback = true;
    out.note = "no closed form for " + tau.str() + "; entries come from the Gram oracle";
    ConnMatrix g = gram_connection(tau, kappa, n);
    for (auto& row : g.entries) {
      std::vector<ClosedValue> r;
      for (auto& c : row) r.push_back(raw_value(c, "gram fallback"));
      out.values.push_back(std::move(r));
    }
    return out;
  }
  if (route(tau) == Route::Convolution) {
    // Whole-matrix product; the adjacent factor is sparse.
    const Split sp = plan(tau).split;
    const std::size_t m = tau.size();
    const Kappa inner_kappa = sp.on_rows ? kappa : act(transposition(sp.j - 1, sp.j, m), kappa);
    const ClosedMatrix inner = closed_connection(sp.rest, inner_kappa, n);
    const Kappa inner_tk = act(sp.rest, inner_kappa);
    const std::size_t size = out.order.size();
    std::vector<std::vector<QSqrtSum>> hat(size, std::vector<QSqrtSum>(size));
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = 0; b < size; ++b)
        hat[a][b] = to_normalized(inner.values[a][b], out.order[a], out.order[b], inner_kappa, inner_tk);
    const std::string source = "product with (" + std::to_string(sp.j) + "," + std::to_string(sp.j + 1) + ")";
    for (std::size_t a = 0; a < size; ++a) {
      std::vector<ClosedValue> row;
      for (std::size_t b = 0; b < size; ++b) {
        QSqrtSum sum;
        for (std::size_t w = 0; w < size; ++w) {
          if (sp.on_rows) {
            QSqrt f = cc_adjacent(sp.j, out.order[a], out.order[w], inner_tk);
            if (!f.is_zero()) sum += QSqrtSum(f) * hat[w][b];
          } else {
            QSqrt f = cc_adjacent(sp.j, out.order[w], out.order[b], kappa);
            if (!f.is_zero()) sum += hat[a][w] * QSqrtSum(f);
          }
        }
        row.push_back(hat_value(sum, source));
      }
      out.values.push_back(std::move(row));
    }
    return out;
  }
  for (const auto& nu : out.order) {
    std::vector<ClosedValue> row;
    for (const auto& mu : out.order) row.push_back(closed_entry(tau, nu, mu, kappa));
    out.values.push_back(std::move(row));
  }
  return out;
}

ConnMatrix to_conn_matrix(const ClosedMatrix& m) {
  ConnMatrix c;
  c.d = m.kappa.size() - 1;
  c.n = m.n;
  c.kappa = m.kappa;
  c.tau = m.tau;
  c.order = m.order;
  const Kappa tk = act(m.tau, m.kappa);
  for (std::size_t i = 0; i < m.order.size(); ++i) {
    std::vector<Rational> row;
    for (std::size_t j = 0; j < m.order.size(); ++j)
      row.push_back(to_raw(m.values[i][j], m.order[i], m.order[j], m.kappa, tk));
    c.entries.push_back(std::move(row));
  }
  return c;
}

VerificationReport compare_with_gram(const ClosedMatrix& closed, const ConnMatrix& gram) {
  VerificationReport rep;
  const Kappa tk = act(closed.tau, closed.kappa);
  std::size_t raw_bad = 0, hat_bad = 0, raw_count = 0, hat_count = 0;
  std::string first_bad;
  for (std::size_t i = 0; i < closed.order.size(); ++i)
    for (std::size_t j = 0; j < closed.order.size(); ++j) {
      const ClosedValue& v = closed.values[i][j];
      const Rational& g = gram.entries[i][j];
      bool ok;
      if (v.is_raw()) {
        ++raw_count;
        ok = v.raw() == g;
        raw_bad += ok ? 0 : 1;
      } else {
        ++hat_count;
        ok = v.hat() == QSqrtSum(normalize_entry(g, closed.order[i], closed.order[j], closed.kappa, tk));
        hat_bad += ok ? 0 : 1;
      }
      if (!ok && first_bad.empty())
        first_bad = closed.order[i].str() + "," + closed.order[j].str() + " via " + v.source;
    }
  const std::string tag = "closed vs gram tau=" + closed.tau.str() + " n=" + std::to_string(closed.n);
  rep.add(tag, raw_bad == 0 && hat_bad == 0,
          std::to_string(raw_count) + " raw, " + std::to_string(hat_count) + " normalized" +
              (first_bad.empty() ? "" : "; first mismatch " + first_bad));
  return rep;
}

}  // namespace orthopoly

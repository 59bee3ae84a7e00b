// orthopoly: bases, connection matrices and verification suites from the
// command line. Exit status: 0 success, 1 verification failure, 2 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "orthopoly/ball_sphere.hpp"
#include "orthopoly/closed_forms.hpp"
#include "orthopoly/discrete_families.hpp"
#include "orthopoly/errors.hpp"
#include "orthopoly/racah.hpp"
#include "orthopoly/suites.hpp"
#include "output.hpp"

using namespace orthopoly;
using namespace orthopoly::cli;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Params {
  // global
  std::string out_dir;
  std::string format = "json";
  std::uint64_t seed = 1;
  // shared by the subcommands
  std::string family = "simplex";
  std::string verb;
  int d = -1;
  int n = 1;
  int N = -1;
  std::string kappa, rho, beta, nu, x;
  std::string tau = "(1)";
  std::string method = "gram";
  std::string suite;
  bool normalized = false;
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

std::vector<Rational> rationals(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& t : split(s)) out.push_back(Rational::parse(t));
  return out;
}

MultiIndex ints(const std::string& s, std::size_t size, const char* what) {
  std::vector<int> v;
  for (const auto& t : split(s)) v.push_back(std::stoi(t));
  if (v.size() != size) throw UsageError(std::string(what) + " needs " + std::to_string(size) + " entries");
  for (int e : v)
    if (e < 0) throw UsageError(std::string(what) + " entries must be nonnegative");
  return MultiIndex(v);
}

// kappa with d+1 entries; sampled from the seed when not given.
Kappa kappa_of(Params& p) {
  if (p.kappa.empty()) {
    if (p.d < 1) throw UsageError("give --kappa or --d");
    return Sampler(p.seed).kappa(static_cast<std::size_t>(p.d));
  }
  Kappa k = rationals(p.kappa);
  if (p.d < 0) p.d = static_cast<int>(k.size()) - 1;
  if (p.d < 1 || k.size() != static_cast<std::size_t>(p.d) + 1) throw UsageError("--kappa needs d+1 entries");
  for (const auto& v : k)
    if (v <= Rational(-1)) throw UsageError("kappa entries must exceed -1");
  return k;
}

std::vector<Rational> rho_of(Params& p) {
  if (p.rho.empty()) throw UsageError("give --rho");
  auto r = rationals(p.rho);
  if (p.d < 0) p.d = static_cast<int>(r.size());
  if (r.size() != static_cast<std::size_t>(p.d)) throw UsageError("--rho needs d entries");
  try {
    validate(KrawContext{r, 0});
  } catch (const InvalidParameter& e) {
    throw UsageError(e.what());
  }
  return r;
}

Permutation tau_of(const Params& p, std::size_t symbols) { return Permutation::parse(p.tau, symbols); }

int lattice_size(const Params& p) {
  const int N = p.N < 0 ? p.n : p.N;
  if (N < 0) throw UsageError("--N must be nonnegative");
  return N;
}

std::vector<MultiIndex> degrees_up_to(int n, std::size_t d) {
  std::vector<MultiIndex> out;
  for (int m = 0; m <= n; ++m)
    for (const auto& nu : enumerate_basis(m, d)) out.push_back(nu);
  return out;
}

json order_json(const std::vector<MultiIndex>& order) {
  json a = json::array();
  for (const auto& m : order) a.push_back(to_json(m));
  return a;
}

int emit(const Params& p, const std::string& name, const json& doc) {
  const std::string text = p.format == "csv" ? to_csv(doc) : doc.dump(2) + "\n";
  std::cout << text;
  if (!p.out_dir.empty()) {
    std::filesystem::create_directories(p.out_dir);
    std::ofstream(std::filesystem::path(p.out_dir) / (name + "." + p.format)) << text;
  }
  return 0;
}

// Mismatch report for --method both; returns the exit status.
int report_diff(const Params& p, const std::string& name, const VerificationReport& rep) {
  if (rep.ok()) return 0;
  const std::string text = to_json(rep).dump(2) + "\n";
  if (!p.out_dir.empty()) {
    std::filesystem::create_directories(p.out_dir);
    std::ofstream(std::filesystem::path(p.out_dir) / (name + "_diff.json")) << text;
  } else {
    std::cerr << text;
  }
  return 1;
}

int emit_report(const Params& p, const std::string& name, json head, const VerificationReport& rep) {
  head.update(to_json(rep));
  emit(p, name, head);
  return rep.ok() ? 0 : 1;
}

json entries_json(const std::vector<std::vector<Rational>>& raw, const std::vector<std::vector<QSqrt>>& hat,
                  bool normalized) {
  return normalized ? matrix_json(hat) : matrix_json(raw);
}

// ---- simplex ----

int simplex_basis_cmd(Params& p) {
  const Kappa k = kappa_of(p);
  const auto tau = tau_of(p, k.size());
  const Kappa tk = act(tau, k);
  json basis = json::array();
  for (const auto& nu : enumerate_basis(p.n, k.size() - 1)) {
    SparsePoly poly = simplex_basis(nu, tk);
    if (!tau.is_identity()) poly = permute_vars(poly, tau);
    basis.push_back({{"nu", to_json(nu)}, {"poly", to_json(poly)}, {"norm", to_json(norm_A(nu, tk))}});
  }
  return emit(p, "basis", {{"family", "simplex"}, {"d", p.d}, {"n", p.n}, {"kappa", to_json(k)}, {"tau", tau.str()},
                           {"basis", basis}});
}

int connect_cmd(Params& p) {
  const Kappa k = kappa_of(p);
  const auto tau = tau_of(p, k.size());
  const Kappa tk = act(tau, k);
  json doc{{"family", "simplex"}, {"d", p.d}, {"n", p.n}, {"kappa", to_json(k)}, {"tau", tau.str()},
           {"method", p.method}, {"normalized", p.normalized}};
  const auto gram = gram_connection(tau, k, p.n);
  doc["order"] = order_json(gram.order);
  if (p.method == "gram") {
    doc["entries"] = entries_json(gram.entries, p.normalized ? normalized(gram) : std::vector<std::vector<QSqrt>>{},
                                  p.normalized);
    return emit(p, "connect", doc);
  }
  const auto closed = closed_connection(tau, k, p.n);
  if (closed.fallback) doc["note"] = "no closed form for " + tau.str() + "; entries come from gram";
  if (p.method == "closed") {
    if (p.normalized) {
      json rows = json::array();
      for (std::size_t i = 0; i < closed.order.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < closed.order.size(); ++j)
          row.push_back(hat_str(to_normalized(closed.values[i][j], closed.order[i], closed.order[j], k, tk)));
        rows.push_back(row);
      }
      doc["entries"] = rows;
    } else {
      doc["entries"] = matrix_json(to_conn_matrix(closed).entries);
    }
    return emit(p, "connect", doc);
  }
  const auto rep = closed.fallback ? VerificationReport{} : compare_with_gram(closed, gram);
  doc["agree"] = rep.ok();
  doc["entries"] = entries_json(gram.entries, p.normalized ? normalized(gram) : std::vector<std::vector<QSqrt>>{},
                                p.normalized);
  emit(p, "connect", doc);
  return report_diff(p, "connect", rep);
}

// ---- racah ----

int racah_cmd(Params& p) {
  if (p.beta.empty()) throw UsageError("give --beta b0,...,b_{d+1}");
  const auto beta = rationals(p.beta);
  if (p.d < 0) p.d = static_cast<int>(beta.size()) - 2;
  if (p.d < 1 || beta.size() != static_cast<std::size_t>(p.d) + 2) throw UsageError("--beta needs d+2 entries");
  const RacahParams rp{beta, lattice_size(p)};
  const std::size_t d = rp.dim();
  json doc{{"family", "racah"}, {"d", p.d}, {"N", rp.N}, {"beta", to_json(beta)}, {"verb", p.verb}};
  std::vector<MultiIndex> degs = p.nu.empty() ? degrees_up_to(rp.N, d) : std::vector<MultiIndex>{ints(p.nu, d, "--nu")};
  std::vector<MultiIndex> pts = p.x.empty() ? racah_lattice(d, rp.N) : std::vector<MultiIndex>{ints(p.x, d, "--x")};
  json rows = json::array();
  if (p.verb == "eval") {
    rows.push_back({"nu", "x", "value"});
    for (const auto& nu : degs)
      for (const auto& x : pts) rows.push_back({to_json(nu), to_json(x), to_json(racah_multi(nu, x, rp))});
  } else if (p.verb == "weight") {
    rows.push_back({"x", "weight"});
    for (const auto& x : pts) rows.push_back({to_json(x), to_json(racah_weight(x, rp))});
  } else if (p.verb == "norm") {
    rows.push_back({"nu", "norm", "lattice_sum"});
    for (const auto& nu : degs)
      rows.push_back({to_json(nu), to_json(racah_norm(nu, rp)), to_json(racah_norm_by_sum(nu, rp))});
  } else if (p.verb == "dual") {
    rows.push_back({"nu", "x", "dual_nu", "dual_x", "dual_beta"});
    for (const auto& nu : degs)
      for (const auto& x : pts) {
        const auto du = racah_dual({x, nu, rp});
        rows.push_back({to_json(nu), to_json(x), to_json(du.nu), to_json(du.x), to_json(du.params.beta)});
      }
  } else {
    return emit_report(p, "racah", doc, racah_params_suite(beta, rp.N));
  }
  doc["rows"] = rows;
  return emit(p, "racah", doc);
}

// ---- hahn ----

int hahn_cmd(Params& p) {
  const Kappa k = kappa_of(p);
  const std::size_t d = k.size() - 1;
  const int N = lattice_size(p);
  json doc{{"family", "hahn"}, {"d", p.d}, {"N", N}, {"kappa", to_json(k)}};
  if (p.verb == "basis") {
    const HahnContext ctx{k, N};
    const auto lattice = hahn_lattice(d, N);
    doc["lattice"] = order_json(lattice);
    json basis = json::array();
    for (const auto& nu : p.nu.empty() ? degrees_up_to(N, d) : std::vector<MultiIndex>{ints(p.nu, d, "--nu")}) {
      std::vector<Rational> v;
      for (const auto& a : lattice) v.push_back(hahn_multi(nu, a, ctx));
      basis.push_back({{"nu", to_json(nu)}, {"values", to_json(v)}, {"norm", to_json(hahn_norm_B(nu, ctx))}});
    }
    doc["basis"] = basis;
    return emit(p, "hahn", doc);
  }
  const auto tau = tau_of(p, k.size());
  if (p.verb == "connect") {
    const Kappa tk = act(tau, k);
    doc.update({{"n", p.n}, {"tau", tau.str()}, {"method", p.method}, {"normalized", p.normalized}});
    const auto gram = hahn_gram_connection(tau, k, p.n, N);
    doc["order"] = order_json(gram.order);
    const auto closed = hahn_connection(tau, k, p.n);
    const auto& raw = p.method == "closed" ? closed : gram.entries;
    std::vector<std::vector<QSqrt>> hat;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      hat.emplace_back();
      for (std::size_t j = 0; j < raw.size(); ++j)
        hat.back().push_back(hahn_normalize_entry(raw[i][j], gram.order[i], gram.order[j], k, tk, N));
    }
    doc["entries"] = entries_json(raw, hat, p.normalized);
    VerificationReport rep;
    if (p.method == "both") {
      rep.add("hahn gram at N=" + std::to_string(N) + " equals the simplex relation", gram.entries == closed);
      doc["agree"] = rep.ok();
    }
    emit(p, "hahn", doc);
    return report_diff(p, "hahn", rep);
  }
  VerificationReport rep = hahn_params_suite(k, N);
  for (const auto& t : all_permutations(d + 1)) {
    const int n = std::max(1, p.n);
    rep.merge(verify_hahn_connection(t, k, n, {std::max(n, N), std::max(n, N) + 1, std::max(n, N) + 2}));
  }
  return emit_report(p, "hahn", doc, rep);
}

// ---- krawtchouk ----

int kraw_cmd(Params& p) {
  const auto rho = rho_of(p);
  const std::size_t d = rho.size();
  const int N = lattice_size(p);
  json doc{{"family", "kraw"}, {"d", p.d}, {"N", N}, {"rho", to_json(rho)}};
  if (p.verb == "basis") {
    const KrawContext ctx{rho, N};
    const auto lattice = kraw_lattice(d, N);
    doc["lattice"] = order_json(lattice);
    json basis = json::array();
    for (const auto& nu : p.nu.empty() ? degrees_up_to(N, d) : std::vector<MultiIndex>{ints(p.nu, d, "--nu")}) {
      std::vector<Rational> v;
      for (const auto& x : lattice) v.push_back(krawtchouk_multi(nu, x, ctx));
      basis.push_back({{"nu", to_json(nu)}, {"values", to_json(v)}, {"norm", to_json(krawtchouk_norm_C(nu, ctx))}});
    }
    doc["basis"] = basis;
    return emit(p, "kraw", doc);
  }
  const auto tau = tau_of(p, d + 1);
  const bool cyclic = tau == cycle_prefix(d, d + 1);
  if (p.verb == "connect") {
    if (p.method != "gram" && !cyclic) throw UsageError("krawtchouk closed form exists for (1 2 ... d) only");
    doc.update({{"n", p.n}, {"tau", tau.str()}, {"method", p.method}, {"normalized", p.normalized || p.method != "gram"}});
    const auto trho = kraw_act(tau, rho);
    const auto gram = kraw_gram_connection(tau, rho, p.n, N);
    doc["order"] = order_json(gram.order);
    std::vector<std::vector<QSqrt>> hat, closed;
    VerificationReport rep;
    std::size_t bad = 0;
    for (std::size_t i = 0; i < gram.order.size(); ++i) {
      hat.emplace_back();
      closed.emplace_back();
      for (std::size_t j = 0; j < gram.order.size(); ++j) {
        hat.back().push_back(kraw_normalize_entry(gram.entries[i][j], gram.order[i], gram.order[j], rho, trho, N));
        if (cyclic) {
          closed.back().push_back(kraw_cc_cyclic(gram.order[i], gram.order[j], rho, 1));
          if (!(closed.back().back() == hat.back().back())) ++bad;
        }
      }
    }
    if (p.method == "gram") doc["entries"] = entries_json(gram.entries, hat, p.normalized);
    else doc["entries"] = matrix_json(p.method == "closed" ? closed : hat);
    if (p.method == "both") {
      rep.add("cyclic krawtchouk equals the discrete gram matrix", bad == 0, std::to_string(bad) + " entries differ");
      doc["agree"] = rep.ok();
    }
    emit(p, "kraw", doc);
    return report_diff(p, "kraw", rep);
  }
  VerificationReport rep = kraw_params_suite(rho, N);
  if (d >= 2) {
    const auto cyc = cycle_prefix(d, d + 1);
    const auto trho = kraw_act(cyc, rho);
    const auto g = kraw_gram_connection(cyc, rho, p.n, std::max(N, p.n));
    std::size_t bad = 0;
    for (std::size_t i = 0; i < g.order.size(); ++i)
      for (std::size_t j = 0; j < g.order.size(); ++j)
        if (!(kraw_cc_cyclic(g.order[i], g.order[j], rho, 1) ==
              kraw_normalize_entry(g.entries[i][j], g.order[i], g.order[j], rho, trho, std::max(N, p.n))))
          ++bad;
    rep.add("cyclic krawtchouk equals the discrete gram matrix, n=" + std::to_string(p.n), bad == 0);
  }
  return emit_report(p, "kraw", doc, rep);
}

// ---- ball and sphere ----

int ball_cmd(Params& p) {
  const Kappa k = kappa_of(p);
  const std::size_t d = k.size() - 1;
  json doc{{"family", "ball"}, {"d", p.d}, {"n", p.n}, {"kappa", to_json(k)}};
  if (p.verb == "basis") {
    json basis = json::array();
    for (const auto& alpha : compositions(d, p.n)) {
      const auto pp = ball_basis(alpha, k);
      basis.push_back({{"alpha", to_json(alpha)}, {"eps", to_json(pp.eps)}, {"core", to_json(pp.core)},
                       {"poly", to_json(expand_ball(pp))}});
    }
    doc["basis"] = basis;
    return emit(p, "ball", doc);
  }
  if (p.verb == "verify") return emit_report(p, "ball", doc, ball_params_suite(k, p.n));
  const auto tau = tau_of(p, d + 1);
  if (tau(static_cast<int>(d)) != static_cast<int>(d)) throw UsageError("ball: tau must fix the last symbol");
  doc.update({{"tau", tau.str()}, {"method", p.method}, {"normalized", p.normalized || p.method != "gram"}});
  const auto gram = ball_gram_connection(tau, k, p.n);
  doc["order"] = order_json(gram.order);
  std::vector<std::vector<QSqrt>> closed;
  std::size_t bad = 0;
  for (std::size_t i = 0; i < gram.order.size(); ++i) {
    closed.emplace_back();
    for (std::size_t j = 0; j < gram.order.size(); ++j) {
      if (p.method == "gram") continue;
      closed.back().push_back(ball_connection(tau, gram.order[i], gram.order[j], k));
      if (!(closed.back().back() == gram.normalized[i][j])) ++bad;
    }
  }
  VerificationReport rep;
  if (p.method == "gram") doc["entries"] = entries_json(gram.entries, gram.normalized, p.normalized);
  else doc["entries"] = matrix_json(p.method == "closed" ? closed : gram.normalized);
  if (p.method == "both") {
    rep.add("ball block rule equals the ball gram matrix", bad == 0, std::to_string(bad) + " entries differ");
    doc["agree"] = rep.ok();
  }
  emit(p, "ball", doc);
  return report_diff(p, "ball", rep);
}

int sphere_cmd(Params& p) {
  const Kappa k = kappa_of(p);
  const std::size_t d = k.size() - 1;
  json doc{{"family", "sphere"}, {"d", p.d}, {"n", p.n}, {"kappa", to_json(k)}};
  auto label = [](const std::pair<MultiIndex, MultiIndex>& c) {
    return json{{"nu", to_json(c.first)}, {"eps", to_json(c.second)}};
  };
  if (p.verb == "basis") {
    json basis = json::array();
    for (const auto& c : sphere_parity_classes(p.n, d)) {
      json b = label(c);
      b["poly"] = to_json(expand_sphere(sphere_basis(c.first, c.second, k, p.n)));
      basis.push_back(b);
    }
    doc["basis"] = basis;
    return emit(p, "sphere", doc);
  }
  if (p.verb == "verify") {
    VerificationReport rep = sphere_params_suite(k, p.n);
    for (const auto& t : all_permutations(d + 1)) rep.merge(verify_sphere_blocks(t, k, p.n));
    return emit_report(p, "sphere", doc, rep);
  }
  const auto tau = tau_of(p, d + 1);
  doc.update({{"tau", tau.str()}, {"method", p.method}, {"normalized", p.normalized || p.method != "gram"}});
  const auto gram = sphere_gram_connection(tau, k, p.n);
  json order = json::array();
  for (const auto& c : gram.order) order.push_back(label(c));
  doc["order"] = order;
  std::vector<std::vector<QSqrt>> closed;
  std::size_t bad = 0;
  for (std::size_t i = 0; i < gram.order.size(); ++i) {
    closed.emplace_back();
    for (std::size_t j = 0; j < gram.order.size(); ++j) {
      if (p.method == "gram") continue;
      closed.back().push_back(sphere_connection(tau, gram.order[i], gram.order[j], k));
      if (!(closed.back().back() == gram.normalized[i][j])) ++bad;
    }
  }
  VerificationReport rep;
  if (p.method == "gram") doc["entries"] = entries_json(gram.entries, gram.normalized, p.normalized);
  else doc["entries"] = matrix_json(p.method == "closed" ? closed : gram.normalized);
  if (p.method == "both") {
    rep.add("sphere block rule equals the sphere gram matrix", bad == 0, std::to_string(bad) + " entries differ");
    doc["agree"] = rep.ok();
  }
  emit(p, "sphere", doc);
  return report_diff(p, "sphere", rep);
}

int basis_cmd(Params& p) {
  p.verb = "basis";
  if (p.family == "simplex") return simplex_basis_cmd(p);
  if (p.family == "hahn") return hahn_cmd(p);
  if (p.family == "kraw") return kraw_cmd(p);
  if (p.family == "ball") return ball_cmd(p);
  if (p.family == "sphere") return sphere_cmd(p);
  throw UsageError("basis --family racah: use the racah subcommand");
}

// ---- verify ----

int verify_cmd(Params& p) {
  const std::string& s = p.suite;
  json doc{{"suite", s}, {"seed", p.seed}};
  VerificationReport rep;
  if (s == "harmonics" || s == "example-9-10") {
    doc["n"] = p.n;
    rep = harmonics_suite(p.n);
  } else if (s == "dimensions") {
    const int d = p.d < 1 ? 6 : p.d;
    rep = dimension_suite(static_cast<std::size_t>(d), p.n);
  } else if (s == "racah") {
    const std::size_t d = static_cast<std::size_t>(p.d < 1 ? 2 : p.d);
    rep = p.beta.empty() ? racah_suite({d}, lattice_size(p), 100, p.seed) : racah_params_suite(rationals(p.beta), lattice_size(p));
  } else if (s == "kraw") {
    const auto rho = rho_of(p);
    rep = kraw_params_suite(rho, lattice_size(p));
  } else {
    const Kappa k = kappa_of(p);
    const std::size_t d = k.size() - 1;
    doc.update({{"d", p.d}, {"n", p.n}, {"kappa", to_json(k)}});
    if (s == "orthogonality") {
      rep = orthogonality_suite(k, p.n);
    } else if (s == "closed-vs-gram") {
      std::vector<Permutation> taus;
      if (p.tau == "(1)") taus = all_permutations(d + 1);
      else taus.push_back(tau_of(p, d + 1));
      rep = closed_vs_gram_suite(taus, {k}, p.n);
    } else if (s == "cyclic") {
      rep = cyclic_suite(d, {k}, p.n);
    } else if (s == "structural") {
      std::vector<ConnMatrix> mats;
      for (const auto& t : all_permutations(d + 1)) mats.push_back(gram_connection(t, k, p.n));
      rep = structural_suite(mats, 20, p.seed);
    } else if (s == "sum-identity") {
      if (d != 2) throw UsageError("sum-identity needs d = 2");
      rep = sum_identity_suite({k}, p.n);
    } else if (s == "hahn") {
      rep = hahn_params_suite(k, lattice_size(p));
    } else if (s == "ball") {
      rep = ball_params_suite(k, p.n);
    } else if (s == "sphere") {
      rep = sphere_params_suite(k, p.n);
    } else {
      throw UsageError("unknown suite " + s);
    }
  }
  return emit_report(p, "verify", doc, rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact multivariate orthogonal polynomials: bases, connection coefficients, verification"};
  app.require_subcommand(1);
  app.fallthrough();
  Params p;
  app.add_option("--out", p.out_dir, "Directory for artifact files");
  app.add_option("--format", p.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", p.seed, "Seed for sampled parameters");

  const std::vector<std::string> methods{"gram", "closed", "both"};
  auto common = [&](CLI::App* c) {
    c->add_option("--d", p.d, "Dimension");
    c->add_option("--n", p.n, "Degree");
    c->add_option("--kappa", p.kappa, "kappa_1,...,kappa_{d+1} as p/q");
    c->add_option("--tau", p.tau, "Permutation in cycle notation, e.g. (12)(34)");
  };
  auto connect_opts = [&](CLI::App* c) {
    c->add_option("--method", p.method)->check(CLI::IsMember(methods));
    c->add_flag("--normalized", p.normalized, "Entries of the orthonormal bases as signed roots");
  };

  auto* basis = app.add_subcommand("basis", "Basis polynomials of degree n");
  common(basis);
  basis->add_option("--family", p.family)->check(CLI::IsMember({"simplex", "hahn", "kraw", "ball", "sphere"}));
  basis->add_option("--N", p.N, "Lattice size (hahn, kraw)");
  basis->add_option("--rho", p.rho, "rho_1,...,rho_d (kraw)");

  auto* connect = app.add_subcommand("connect", "Connection matrix of the simplex bases");
  common(connect);
  connect_opts(connect);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  common(verify);
  verify->add_option("--suite", p.suite)
      ->required()
      ->check(CLI::IsMember({"orthogonality", "closed-vs-gram", "cyclic", "structural", "racah", "sum-identity", "hahn",
                             "kraw", "ball", "sphere", "harmonics", "example-9-10", "dimensions"}));
  verify->add_option("--N", p.N);
  verify->add_option("--rho", p.rho);
  verify->add_option("--beta", p.beta);

  auto* racah = app.add_subcommand("racah", "Racah polynomials on 0 <= x_1 <= ... <= x_d <= N");
  racah->add_option("--d", p.d);
  racah->add_option("--N", p.N)->required();
  racah->add_option("--beta", p.beta, "beta_0,...,beta_{d+1}")->required();
  racah->add_option("--nu", p.nu, "Degree, comma separated");
  racah->add_option("--x", p.x, "Lattice point, comma separated");
  racah->add_option("verb", p.verb)->required()->check(CLI::IsMember({"eval", "weight", "norm", "dual", "verify"}));

  std::vector<CLI::App*> families;
  for (const char* name : {"hahn", "kraw", "ball", "sphere"}) {
    auto* c = app.add_subcommand(name, std::string(name) + " bases, connection matrices and checks");
    common(c);
    connect_opts(c);
    c->add_option("verb", p.verb)->required()->check(CLI::IsMember({"basis", "connect", "verify"}));
    if (std::string(name) == "hahn" || std::string(name) == "kraw") {
      c->add_option("--N", p.N, "Lattice size (default n)");
      c->add_option("--nu", p.nu);
    }
    if (std::string(name) == "kraw") c->add_option("--rho", p.rho, "rho_1,...,rho_d")->required();
    families.push_back(c);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*basis) return basis_cmd(p);
    if (*connect) return connect_cmd(p);
    if (*verify) return verify_cmd(p);
    if (*racah) return racah_cmd(p);
    if (*families[0]) return hahn_cmd(p);
    if (*families[1]) return kraw_cmd(p);
    if (*families[2]) return ball_cmd(p);
    if (*families[3]) return sphere_cmd(p);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

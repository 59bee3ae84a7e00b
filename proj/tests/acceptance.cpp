// One PASS/FAIL line per acceptance criterion. Every identity is checked in
// exact arithmetic (zero tolerance); the only tolerances are the wall-clock
// budgets below and the ratio window of the limit test, both pinned here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "orthopoly/suites.hpp"

using namespace orthopoly;

namespace {

// Wall-clock budgets in seconds.
constexpr double kBudget[11] = {0, 60, 300, 300, 120, 180, 60, 300, 300, 300, 1};
constexpr std::uint64_t kSeed = 20261018;

bool run(int id, const std::string& title, const std::function<VerificationReport()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  std::string error;
  try {
    rep = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs <= kBudget[id];
  const bool ok = error.empty() && !rep.checks.empty() && rep.ok() && in_time;
  std::printf("%s criterion %d: %s (%zu checks, %zu failed, %.2f s of %.0f s)\n", ok ? "PASS" : "FAIL", id,
              title.c_str(), rep.checks.size(), rep.failures(), secs, kBudget[id]);
  if (!error.empty()) std::printf("    error: %s\n", error.c_str());
  if (!in_time) std::printf("    over the time budget\n");
  int shown = 0;
  for (const auto& c : rep.checks)
    if (!c.ok && shown++ < 5) std::printf("    failed: %s %s\n", c.name.c_str(), c.detail.c_str());
  std::fflush(stdout);
  return ok;
}

std::vector<Permutation> perms(std::size_t m) { return all_permutations(m); }

}  // namespace

int main() {
  const Rational h(1, 2);
  std::vector<ConnMatrix> produced;
  int failed = 0;

  failed += !run(1, "closed forms equal gram, d=2, all of S_3, n<=6", [&] {
    const std::vector<Kappa> ks{{0, 0, 0}, {h, Rational(5, 3), Rational(2, 7)}, {Rational(-1, 3), Rational(1, 4), Rational(3, 5)}, {1, 1, 1}};
    return closed_vs_gram_suite(perms(3), ks, 6, &produced);
  });

  failed += !run(2, "closed forms equal gram, d=3, all of S_4, n<=4", [&] {
    const std::vector<Kappa> ks{{0, 0, 0, 0}, generic_kappa(3), {h, h, h, h}};
    return closed_vs_gram_suite(perms(4), ks, 4, &produced);
  });

  failed += !run(3, "three cyclic forms agree and equal gram, d=4,5, n<=3", [&] {
    VerificationReport rep;
    for (std::size_t d : {4u, 5u}) {
      Kappa sym(d + 1, Rational(1, 3));
      rep.merge(cyclic_suite(d, {generic_kappa(d), sym}, 3, &produced));
    }
    return rep;
  });

  failed += !run(4, "orthogonality, inverse and convolution on all matrices and 20 random pairs",
                 [&] { return structural_suite(produced, 20, kSeed); });

  failed += !run(5, "racah orthogonality, duality, second family, whipple, bridge",
                 [&] { return racah_suite({2, 3}, 5, 100, kSeed); });

  failed += !run(6, "summation identity, n<=6, all (k,l)", [&] {
    return sum_identity_suite({{h, Rational(5, 3), Rational(2, 7)}, {Rational(2, 3), Rational(1, 4), Rational(2, 3)}}, 6);
  });

  failed += !run(7, "hahn: generating function, orthogonality with B, B-A, N-independence",
                 [&] { return hahn_suite(3, 6, 4, 3); });

  failed += !run(8, "krawtchouk: orthogonality with C, duality, cyclic formula, limit ratio in [5,20]",
                 [&] { return kraw_suite(3, 6, 4, 10); });

  failed += !run(9, "ball and sphere: parity blocks, proportionality, block rule, harmonics", [&] {
    VerificationReport rep = ball_sphere_suite(3, 5);
    rep.merge(harmonics_suite(3));
    return rep;
  });

  failed += !run(10, "dimensions of bases and parity classes, d<=6, n<=8", [&] { return dimension_suite(6, 8); });

  std::printf("%s: %d of 10 criteria failed\n", failed ? "FAIL" : "PASS", failed);
  return failed ? 1 : 0;
}

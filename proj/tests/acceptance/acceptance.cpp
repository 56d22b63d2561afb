// Standalone acceptance run. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "symapprox/influence.hpp"
#include "symapprox/reliability.hpp"
#include "symapprox/symmetric_approximation.hpp"

using namespace symapprox;
using namespace symapprox::testing;

namespace {

constexpr std::uint64_t kSeed = 12345;
constexpr std::uint64_t kTrials = 1'000'000;

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Tracks the worst observed error against a fixed tolerance.
struct Bound {
  const char* label;
  double tol;
  double worst = 0.0;

  void see(double err) { worst = std::max(worst, std::isnan(err) ? INFINITY : err); }
  bool ok() const { return worst <= tol; }
  std::string str() const {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s %.3g (tol %.0e)", label, worst, tol);
    return buf;
  }
};

Outcome combine(std::initializer_list<const Bound*> bounds) {
  Outcome o;
  for (const Bound* b : bounds) {
    o.pass = o.pass && b->ok();
    if (!o.detail.empty()) o.detail += ", ";
    o.detail += b->str();
  }
  return o;
}

std::vector<StructureFunction> named_systems() {
  return {systems::series(3), systems::parallel(3), systems::k_out_of_n(2, 3),
          systems::k_out_of_n(2, 4), systems::bridge()};
}

const char* const kNamedSystems[] = {"series:3", "parallel:3", "2-of-3", "2-of-4", "bridge"};

// ---------------------------------------------------------------------------

Outcome oracle_equivalence() {
  Rng rng(kSeed + 1);
  Bound b{"max error", 1e-8};
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 8;
    const auto f = random_function(rng, n);
    const auto w = random_weights(rng, n, 1e-3);
    const auto basis = order_statistic_basis(n);
    b.see(max_abs_diff(to_function(best_symmetric_approximation(f, w)),
                       brute_force_projection(f, w, basis)));
  }
  return combine({&b});
}

Outcome orthogonality() {
  Rng rng(kSeed + 2);
  Bound b{"max |<f - A(f), os_i>|", 1e-10};
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 10;
    const auto f = random_function(rng, n);
    const auto w = random_weights(rng, n, 1e-3 / static_cast<double>(cube_size(n)));
    const auto residual = f - to_function(best_symmetric_approximation(f, w));
    for (int i = 1; i <= n + 1; ++i) b.see(std::abs(inner_product(residual, order_statistic(n, i), w)));
  }
  return combine({&b});
}

Outcome representation_agreement() {
  Rng rng(kSeed + 3);
  Bound b{"max pointwise disagreement", 1e-12};
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 10;
    const auto f = random_function(rng, n);
    const auto w = random_weights(rng, n, 1e-3 / static_cast<double>(cube_size(n)));
    const auto a = best_symmetric_approximation(f, w);
    const auto l_stat = evaluate_l_statistic(a);
    b.see(max_abs_diff(l_stat, evaluate_centered(centered_form(a, w), w)));
    b.see(max_abs_diff(l_stat, evaluate_multilinear(to_multilinear(a))));
    b.see(max_abs_diff(l_stat, to_function(a)));
  }
  return combine({&b});
}

Outcome symmetry_group() {
  Rng rng(kSeed + 4);
  Bound sym{"Sym vs A", 1e-12};
  Bound inv{"A(pi f) vs A(f)", 1e-10};
  Bound dual_b{"duality", 1e-12};
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 8;
    const auto f = random_function(rng, n);
    const auto u = uniform_weights(n);
    sym.see(max_abs_diff(symmetrize(f), to_function(best_symmetric_approximation(f, u))));

    // Every permutation preserves the uniform distribution.
    const auto pi = random_permutation(rng, n);
    const auto af = to_function(best_symmetric_approximation(f, u));
    const auto pf = permute(f, pi);
    inv.see(max_abs_diff(to_function(best_symmetric_approximation(pf, u)), af));
    inv.see(std::abs(distance(pf, to_function(best_symmetric_approximation(pf, u)), u) -
                     distance(f, af, u)));

    // A non-uniform distribution invariant under the transposition (1 2).
    if (n >= 2) {
      const auto base = random_weights(rng, n);
      std::vector<int> swap(n);
      for (int i = 0; i < n; ++i) swap[i] = i;
      std::swap(swap[0], swap[1]);
      const Permutation tau(swap);
      std::vector<double> raw(cube_size(n));
      for (Mask b = 0; b < raw.size(); ++b) {
        const Mask t = (b & ~Mask{3}) | ((b & 1) << 1) | ((b >> 1) & 1);
        raw[b] = base(b) + base(t);
      }
      const auto w = explicit_weights(raw);
      if (!weight_has_symmetry(w, tau)) {
        inv.see(INFINITY);
      } else {
        const auto tf = permute(f, tau);
        const auto aw = to_function(best_symmetric_approximation(f, w));
        const auto atw = to_function(best_symmetric_approximation(tf, w));
        inv.see(max_abs_diff(atw, aw));
        inv.see(std::abs(distance(tf, atw, w) - distance(f, aw, w)));
      }
    }

    const auto sd = random_self_dual_weights(rng, n);
    const auto fd = dual(f);
    dual_b.see(max_abs_diff(level_expectation(fd, sd).values,
                            dual_profile(level_expectation(f, sd)).values));
    const auto I = influence_vector(f, sd);
    const auto Id = influence_vector(fd, sd);
    for (int k = 1; k <= n; ++k) dual_b.see(std::abs(Id(k) - I(n - k + 1)));
  }
  return combine({&sym, &inv, &dual_b});
}

Outcome influence_suite() {
  Rng rng(kSeed + 5);
  Bound kernel{"kernel", 1e-12};
  Bound linear{"linearity", 1e-12};
  Bound rebuild{"reconstruction", 1e-9};
  Bound tele{"telescoping", 1e-12};
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 8;
    const auto w = random_weights(rng, n);
    const auto f = random_function(rng, n);
    const auto g = random_function(rng, n);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    const double a = coef(rng), b = coef(rng);

    const auto If = influence_vector(f, w);
    const auto Ig = influence_vector(g, w);
    const auto Ih = influence_vector(a * f + b * g, w);
    double sum = 0.0;
    for (int k = 1; k <= n; ++k) {
      kernel.see(std::abs(influence_via_kernel(f, w, k) - If(k)));
      linear.see(std::abs(Ih(k) - (a * If(k) + b * Ig(k))));
      sum += If(k);
    }
    const auto levels = level_expectation(f, w);
    tele.see(std::abs(sum - (levels[n] - levels[0])));
    rebuild.see(max_abs_diff(symmetric_from_mean_and_influence(mean(f, w), If, w),
                             to_function(best_symmetric_approximation(f, w))));
  }
  return combine({&kernel, &linear, &rebuild, &tele});
}

Outcome commutation() {
  Rng rng(kSeed + 6);
  Bound comm{"A_k A vs A A_k", 1e-8};
  Bound span{"A A_k vs symmetric span", 1e-8};
  for (int rep = 0; rep < 5; ++rep) {
    for (int n = 1; n <= 6; ++n) {
      const auto w = uniform_weights(n);
      const auto f = random_function(rng, n);
      const auto af = to_function(best_symmetric_approximation(f, w));
      for (int k = 0; k <= n; ++k) {
        const auto lhs = degree_k_projection(af, w, k);
        const auto rhs = symmetric_degree_k(f, w, k);
        comm.see(max_abs_diff(lhs, rhs));
        const auto basis = elementary_symmetric_basis(n, k);
        span.see(max_abs_diff(rhs, brute_force_projection(f, w, basis)));
      }
    }
  }
  return combine({&comm, &span});
}

Outcome signatures() {
  Outcome o;
  auto fail = [&](const std::string& why) {
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + why;
  };
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      // k-out-of-n fails at failure n-k+1.
      std::vector<double> unit(n, 0.0);
      unit[n - k] = 1.0;
      if (signature_exact(systems::k_out_of_n(k, n)).s != unit) {
        fail(std::to_string(k) + "-of-" + std::to_string(n));
      }
    }
    std::vector<double> first(n, 0.0), last(n, 0.0);
    first[0] = 1.0;
    last[n - 1] = 1.0;
    if (signature_exact(systems::series(n)).s != first) fail("series:" + std::to_string(n));
    if (signature_exact(systems::parallel(n)).s != last) fail("parallel:" + std::to_string(n));
  }
  if (signature_exact(systems::bridge()).s != boland_signature(systems::bridge().table())) {
    fail("bridge differs from the Boland count");
  }

  // Named systems plus random semicoherent systems built from path sets.
  auto tested = named_systems();
  Rng rng(kSeed + 7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 8;
    std::vector<std::vector<int>> paths(1 + rng() % 4);
    for (auto& p : paths) {
      for (int i = 1; i <= n; ++i) {
        if (rng() % 2) p.push_back(i);
      }
      if (p.empty()) p.push_back(1 + static_cast<int>(rng() % static_cast<unsigned>(n)));
    }
    tested.push_back(systems::from_path_sets(n, paths));
  }
  Bound b{"|sum s - 1| and -min s", 1e-12};
  for (const auto& phi : tested) {
    if (!phi.semicoherent()) {
      fail("generated system is not semicoherent");
      continue;
    }
    const auto s = signature_exact(phi).s;
    double total = 0.0;
    for (double x : s) {
      total += x;
      b.see(-x);
    }
    b.see(std::abs(total - 1.0));
  }
  if (!b.ok()) o.pass = false;
  o.detail = (o.pass ? "unit vectors and bridge exact, " : o.detail + "; ") + b.str();
  return o;
}

Outcome monte_carlo() {
  Outcome o;
  double worst_z = 0.0;
  const auto named = named_systems();
  for (std::size_t idx = 0; idx < named.size(); ++idx) {
    const auto exact = signature_exact(named[idx]);
    const auto est = signature_monte_carlo(named[idx], kTrials, kSeed);
    for (int i = 0; i < exact.n; ++i) {
      const double se = std::sqrt(exact.s[i] * (1.0 - exact.s[i]) / static_cast<double>(kTrials));
      const double dev = std::abs(est.s[i] - exact.s[i]);
      if (dev > 3.0 * se + 1e-9) {
        o.pass = false;
        char buf[128];
        std::snprintf(buf, sizeof buf, "%s s_%d off by %.3g (3se %.3g); ", kNamedSystems[idx], i + 1,
                      dev, 3.0 * se);
        o.detail += buf;
      }
      if (se > 0) worst_z = std::max(worst_z, dev / se);
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "worst deviation %.2f se over 5 systems, %llu trials", worst_z,
                static_cast<unsigned long long>(kTrials));
  o.detail += buf;
  return o;
}

Outcome mixture() {
  Outcome o;
  Bound mix{"mixture vs multilinear extension", 1e-10};
  const auto model = LifetimeModel::exponential(1.0);
  const auto named = named_systems();
  for (const auto& phi : named) {
    for (int j = 1; j <= 9; ++j) {
      const double p = j / 10.0;
      mix.see(std::abs(system_reliability(phi, model, -std::log(p)) -
                       reliability_at_component_survival(phi, p)));
    }
  }
  const double grid[] = {0.1, 0.5, 1.0, 2.0};
  double worst_z = 0.0;
  for (std::size_t idx = 0; idx < named.size(); ++idx) {
    const auto sim = simulate_system_survival(named[idx], model, grid, kTrials, kSeed);
    for (std::size_t g = 0; g < 4; ++g) {
      const double exact = system_reliability(named[idx], model, grid[g]);
      const double se = std::sqrt(exact * (1.0 - exact) / static_cast<double>(kTrials));
      const double dev = std::abs(sim.survival[g] - exact);
      if (dev > 3.0 * se) {
        o.pass = false;
        char buf[128];
        std::snprintf(buf, sizeof buf, "%s at t=%g off by %.3g (3se %.3g); ", kNamedSystems[idx],
                      grid[g], dev, 3.0 * se);
        o.detail += buf;
      }
      if (se > 0) worst_z = std::max(worst_z, dev / se);
    }
  }
  o.pass = o.pass && mix.ok();
  char buf[96];
  std::snprintf(buf, sizeof buf, ", simulated survival worst %.2f se", worst_z);
  o.detail += mix.str() + buf;
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"closed form matches Gram-system oracle", oracle_equivalence},
      {"residual orthogonal to order statistics", orthogonality},
      {"three representations agree", representation_agreement},
      {"symmetrization, weight symmetries, duality", symmetry_group},
      {"influence kernel, linearity, reconstruction, telescoping", influence_suite},
      {"degree projection commutes with A", commutation},
      {"exact signatures", signatures},
      {"Monte Carlo signatures within 3 se", monte_carlo},
      {"signature mixture reliability", mixture},
  };

  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %d. %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", index, c.name,
                o.detail.c_str(), secs);
    if (!o.pass) ++failures;
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}

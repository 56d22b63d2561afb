#pragma once

// Random instance generators and brute-force oracles shared by the unit and
// acceptance suites. Nothing here calls into the closed-form code paths it
// is used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "symapprox/pseudo_boolean.hpp"
#include "symapprox/weights.hpp"

namespace symapprox::testing {

using Rng = std::mt19937_64;

inline PseudoBooleanFunction random_function(Rng& rng, int n, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(cube_size(n));
  for (double& x : v) x = dist(rng);
  return {n, std::move(v)};
}

inline PseudoBooleanFunction random_integer_function(Rng& rng, int n, int lo = -50, int hi = 50) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<double> v(cube_size(n));
  for (double& x : v) x = dist(rng);
  return {n, std::move(v)};
}

inline PseudoBooleanFunction random_symmetric_function(Rng& rng, int n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> level(n + 1);
  for (double& x : level) x = dist(rng);
  std::vector<double> v(cube_size(n));
  for (Mask b = 0; b < v.size(); ++b) v[b] = level[cardinality(b)];
  return {n, std::move(v)};
}

/// Raw weights whose normalized per-vertex mass stays >= `floor`.
inline WeightDistribution random_weights(Rng& rng, int n, double floor = 1e-3) {
  const std::size_t size = cube_size(n);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  std::vector<double> raw(size);
  for (double& x : raw) x = dist(rng);
  const double total = std::accumulate(raw.begin(), raw.end(), 0.0);
  // Mix with the uniform distribution so every vertex keeps at least `floor`.
  const double uniform_share = std::min(1.0, floor * static_cast<double>(size) * 1.0001);
  for (double& x : raw) {
    x = (1.0 - uniform_share) * x / total + uniform_share / static_cast<double>(size);
  }
  return explicit_weights(raw);
}

/// Weights depending only on |x|, random per level.
inline WeightDistribution random_symmetric_weights(Rng& rng, int n) {
  std::uniform_real_distribution<double> dist(0.1, 1.0);
  std::vector<double> per_level(n + 1);
  for (double& x : per_level) x = dist(rng);
  std::vector<double> raw(cube_size(n));
  for (Mask b = 0; b < raw.size(); ++b) raw[b] = per_level[cardinality(b)];
  return explicit_weights(raw);
}

/// Weights with w(x) = w(1 - x).
inline WeightDistribution random_self_dual_weights(Rng& rng, int n) {
  std::uniform_real_distribution<double> dist(0.1, 1.0);
  const Mask full = static_cast<Mask>(cube_size(n) - 1);
  std::vector<double> raw(cube_size(n));
  for (Mask b = 0; b <= full; ++b) {
    if (b <= (full ^ b)) raw[b] = raw[full ^ b] = dist(rng);
  }
  return explicit_weights(raw);
}

inline Permutation random_permutation(Rng& rng, int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  std::shuffle(image.begin(), image.end(), rng);
  return Permutation(std::move(image));
}

inline double max_abs_diff(const PseudoBooleanFunction& a, const PseudoBooleanFunction& b) {
  double worst = 0.0;
  for (Mask x = 0; x < a.size(); ++x) worst = std::max(worst, std::abs(a(x) - b(x)));
  return worst;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

// ---------------------------------------------------------------------------
// Oracles

/// a(S) = sum_{T subset S} (-1)^{|S|-|T|} v(T), by enumerating subsets.
inline std::vector<double> moebius_by_definition(const PseudoBooleanFunction& f) {
  std::vector<double> a(f.size(), 0.0);
  for (Mask s = 0; s < f.size(); ++s) {
    double acc = 0.0;
    for (Mask t = s;; t = (t - 1) & s) {
      acc += ((cardinality(s) - cardinality(t)) % 2 == 0 ? 1.0 : -1.0) * f(t);
      if (t == 0) break;
    }
    a[s] = acc;
  }
  return a;
}

/// Sym(f) = (1/n!) sum over all n! permutations of pi(f), enumerated.
inline PseudoBooleanFunction symmetrize_by_enumeration(const PseudoBooleanFunction& f) {
  const int n = f.arity();
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  std::vector<double> acc(f.size(), 0.0);
  double count = 0.0;
  do {
    for (Mask x = 0; x < f.size(); ++x) {
      Mask y = 0;
      for (int i = 0; i < n; ++i) y |= ((x >> image[i]) & 1u) << i;
      acc[x] += f(y);
    }
    count += 1.0;
  } while (std::next_permutation(image.begin(), image.end()));
  for (double& v : acc) v /= count;
  return {n, std::move(acc)};
}

/// E(f | |x| = s) with the conditioning sum recomputed from scratch.
inline std::vector<double> conditional_means_by_scan(const PseudoBooleanFunction& f,
                                                     const WeightDistribution& w) {
  const int n = f.arity();
  std::vector<double> out(n + 1);
  for (int s = 0; s <= n; ++s) {
    double num = 0.0, den = 0.0;
    for (Mask b = 0; b < f.size(); ++b) {
      if (cardinality(b) != s) continue;
      num += w(b) * f(b);
      den += w(b);
    }
    out[s] = num / den;
  }
  return out;
}

/// Boland's signature: s_i = (#working at level n-i+1)/C(n, n-i+1)
///                         - (#working at level n-i)/C(n, n-i),
/// with counts and binomials taken as integers.
inline std::vector<double> boland_signature(const PseudoBooleanFunction& phi) {
  const int n = phi.arity();
  std::vector<std::uint64_t> working(n + 1, 0), total(n + 1, 0);
  for (Mask b = 0; b < phi.size(); ++b) {
    ++total[cardinality(b)];
    if (phi(b) == 1.0) ++working[cardinality(b)];
  }
  std::vector<double> s(n);
  for (int i = 1; i <= n; ++i) {
    const double upper = static_cast<double>(working[n - i + 1]) / static_cast<double>(total[n - i + 1]);
    const double lower = static_cast<double>(working[n - i]) / static_cast<double>(total[n - i]);
    s[i - 1] = upper - lower;
  }
  return s;
}

/// Average marginal contribution v(T + i) - v(T) over |T| = n-k, i not in T.
inline double mean_contribution(const PseudoBooleanFunction& v, int k) {
  const int n = v.arity();
  double acc = 0.0;
  double count = 0.0;
  for (Mask t = 0; t < v.size(); ++t) {
    if (cardinality(t) != n - k) continue;
    for (int i = 0; i < n; ++i) {
      const Mask bit = Mask{1} << i;
      if (t & bit) continue;
      acc += v(t | bit) - v(t);
      count += 1.0;
    }
  }
  return acc / count;
}

}  // namespace symapprox::testing

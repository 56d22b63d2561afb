#pragma once

/// \file weights.hpp
/// Weighted inner-product structure on n-ary pseudo-Boolean functions.
///
/// A WeightDistribution is a strictly positive probability distribution on
/// the vertices of {0,1}^n. Raw weights are normalized on construction.
/// Per-cardinality masses are cached along with an index of the masks grouped
/// by popcount; every level sum in the library walks that index.

#include <memory>
#include <span>
#include <vector>

#include "symapprox/pseudo_boolean.hpp"

namespace symapprox {

inline constexpr double kWeightSymmetryTolerance = 1e-12;

/// Masks of {0,1}^n sorted by (popcount, mask). Level s occupies
/// masks()[offset(s) .. offset(s+1)).
class LevelIndex {
 public:
  explicit LevelIndex(int n);

  int arity() const noexcept { return n_; }
  std::span<const Mask> level(int s) const {
    return std::span<const Mask>(masks_).subspan(offsets_[s], offsets_[s + 1] - offsets_[s]);
  }

 private:
  int n_;
  std::vector<Mask> masks_;
  std::vector<std::size_t> offsets_;
};

class WeightDistribution {
 public:
  int arity() const noexcept { return n_; }
  double operator()(Mask x) const { return w_[x]; }
  std::span<const double> weights() const noexcept { return w_; }
  /// Total probability of level s, i.e. Pr(|x| = s).
  double level_mass(int s) const { return level_mass_[s]; }
  std::span<const double> level_masses() const noexcept { return level_mass_; }
  const LevelIndex& levels() const noexcept { return *index_; }

 private:
  friend WeightDistribution explicit_weights(std::span<const double> raw);
  friend WeightDistribution uniform_weights(int n);
  friend WeightDistribution product_weights(std::span<const double> p);

  WeightDistribution(int n, std::vector<double> w);

  int n_;
  std::vector<double> w_;
  std::vector<double> level_mass_;
  std::shared_ptr<const LevelIndex> index_;
};

WeightDistribution uniform_weights(int n);
/// Independent Bernoulli(p_i) coordinates. Each p_i must lie in (0,1).
WeightDistribution product_weights(std::span<const double> p);
/// Normalizes strictly positive raw weights; size must be 2^n for some n.
WeightDistribution explicit_weights(std::span<const double> raw);

/// Conditional level expectations v(s) = E(f(x) | |x| = s).
struct CardinalityProfile {
  int n = 0;
  std::vector<double> values;  // length n+1

  double operator[](int s) const { return values[s]; }
  bool operator==(const CardinalityProfile&) const = default;
};

double inner_product(const PseudoBooleanFunction& f, const PseudoBooleanFunction& g,
                     const WeightDistribution& w);
/// <f, 1>, the mean of f under w.
double mean(const PseudoBooleanFunction& f, const WeightDistribution& w);
double norm(const PseudoBooleanFunction& f, const WeightDistribution& w);
/// Weighted Euclidean distance ||f - g||.
double distance(const PseudoBooleanFunction& f, const PseudoBooleanFunction& g,
                const WeightDistribution& w);

CardinalityProfile level_expectation(const PseudoBooleanFunction& f,
                                     const WeightDistribution& w);

/// The symmetric function with value profile[|x|] at x.
PseudoBooleanFunction from_profile(const CardinalityProfile& profile);

/// w(x) depends only on |x|.
bool weight_is_symmetric(const WeightDistribution& w);
/// w(x) == w(1 - x).
bool weight_is_self_dual(const WeightDistribution& w);
/// pi(w) == w, i.e. pi is a symmetry of the weight function.
bool weight_has_symmetry(const WeightDistribution& w, const Permutation& pi);

}  // namespace symapprox

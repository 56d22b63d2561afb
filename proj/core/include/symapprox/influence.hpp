#pragma once

/// \file influence.hpp
/// Influence of the k-th largest variable on a pseudo-Boolean function:
///
///     I(f, k) = v(n-k+1) - v(n-k),     v(s) = E(f(x) | |x| = s),
///
/// which is the coefficient of os_k in the best symmetric approximation.
/// The map f -> I(f, k) is linear and is represented by a zero-mean
/// symmetric kernel g_k with I(f, k) = <f, g_k>, hence I(f, k) is also the
/// covariance of f and g_k under the weight distribution.
///
/// With d_j = -1 / Pr(|x| = n-j+1), the kernel expands to
///
///     g_k = d_{k+1} (os_{k+1} - os_k) - d_k (os_k - os_{k-1}).
///
/// os_{k+1} - os_k is the indicator of the level |x| = n-k, so g_k is
/// positive on level n-k+1 and negative on level n-k.

#include <vector>

#include "symapprox/pseudo_boolean.hpp"
#include "symapprox/symmetric_approximation.hpp"
#include "symapprox/weights.hpp"

namespace symapprox {

struct InfluenceVector {
  int n = 0;
  std::vector<double> values;  // values[k-1] = I(f, k)

  double operator()(int k) const { return values.at(static_cast<std::size_t>(k - 1)); }
};

struct InfluenceKernel {
  int n = 0;
  int k = 0;
  PseudoBooleanFunction table;
  double d_k = 0.0;
  double d_k_plus_1 = 0.0;
};

/// Throws std::out_of_range unless 1 <= k <= n.
double influence_index(const PseudoBooleanFunction& f, const WeightDistribution& w, int k);
InfluenceVector influence_vector(const PseudoBooleanFunction& f, const WeightDistribution& w);

InfluenceKernel influence_kernel(const WeightDistribution& w, int k);

/// <f, g_k>.
double influence_via_kernel(const PseudoBooleanFunction& f, const WeightDistribution& w, int k);

struct CovarianceReading {
  double covariance = 0.0;
  /// covariance - influence_index; zero up to rounding since E(g_k) = 0.
  double check = 0.0;
};

CovarianceReading influence_as_covariance(const PseudoBooleanFunction& f,
                                          const WeightDistribution& w, int k);

/// The symmetric g = g(0) + sum_j I_j os_j whose mean is `mean`.
PseudoBooleanFunction symmetric_from_mean_and_influence(double mean, const InfluenceVector& I,
                                                        const WeightDistribution& w);

/// True iff <f,1> = <g,1> and I(f,k) = I(g,k) for all k (each within 1e-10).
/// g must be symmetric; throws ContractError otherwise.
bool verify_characterization(const PseudoBooleanFunction& f, const PseudoBooleanFunction& g,
                             const WeightDistribution& w);

/// A set function with v(empty) = 0, stored as a pseudo-Boolean table.
class CooperativeGame {
 public:
  /// Throws DomainError if v(empty) != 0.
  explicit CooperativeGame(SetFunctionView v);

  int players() const noexcept { return v_.arity(); }
  double worth(Mask coalition) const { return v_(coalition); }
  const PseudoBooleanFunction& as_function() const noexcept { return v_; }

 private:
  PseudoBooleanFunction v_;
};

InfluenceVector game_influence(const CooperativeGame& game, const WeightDistribution& w);
/// The game defined by A(f); a game again because A(f)(0) = f(0) = 0.
CooperativeGame closest_symmetric_game(const CooperativeGame& game, const WeightDistribution& w);

}  // namespace symapprox

#include "symapprox/influence.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "symapprox/errors.hpp"

namespace symapprox {

namespace {

constexpr double kCharacterizationTolerance = 1e-10;

void require_index(int n, int k) {
  if (k < 1 || k > n) {
    throw std::out_of_range("influence index k=" + std::to_string(k) + " outside 1.." +
                            std::to_string(n));
  }
}

// d_j = -1 / Pr(|x| = n-j+1), defined for j = 1..n+1.
double kernel_constant(const WeightDistribution& w, int j) {
  return -1.0 / w.level_mass(w.arity() - j + 1);
}

}  // namespace

double influence_index(const PseudoBooleanFunction& f, const WeightDistribution& w, int k) {
  require_index(f.arity(), k);
  const auto levels = level_expectation(f, w);
  const int n = f.arity();
  return levels[n - k + 1] - levels[n - k];
}

InfluenceVector influence_vector(const PseudoBooleanFunction& f, const WeightDistribution& w) {
  const auto levels = level_expectation(f, w);
  const int n = f.arity();
  InfluenceVector out{n, std::vector<double>(n)};
  for (int k = 1; k <= n; ++k) out.values[k - 1] = levels[n - k + 1] - levels[n - k];
  return out;
}

InfluenceKernel influence_kernel(const WeightDistribution& w, int k) {
  const int n = w.arity();
  require_index(n, k);
  const double dk = kernel_constant(w, k);
  const double dk1 = kernel_constant(w, k + 1);
  const auto upper = order_statistic(n, k + 1) - order_statistic(n, k);  // level n-k
  const auto lower = order_statistic(n, k) - order_statistic(n, k - 1);  // level n-k+1
  return {n, k, dk1 * upper - dk * lower, dk, dk1};
}

double influence_via_kernel(const PseudoBooleanFunction& f, const WeightDistribution& w, int k) {
  return inner_product(f, influence_kernel(w, k).table, w);
}

CovarianceReading influence_as_covariance(const PseudoBooleanFunction& f,
                                          const WeightDistribution& w, int k) {
  const auto kernel = influence_kernel(w, k);
  const double cov = inner_product(f, kernel.table, w) - mean(f, w) * mean(kernel.table, w);
  return {cov, cov - influence_index(f, w, k)};
}

PseudoBooleanFunction symmetric_from_mean_and_influence(double mean_value,
                                                        const InfluenceVector& I,
                                                        const WeightDistribution& w) {
  const int n = w.arity();
  if (I.n != n || I.values.size() != static_cast<std::size_t>(n)) {
    throw ContractError("influence vector does not match weight arity");
  }
  // g(0) + sum_j I_j <os_j, 1> = mean
  double at_zero = mean_value;
  for (int j = 1; j <= n; ++j) at_zero -= I(j) * mean(order_statistic(n, j), w);
  auto g = PseudoBooleanFunction::constant(n, at_zero);
  for (int j = 1; j <= n; ++j) g = g + I(j) * order_statistic(n, j);
  return g;
}

bool verify_characterization(const PseudoBooleanFunction& f, const PseudoBooleanFunction& g,
                             const WeightDistribution& w) {
  if (!is_symmetric(g)) {
    throw ContractError("characterization check requires a symmetric candidate");
  }
  if (std::abs(mean(f, w) - mean(g, w)) > kCharacterizationTolerance) return false;
  const auto If = influence_vector(f, w);
  const auto Ig = influence_vector(g, w);
  for (int k = 1; k <= f.arity(); ++k) {
    if (std::abs(If(k) - Ig(k)) > kCharacterizationTolerance) return false;
  }
  return true;
}

CooperativeGame::CooperativeGame(SetFunctionView v) : v_(from_set_function(std::move(v))) {
  if (v_(0) != 0.0) {
    throw DomainError("a game must assign 0 to the empty coalition, got " +
                      std::to_string(v_(0)));
  }
}

InfluenceVector game_influence(const CooperativeGame& game, const WeightDistribution& w) {
  return influence_vector(game.as_function(), w);
}

CooperativeGame closest_symmetric_game(const CooperativeGame& game, const WeightDistribution& w) {
  const auto approx = to_function(best_symmetric_approximation(game.as_function(), w));
  const std::vector<double> table(approx.values().begin(), approx.values().end());
  return CooperativeGame(SetFunctionView(approx.arity(), table));
}

}  // namespace symapprox

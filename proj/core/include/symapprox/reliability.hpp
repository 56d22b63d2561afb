#pragma once

/// \file reliability.hpp
/// System signatures and reliability of coherent systems with i.i.d.
/// component lifetimes.
///
/// For a structure function phi, s_i = Pr(T = X_{i:n}) is the probability
/// that the i-th component failure brings the system down. The signature
/// coincides with the influence vector of phi under uniform weights, and the
/// system survival function is the mixture
///
///     Pr(T > t) = sum_i s_i Pr(X_{i:n} > t).

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "symapprox/pseudo_boolean.hpp"

namespace symapprox {

class StructureFunction {
 public:
  /// Throws DomainError naming the first mask whose value is not 0 or 1.
  explicit StructureFunction(PseudoBooleanFunction phi);

  int components() const noexcept { return phi_.arity(); }
  bool works(Mask up) const { return phi_(up) != 0.0; }
  const PseudoBooleanFunction& table() const noexcept { return phi_; }
  /// Nondecreasing with phi(0) = 0 and phi(1) = 1.
  bool semicoherent() const noexcept { return semicoherent_; }

 private:
  PseudoBooleanFunction phi_;
  bool semicoherent_;
};

StructureFunction structure_from_function(PseudoBooleanFunction f);

namespace systems {

StructureFunction series(int n);
StructureFunction parallel(int n);
/// Works iff at least k of the n components work.
StructureFunction k_out_of_n(int k, int n);
/// Five-component bridge with minimal path sets {1,4}, {2,5}, {1,3,5}, {2,3,4}.
StructureFunction bridge();
/// Works iff some listed path set (1-based members) is fully up.
StructureFunction from_path_sets(int n, std::span<const std::vector<int>> paths);

/// Parses "series:N", "parallel:N", "K-of-N" or "bridge".
StructureFunction parse(const std::string& spec);

}  // namespace systems

StructureFunction dual(const StructureFunction& phi);

struct ExactMethod {};
struct MonteCarloMethod {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

struct Signature {
  int n = 0;
  std::vector<double> s;
  std::variant<ExactMethod, MonteCarloMethod> method;
  /// Binomial standard errors sqrt(s_i (1 - s_i) / trials); empty when exact.
  std::vector<double> standard_error;

  bool is_exact() const noexcept { return std::holds_alternative<ExactMethod>(method); }
};

/// Influence vector of phi under uniform weights, whatever weights the
/// caller may otherwise be using.
Signature signature_exact(const StructureFunction& phi);

/// Simulates the failure order of n i.i.d. Uniform(0,1) lifetimes and counts
/// which failure first brings phi down. Deterministic in (trials, seed) and
/// independent of the number of worker threads. Requires semicoherent phi.
Signature signature_monte_carlo(const StructureFunction& phi, std::uint64_t trials,
                                std::uint64_t seed);

class LifetimeModel {
 public:
  static LifetimeModel exponential(double rate);
  static LifetimeModel weibull(double shape, double scale);
  /// "exp:LAMBDA" or "weibull:SHAPE:SCALE".
  static LifetimeModel parse(const std::string& spec);

  double cdf(double t) const;
  double survival(double t) const;
  /// Inverse CDF at u in [0, 1).
  double quantile(double u) const;

 private:
  enum class Family { kExponential, kWeibull };
  LifetimeModel(Family family, double shape, double scale);

  Family family_;
  double shape_;
  double scale_;
};

/// Pr(X_{i:n} > t) = sum_{j=0}^{i-1} C(n,j) F(t)^j (1 - F(t))^{n-j}.
double survival_order_statistic(int i, int n, const LifetimeModel& model, double t);

/// Signature mixture of order-statistic survival functions. Requires a
/// semicoherent phi and t >= 0.
double system_reliability(const StructureFunction& phi, const LifetimeModel& model, double t);

/// Pr(phi(X) = 1) for independent components that each work with
/// probability p: the multilinear extension of phi at (p, ..., p).
double reliability_at_component_survival(const StructureFunction& phi, double p);

struct ReliabilityRow {
  double t = 0.0;
  double survival = 0.0;
  /// order_statistic_survival[i-1] = Pr(X_{i:n} > t).
  std::vector<double> order_statistic_survival;
  /// terms[i-1] = s_i Pr(X_{i:n} > t); these sum to `survival`.
  std::vector<double> terms;
};

/// Grid must be strictly increasing and nonnegative.
std::vector<ReliabilityRow> reliability_curve(const StructureFunction& phi,
                                              const LifetimeModel& model,
                                              std::span<const double> t_grid);

struct SurvivalEstimate {
  std::vector<double> survival;
  std::vector<double> standard_error;
};

/// Empirical Pr(T > t) from simulated system lifetimes under `model`.
SurvivalEstimate simulate_system_survival(const StructureFunction& phi,
                                          const LifetimeModel& model,
                                          std::span<const double> t_grid,
                                          std::uint64_t trials, std::uint64_t seed);

}  // namespace symapprox

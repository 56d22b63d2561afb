#include "symapprox/weights.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "symapprox/errors.hpp"

namespace symapprox {

namespace {

void require_matching(int a, int b) {
  if (a != b) {
    throw ContractError("arity mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

// Level indices are immutable and identical for every distribution of the
// same arity.
std::shared_ptr<const LevelIndex> shared_level_index(int n) {
  static std::mutex mu;
  static std::map<int, std::weak_ptr<const LevelIndex>> cache;
  std::lock_guard lock(mu);
  if (auto hit = cache[n].lock()) return hit;
  auto idx = std::make_shared<const LevelIndex>(n);
  cache[n] = idx;
  return idx;
}

int arity_for_size(std::size_t size) {
  for (int n = 1; n <= kMaxVariables; ++n) {
    if (cube_size(n) == size) return n;
  }
  throw ContractError("weight vector length " + std::to_string(size) +
                      " is not 2^n for any n in 1.." + std::to_string(kMaxVariables));
}

}  // namespace

LevelIndex::LevelIndex(int n) : n_(n), masks_(cube_size(n)), offsets_(n + 2, 0) {
  for (Mask b = 0; b < masks_.size(); ++b) ++offsets_[cardinality(b) + 1];
  for (int s = 1; s <= n + 1; ++s) offsets_[s] += offsets_[s - 1];
  std::vector<std::size_t> next(offsets_.begin(), offsets_.end() - 1);
  for (Mask b = 0; b < masks_.size(); ++b) masks_[next[cardinality(b)]++] = b;
}

WeightDistribution::WeightDistribution(int n, std::vector<double> w)
    : n_(n), w_(std::move(w)), level_mass_(n + 1, 0.0), index_(shared_level_index(n)) {
  double total = 0.0;
  for (std::size_t b = 0; b < w_.size(); ++b) {
    if (!std::isfinite(w_[b]) || !(w_[b] > 0.0)) {
      throw DomainError("weight at mask " + std::to_string(b) +
                        " must be a finite positive real");
    }
    total += w_[b];
  }
  if (total != 1.0) {
    for (double& x : w_) x /= total;
  }
  for (int s = 0; s <= n_; ++s) {
    double m = 0.0;
    for (Mask b : index_->level(s)) m += w_[b];
    level_mass_[s] = m;
  }
}

WeightDistribution uniform_weights(int n) {
  if (n < 1 || n > kMaxVariables) {
    throw ContractError("number of variables must lie in 1.." + std::to_string(kMaxVariables));
  }
  return WeightDistribution(n, std::vector<double>(cube_size(n), std::ldexp(1.0, -n)));
}

WeightDistribution product_weights(std::span<const double> p) {
  const int n = static_cast<int>(p.size());
  if (n < 1 || n > kMaxVariables) {
    throw ContractError("number of variables must lie in 1.." + std::to_string(kMaxVariables));
  }
  for (int i = 0; i < n; ++i) {
    if (!(p[i] > 0.0 && p[i] < 1.0)) {
      throw DomainError("p_" + std::to_string(i + 1) + " must lie strictly between 0 and 1");
    }
  }
  std::vector<double> w(cube_size(n));
  for (Mask b = 0; b < w.size(); ++b) {
    double x = 1.0;
    for (int i = 0; i < n; ++i) x *= (b >> i) & 1u ? p[i] : 1.0 - p[i];
    w[b] = x;
  }
  return WeightDistribution(n, std::move(w));
}

WeightDistribution explicit_weights(std::span<const double> raw) {
  const int n = arity_for_size(raw.size());
  return WeightDistribution(n, std::vector<double>(raw.begin(), raw.end()));
}

double inner_product(const PseudoBooleanFunction& f, const PseudoBooleanFunction& g,
                     const WeightDistribution& w) {
  require_matching(f.arity(), g.arity());
  require_matching(f.arity(), w.arity());
  double total = 0.0;
  for (Mask b = 0; b < f.size(); ++b) total += w(b) * f(b) * g(b);
  return total;
}

double mean(const PseudoBooleanFunction& f, const WeightDistribution& w) {
  require_matching(f.arity(), w.arity());
  double total = 0.0;
  for (Mask b = 0; b < f.size(); ++b) total += w(b) * f(b);
  return total;
}

double norm(const PseudoBooleanFunction& f, const WeightDistribution& w) {
  return std::sqrt(inner_product(f, f, w));
}

double distance(const PseudoBooleanFunction& f, const PseudoBooleanFunction& g,
                const WeightDistribution& w) {
  require_matching(f.arity(), g.arity());
  require_matching(f.arity(), w.arity());
  double total = 0.0;
  for (Mask b = 0; b < f.size(); ++b) {
    const double d = f(b) - g(b);
    total += w(b) * d * d;
  }
  return std::sqrt(total);
}

CardinalityProfile level_expectation(const PseudoBooleanFunction& f,
                                     const WeightDistribution& w) {
  require_matching(f.arity(), w.arity());
  const int n = f.arity();
  CardinalityProfile out{n, std::vector<double>(n + 1)};
  for (int s = 0; s <= n; ++s) {
    double acc = 0.0;
    for (Mask b : w.levels().level(s)) acc += w(b) * f(b);
    out.values[s] = acc / w.level_mass(s);
  }
  return out;
}

PseudoBooleanFunction from_profile(const CardinalityProfile& profile) {
  if (profile.values.size() != static_cast<std::size_t>(profile.n) + 1) {
    throw ContractError("profile length must be n+1");
  }
  std::vector<double> v(cube_size(profile.n));
  for (Mask b = 0; b < v.size(); ++b) v[b] = profile.values[cardinality(b)];
  return {profile.n, std::move(v)};
}

bool weight_is_symmetric(const WeightDistribution& w) {
  for (int s = 0; s <= w.arity(); ++s) {
    const auto level = w.levels().level(s);
    const double ref = w(level.front());
    for (Mask b : level) {
      if (std::abs(w(b) - ref) > kWeightSymmetryTolerance) return false;
    }
  }
  return true;
}

bool weight_is_self_dual(const WeightDistribution& w) {
  const Mask full = static_cast<Mask>(cube_size(w.arity()) - 1);
  for (Mask b = 0; b <= full; ++b) {
    if (std::abs(w(b) - w(full ^ b)) > kWeightSymmetryTolerance) return false;
  }
  return true;
}

bool weight_has_symmetry(const WeightDistribution& w, const Permutation& pi) {
  const std::vector<double> raw(w.weights().begin(), w.weights().end());
  const PseudoBooleanFunction as_function(w.arity(), raw);
  const auto moved = permute(as_function, pi);
  for (Mask b = 0; b < raw.size(); ++b) {
    if (std::abs(moved(b) - raw[b]) > kWeightSymmetryTolerance) return false;
  }
  return true;
}

}  // namespace symapprox

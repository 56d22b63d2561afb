#include "symapprox/reliability.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "symapprox/errors.hpp"
#include "symapprox/influence.hpp"
#include "symapprox/weights.hpp"

namespace symapprox {

// ---------------------------------------------------------------------------
// Structure functions

namespace {

bool check_semicoherent(const PseudoBooleanFunction& phi) {
  const int n = phi.arity();
  const Mask full = static_cast<Mask>(phi.size() - 1);
  if (phi(0) != 0.0 || phi(full) != 1.0) return false;
  for (int i = 0; i < n; ++i) {
    const Mask bit = Mask{1} << i;
    for (Mask b = 0; b <= full; ++b) {
      if ((b & bit) == 0 && phi(b) > phi(b | bit)) return false;
    }
  }
  return true;
}

int parse_positive_int(const std::string& text, const std::string& context) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || v < 1) {
    throw ContractError("invalid integer '" + text + "' in " + context);
  }
  return v;
}

double parse_positive_real(const std::string& text, const std::string& context) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) {
    throw ContractError("invalid number '" + text + "' in " + context);
  }
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError("parameter '" + text + "' in " + context + " must be positive");
  }
  return v;
}

}  // namespace

StructureFunction::StructureFunction(PseudoBooleanFunction phi) : phi_(std::move(phi)) {
  for (Mask b = 0; b < phi_.size(); ++b) {
    if (phi_(b) != 0.0 && phi_(b) != 1.0) {
      throw DomainError("structure function value at mask " + std::to_string(b) +
                        " is not 0 or 1");
    }
  }
  semicoherent_ = check_semicoherent(phi_);
}

StructureFunction structure_from_function(PseudoBooleanFunction f) {
  return StructureFunction(std::move(f));
}

namespace systems {

StructureFunction series(int n) { return StructureFunction(order_statistic(n, 1)); }

StructureFunction parallel(int n) { return StructureFunction(order_statistic(n, n)); }

StructureFunction k_out_of_n(int k, int n) {
  if (n < 1 || k < 1 || k > n) {
    throw ContractError("k-out-of-n needs 1 <= k <= n");
  }
  return StructureFunction(order_statistic(n, n - k + 1));
}

StructureFunction from_path_sets(int n, std::span<const std::vector<int>> paths) {
  std::vector<Mask> path_masks;
  for (const auto& p : paths) path_masks.push_back(mask_of(p, n));
  std::vector<double> v(cube_size(n), 0.0);
  for (Mask b = 0; b < v.size(); ++b) {
    for (Mask p : path_masks) {
      if ((b & p) == p) {
        v[b] = 1.0;
        break;
      }
    }
  }
  return StructureFunction(PseudoBooleanFunction(n, std::move(v)));
}

StructureFunction bridge() {
  const std::vector<std::vector<int>> paths{{1, 4}, {2, 5}, {1, 3, 5}, {2, 3, 4}};
  return from_path_sets(5, paths);
}

StructureFunction parse(const std::string& spec) {
  const std::string context = "system '" + spec + "'";
  if (spec == "bridge") return bridge();
  if (spec.rfind("series:", 0) == 0) return series(parse_positive_int(spec.substr(7), context));
  if (spec.rfind("parallel:", 0) == 0) {
    return parallel(parse_positive_int(spec.substr(9), context));
  }
  if (const auto pos = spec.find("-of-"); pos != std::string::npos) {
    const int k = parse_positive_int(spec.substr(0, pos), context);
    const int n = parse_positive_int(spec.substr(pos + 4), context);
    return k_out_of_n(k, n);
  }
  throw ContractError("unknown " + context +
                      "; expected series:N, parallel:N, K-of-N or bridge");
}

}  // namespace systems

StructureFunction dual(const StructureFunction& phi) {
  return StructureFunction(dual(phi.table()));
}

// ---------------------------------------------------------------------------
// Signatures

Signature signature_exact(const StructureFunction& phi) {
  const auto I = influence_vector(phi.table(), uniform_weights(phi.components()));
  return {I.n, I.values, ExactMethod{}, {}};
}

namespace {

constexpr std::uint64_t kTrialsPerBlock = std::uint64_t{1} << 16;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::mt19937_64 block_engine(std::uint64_t seed, std::uint64_t block) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(block + 1)));
}

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct Failure {
  int index;      // 1-based position in the failure order
  double uniform; // Uniform(0,1) draw of the component whose failure it was
};

// Fails components in increasing order of their draws (ties by component
// index) until the system goes down.
class FailureSimulator {
 public:
  explicit FailureSimulator(const StructureFunction& phi)
      : phi_(phi), n_(phi.components()), draws_(n_), order_(n_) {}

  Failure run(std::mt19937_64& rng) {
    for (int i = 0; i < n_; ++i) draws_[i] = unit_uniform(rng);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return draws_[a] < draws_[b]; });
    Mask up = static_cast<Mask>(cube_size(n_) - 1);
    for (int i = 0; i < n_; ++i) {
      up &= ~(Mask{1} << order_[i]);
      if (!phi_.works(up)) return {i + 1, draws_[order_[i]]};
    }
    // Unreachable for semicoherent phi, which fails with every component down.
    return {n_, draws_[order_[n_ - 1]]};
  }

 private:
  const StructureFunction& phi_;
  int n_;
  std::vector<double> draws_;
  std::vector<int> order_;
};

// Runs `per_block(block, trials_in_block, counts)` over fixed-size blocks on
// a small worker pool and sums the integer counts. Block boundaries depend
// only on the trial total, never on the worker count.
template <typename PerBlock>
std::vector<std::uint64_t> run_blocks(std::uint64_t trials, std::size_t width,
                                      PerBlock per_block) {
  const std::uint64_t blocks = (trials + kTrialsPerBlock - 1) / kTrialsPerBlock;
  std::vector<std::vector<std::uint64_t>> partial(blocks, std::vector<std::uint64_t>(width, 0));
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t b = next++; b < blocks; b = next++) {
      const std::uint64_t begin = b * kTrialsPerBlock;
      const std::uint64_t count = std::min(kTrialsPerBlock, trials - begin);
      per_block(b, count, partial[b]);
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const auto threads = static_cast<unsigned>(std::min<std::uint64_t>(hw, blocks));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<std::uint64_t> total(width, 0);
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < width; ++i) total[i] += p[i];
  }
  return total;
}

void require_semicoherent(const StructureFunction& phi, const char* what) {
  if (!phi.semicoherent()) {
    throw ContractError(std::string(what) + " requires a semicoherent structure function");
  }
}

}  // namespace

Signature signature_monte_carlo(const StructureFunction& phi, std::uint64_t trials,
                                std::uint64_t seed) {
  require_semicoherent(phi, "Monte Carlo signature");
  if (trials == 0) throw ContractError("Monte Carlo signature needs at least one trial");
  const int n = phi.components();
  const auto counts = run_blocks(trials, static_cast<std::size_t>(n),
                                 [&](std::uint64_t block, std::uint64_t count, auto& out) {
                                   auto rng = block_engine(seed, block);
                                   FailureSimulator sim(phi);
                                   for (std::uint64_t t = 0; t < count; ++t) {
                                     ++out[sim.run(rng).index - 1];
                                   }
                                 });
  Signature sig{n, std::vector<double>(n), MonteCarloMethod{trials, seed},
                std::vector<double>(n)};
  const double total = static_cast<double>(trials);
  for (int i = 0; i < n; ++i) {
    const double p = static_cast<double>(counts[i]) / total;
    sig.s[i] = p;
    sig.standard_error[i] = std::sqrt(p * (1.0 - p) / total);
  }
  return sig;
}

// ---------------------------------------------------------------------------
// Lifetimes and reliability

LifetimeModel::LifetimeModel(Family family, double shape, double scale)
    : family_(family), shape_(shape), scale_(scale) {}

LifetimeModel LifetimeModel::exponential(double rate) {
  if (!(rate > 0.0) || !std::isfinite(rate)) throw DomainError("exponential rate must be positive");
  return {Family::kExponential, 1.0, 1.0 / rate};
}

LifetimeModel LifetimeModel::weibull(double shape, double scale) {
  if (!(shape > 0.0) || !(scale > 0.0) || !std::isfinite(shape) || !std::isfinite(scale)) {
    throw DomainError("Weibull shape and scale must be positive");
  }
  return {Family::kWeibull, shape, scale};
}

LifetimeModel LifetimeModel::parse(const std::string& spec) {
  const std::string context = "lifetime model '" + spec + "'";
  if (spec.rfind("exp:", 0) == 0) return exponential(parse_positive_real(spec.substr(4), context));
  if (spec.rfind("weibull:", 0) == 0) {
    const std::string rest = spec.substr(8);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw ContractError("expected weibull:SHAPE:SCALE");
    return weibull(parse_positive_real(rest.substr(0, colon), context),
                   parse_positive_real(rest.substr(colon + 1), context));
  }
  throw ContractError("unknown " + context + "; expected exp:LAMBDA or weibull:SHAPE:SCALE");
}

double LifetimeModel::cdf(double t) const {
  if (t <= 0.0) return 0.0;
  return -std::expm1(-std::pow(t / scale_, shape_));
}

double LifetimeModel::survival(double t) const {
  if (t <= 0.0) return 1.0;
  return std::exp(-std::pow(t / scale_, shape_));
}

double LifetimeModel::quantile(double u) const {
  return scale_ * std::pow(-std::log1p(-u), 1.0 / shape_);
}

double survival_order_statistic(int i, int n, const LifetimeModel& model, double t) {
  if (n < 1 || i < 1 || i > n) throw std::out_of_range("order statistic index outside 1..n");
  if (!(t >= 0.0)) throw DomainError("time must be nonnegative");
  const double F = model.cdf(t);
  const double S = model.survival(t);
  double total = 0.0;
  for (int j = i - 1; j >= 0; --j) {
    total += binomial(n, j) * std::pow(F, j) * std::pow(S, n - j);
  }
  return std::min(total, 1.0);
}

double system_reliability(const StructureFunction& phi, const LifetimeModel& model, double t) {
  require_semicoherent(phi, "system reliability");
  if (!(t >= 0.0)) throw DomainError("time must be nonnegative");
  const auto sig = signature_exact(phi);
  double total = 0.0;
  for (int i = 1; i <= sig.n; ++i) {
    total += sig.s[i - 1] * survival_order_statistic(i, sig.n, model, t);
  }
  return total;
}

double reliability_at_component_survival(const StructureFunction& phi, double p) {
  const std::vector<double> point(phi.components(), p);
  return phi.table().evaluate_multilinear(point);
}

std::vector<ReliabilityRow> reliability_curve(const StructureFunction& phi,
                                              const LifetimeModel& model,
                                              std::span<const double> t_grid) {
  require_semicoherent(phi, "reliability curve");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] >= 0.0)) throw DomainError("time grid must be nonnegative");
    if (i > 0 && !(t_grid[i] > t_grid[i - 1])) {
      throw ContractError("time grid must be strictly increasing");
    }
  }
  const auto sig = signature_exact(phi);
  const int n = sig.n;
  std::vector<ReliabilityRow> rows;
  rows.reserve(t_grid.size());
  for (double t : t_grid) {
    ReliabilityRow row{t, 0.0, std::vector<double>(n), std::vector<double>(n)};
    for (int i = 1; i <= n; ++i) {
      row.order_statistic_survival[i - 1] = survival_order_statistic(i, n, model, t);
      row.terms[i - 1] = sig.s[i - 1] * row.order_statistic_survival[i - 1];
      row.survival += row.terms[i - 1];
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

SurvivalEstimate simulate_system_survival(const StructureFunction& phi,
                                          const LifetimeModel& model,
                                          std::span<const double> t_grid,
                                          std::uint64_t trials, std::uint64_t seed) {
  require_semicoherent(phi, "survival simulation");
  if (trials == 0) throw ContractError("survival simulation needs at least one trial");
  const std::vector<double> grid(t_grid.begin(), t_grid.end());
  const auto counts = run_blocks(trials, grid.size(),
                                 [&](std::uint64_t block, std::uint64_t count, auto& out) {
                                   auto rng = block_engine(seed, block);
                                   FailureSimulator sim(phi);
                                   for (std::uint64_t t = 0; t < count; ++t) {
                                     // The quantile map is increasing, so the
                                     // failure order of the draws is the
                                     // failure order of the lifetimes.
                                     const double lifetime = model.quantile(sim.run(rng).uniform);
                                     for (std::size_t g = 0; g < grid.size(); ++g) {
                                       if (lifetime > grid[g]) ++out[g];
                                     }
                                   }
                                 });
  SurvivalEstimate est{std::vector<double>(grid.size()), std::vector<double>(grid.size())};
  const double total = static_cast<double>(trials);
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const double p = static_cast<double>(counts[g]) / total;
    est.survival[g] = p;
    est.standard_error[g] = std::sqrt(p * (1.0 - p) / total);
  }
  return est;
}

}  // namespace symapprox

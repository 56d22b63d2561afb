#include "symapprox/pseudo_boolean.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "symapprox/errors.hpp"

namespace symapprox {

namespace {

void require_arity(int n) {
  if (n < 1 || n > kMaxVariables) {
    throw ContractError("number of variables must lie in 1.." +
                        std::to_string(kMaxVariables) + ", got " + std::to_string(n));
  }
}

void require_same_arity(const PseudoBooleanFunction& a, const PseudoBooleanFunction& b) {
  if (a.arity() != b.arity()) {
    throw ContractError("arity mismatch: " + std::to_string(a.arity()) + " vs " +
                        std::to_string(b.arity()));
  }
}

}  // namespace

Mask mask_of(std::span<const int> members, int n) {
  Mask m = 0;
  for (int i : members) {
    if (i < 1 || i > n) {
      throw ContractError("member " + std::to_string(i) + " outside 1.." + std::to_string(n));
    }
    m |= Mask{1} << (i - 1);
  }
  return m;
}

std::vector<int> members_of(Mask m) {
  std::vector<int> out;
  for (int i = 0; m != 0; ++i, m >>= 1) {
    if (m & 1u) out.push_back(i + 1);
  }
  return out;
}

double binomial(int n, int k) noexcept {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return std::round(r);
}

// ---------------------------------------------------------------------------
// PseudoBooleanFunction

PseudoBooleanFunction::PseudoBooleanFunction(int n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  require_arity(n);
  if (values_.size() != cube_size(n)) {
    throw ContractError("table for n=" + std::to_string(n) + " needs " +
                        std::to_string(cube_size(n)) + " entries, got " +
                        std::to_string(values_.size()));
  }
  for (std::size_t b = 0; b < values_.size(); ++b) {
    if (!std::isfinite(values_[b])) {
      throw ContractError("non-finite value at mask " + std::to_string(b));
    }
  }
}

PseudoBooleanFunction PseudoBooleanFunction::constant(int n, double value) {
  require_arity(n);
  return {n, std::vector<double>(cube_size(n), value)};
}

PseudoBooleanFunction PseudoBooleanFunction::variable(int n, int i) {
  require_arity(n);
  if (i < 1 || i > n) throw ContractError("variable index out of range");
  return monomial(n, Mask{1} << (i - 1));
}

PseudoBooleanFunction PseudoBooleanFunction::monomial(int n, Mask subset) {
  require_arity(n);
  if (subset >= cube_size(n)) throw ContractError("monomial subset outside [n]");
  std::vector<double> v(cube_size(n));
  for (Mask b = 0; b < v.size(); ++b) v[b] = (b & subset) == subset ? 1.0 : 0.0;
  return {n, std::move(v)};
}

double PseudoBooleanFunction::evaluate_multilinear(std::span<const double> point) const {
  if (point.size() != static_cast<std::size_t>(n_)) {
    throw ContractError("point dimension does not match arity");
  }
  // Sum over vertices of f(b) * prod x_i^{b_i} (1 - x_i)^{1 - b_i}.
  double total = 0.0;
  for (Mask b = 0; b < values_.size(); ++b) {
    double weight = 1.0;
    for (int i = 0; i < n_; ++i) {
      weight *= (b >> i) & 1u ? point[i] : 1.0 - point[i];
    }
    total += weight * values_[b];
  }
  return total;
}

PseudoBooleanFunction operator+(const PseudoBooleanFunction& a, const PseudoBooleanFunction& b) {
  require_same_arity(a, b);
  std::vector<double> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.values_[i] + b.values_[i];
  return {a.n_, std::move(v)};
}

PseudoBooleanFunction operator-(const PseudoBooleanFunction& a, const PseudoBooleanFunction& b) {
  require_same_arity(a, b);
  std::vector<double> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.values_[i] - b.values_[i];
  return {a.n_, std::move(v)};
}

PseudoBooleanFunction operator*(double s, const PseudoBooleanFunction& f) {
  std::vector<double> v(f.values_);
  for (double& x : v) x *= s;
  return {f.n_, std::move(v)};
}

PseudoBooleanFunction PseudoBooleanFunction::operator+(double c) const {
  std::vector<double> v(values_);
  for (double& x : v) x += c;
  return {n_, std::move(v)};
}

// ---------------------------------------------------------------------------
// Set functions

SetFunctionView::SetFunctionView(int n, std::vector<double> values)
    : table_(n, std::move(values)) {}

SetFunctionView SetFunctionView::from_sparse(
    int n, std::span<const std::pair<std::vector<int>, double>> entries) {
  require_arity(n);
  std::vector<double> v(cube_size(n), 0.0);
  std::vector<bool> seen(v.size(), false);
  for (const auto& [members, value] : entries) {
    const Mask m = mask_of(members, n);
    if (seen[m]) {
      throw ContractError("subset with mask " + std::to_string(m) + " listed twice");
    }
    seen[m] = true;
    v[m] = value;
  }
  return {n, std::move(v)};
}

PseudoBooleanFunction from_set_function(SetFunctionView v) { return std::move(v.table_); }

// ---------------------------------------------------------------------------
// Moebius

double MoebiusRepresentation::operator[](Mask subset) const {
  const auto it = coefficients.find(subset);
  return it == coefficients.end() ? 0.0 : it->second;
}

int MoebiusRepresentation::degree() const {
  int d = 0;
  for (const auto& [m, a] : coefficients) {
    if (a != 0.0) d = std::max(d, cardinality(m));
  }
  return d;
}

std::vector<std::pair<Mask, double>> MoebiusRepresentation::by_cardinality() const {
  std::vector<std::pair<Mask, double>> out;
  for (const auto& [m, a] : coefficients) {
    if (a != 0.0) out.emplace_back(m, a);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return cardinality(x.first) < cardinality(y.first);
  });
  return out;
}

MoebiusRepresentation moebius_transform(const PseudoBooleanFunction& f) {
  const int n = f.arity();
  std::vector<double> a(f.values().begin(), f.values().end());
  for (int i = 0; i < n; ++i) {
    const Mask bit = Mask{1} << i;
    for (Mask b = 0; b < a.size(); ++b) {
      if (b & bit) a[b] -= a[b ^ bit];
    }
  }
  MoebiusRepresentation m{n, {}};
  for (Mask b = 0; b < a.size(); ++b) {
    if (a[b] != 0.0) m.coefficients.emplace_hint(m.coefficients.end(), b, a[b]);
  }
  return m;
}

PseudoBooleanFunction inverse_moebius(const MoebiusRepresentation& m) {
  require_arity(m.n);
  std::vector<double> v(cube_size(m.n), 0.0);
  for (const auto& [mask, a] : m.coefficients) {
    if (mask >= v.size()) throw ContractError("Moebius coefficient outside [n]");
    v[mask] = a;
  }
  for (int i = 0; i < m.n; ++i) {
    const Mask bit = Mask{1} << i;
    for (Mask b = 0; b < v.size(); ++b) {
      if (b & bit) v[b] += v[b ^ bit];
    }
  }
  return {m.n, std::move(v)};
}

// ---------------------------------------------------------------------------
// Order statistics, symmetry, group action

PseudoBooleanFunction order_statistic(int n, int k) {
  require_arity(n);
  if (k < 0 || k > n + 1) {
    throw std::out_of_range("order statistic index " + std::to_string(k) +
                            " outside 0.." + std::to_string(n + 1));
  }
  std::vector<double> v(cube_size(n));
  const int threshold = n - k + 1;
  for (Mask b = 0; b < v.size(); ++b) {
    v[b] = cardinality(b) >= threshold ? 1.0 : 0.0;
  }
  return {n, std::move(v)};
}

bool is_symmetric(const PseudoBooleanFunction& f, double tol) {
  const int n = f.arity();
  std::vector<double> lo(n + 1, INFINITY), hi(n + 1, -INFINITY);
  for (Mask b = 0; b < f.size(); ++b) {
    const int s = cardinality(b);
    lo[s] = std::min(lo[s], f(b));
    hi[s] = std::max(hi[s], f(b));
  }
  for (int s = 0; s <= n; ++s) {
    if (hi[s] - lo[s] > tol) return false;
  }
  return true;
}

Permutation::Permutation(std::vector<int> zero_based_image) : image_(std::move(zero_based_image)) {
  const int n = static_cast<int>(image_.size());
  std::vector<bool> hit(n, false);
  for (int v : image_) {
    if (v < 0 || v >= n || hit[v]) throw ContractError("not a permutation of [n]");
    hit[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  return Permutation(std::move(id));
}

Permutation Permutation::from_one_based(std::span<const int> image) {
  std::vector<int> z(image.begin(), image.end());
  for (int& v : z) --v;
  return Permutation(std::move(z));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw ContractError("permutation sizes differ");
  std::vector<int> out(image_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = image_[other.image_[i]];
  return Permutation(std::move(out));
}

PseudoBooleanFunction permute(const PseudoBooleanFunction& f, const Permutation& p) {
  const int n = f.arity();
  if (p.size() != n) throw ContractError("permutation size does not match arity");
  std::vector<double> g(f.size());
  for (Mask x = 0; x < g.size(); ++x) {
    // y_i = x_{pi(i)}
    Mask y = 0;
    for (int i = 0; i < n; ++i) {
      y |= ((x >> p(i)) & 1u) << i;
    }
    g[x] = f(y);
  }
  return {n, std::move(g)};
}

PseudoBooleanFunction symmetrize(const PseudoBooleanFunction& f) {
  const int n = f.arity();
  std::vector<double> level_sum(n + 1, 0.0);
  for (Mask b = 0; b < f.size(); ++b) level_sum[cardinality(b)] += f(b);
  for (int s = 0; s <= n; ++s) level_sum[s] /= binomial(n, s);
  std::vector<double> v(f.size());
  for (Mask b = 0; b < v.size(); ++b) v[b] = level_sum[cardinality(b)];
  return {n, std::move(v)};
}

PseudoBooleanFunction dual(const PseudoBooleanFunction& f) {
  const Mask full = static_cast<Mask>(f.size() - 1);
  std::vector<double> v(f.size());
  for (Mask b = 0; b < v.size(); ++b) v[b] = 1.0 - f(full ^ b);
  return {f.arity(), std::move(v)};
}

}  // namespace symapprox

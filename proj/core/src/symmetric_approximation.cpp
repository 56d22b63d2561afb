#include "symapprox/symmetric_approximation.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "symapprox/errors.hpp"

namespace symapprox {

namespace {

constexpr double kPivotThreshold = 1e-12;

void require_matching(int a, int b) {
  if (a != b) {
    throw ContractError("arity mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

// Dense row-major matrix with just enough surface for the Gram solve.
class Matrix {
 public:
  explicit Matrix(std::size_t m) : m_(m), data_(m * m, 0.0) {}
  double& operator()(std::size_t i, std::size_t j) { return data_[i * m_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * m_ + j]; }
  std::size_t size() const { return m_; }
  void swap_rows(std::size_t a, std::size_t b) {
    std::swap_ranges(data_.begin() + a * m_, data_.begin() + (a + 1) * m_,
                     data_.begin() + b * m_);
  }

 private:
  std::size_t m_;
  std::vector<double> data_;
};

// LU factorization with partial pivoting, kept for a refinement pass.
class LuSolver {
 public:
  explicit LuSolver(Matrix a) : lu_(std::move(a)), perm_(lu_.size()) {
    const std::size_t m = lu_.size();
    double max_diag = 0.0;
    for (std::size_t i = 0; i < m; ++i) max_diag = std::max(max_diag, std::abs(lu_(i, i)));
    const double threshold = kPivotThreshold * max_diag;
    for (std::size_t i = 0; i < m; ++i) perm_[i] = i;

    for (std::size_t col = 0; col < m; ++col) {
      std::size_t pivot = col;
      for (std::size_t r = col + 1; r < m; ++r) {
        if (std::abs(lu_(r, col)) > std::abs(lu_(pivot, col))) pivot = r;
      }
      if (!(std::abs(lu_(pivot, col)) >= threshold) || max_diag == 0.0) {
        throw DegeneracyError("Gram matrix is numerically singular at basis index " +
                                  std::to_string(col),
                              col);
      }
      if (pivot != col) {
        lu_.swap_rows(pivot, col);
        std::swap(perm_[pivot], perm_[col]);
      }
      const double d = lu_(col, col);
      for (std::size_t r = col + 1; r < m; ++r) {
        const double factor = lu_(r, col) / d;
        lu_(r, col) = factor;
        if (factor == 0.0) continue;
        for (std::size_t c = col + 1; c < m; ++c) lu_(r, c) -= factor * lu_(col, c);
      }
    }
  }

  std::vector<double> solve(std::span<const double> rhs) const {
    const std::size_t m = lu_.size();
    std::vector<double> x(m);
    for (std::size_t i = 0; i < m; ++i) {
      double acc = rhs[perm_[i]];
      for (std::size_t j = 0; j < i; ++j) acc -= lu_(i, j) * x[j];
      x[i] = acc;
    }
    for (std::size_t i = m; i-- > 0;) {
      double acc = x[i];
      for (std::size_t j = i + 1; j < m; ++j) acc -= lu_(i, j) * x[j];
      x[i] = acc / lu_(i, i);
    }
    return x;
  }

 private:
  Matrix lu_;
  std::vector<std::size_t> perm_;
};

PseudoBooleanFunction combine(int n, std::span<const PseudoBooleanFunction> basis,
                              std::span<const double> alpha) {
  std::vector<double> v(cube_size(n), 0.0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (alpha[i] == 0.0) continue;
    const auto b = basis[i].values();
    for (std::size_t x = 0; x < v.size(); ++x) v[x] += alpha[i] * b[x];
  }
  return {n, std::move(v)};
}

}  // namespace

SymmetricApproximation best_symmetric_approximation(const PseudoBooleanFunction& f,
                                                    const WeightDistribution& w) {
  require_matching(f.arity(), w.arity());
  const int n = f.arity();
  SymmetricApproximation a;
  a.n = n;
  a.levels = level_expectation(f, w);
  a.c.resize(n + 1);
  for (int j = 1; j <= n; ++j) a.c[j - 1] = a.levels[n - j + 1] - a.levels[n - j];
  a.c[n] = a.levels[0];
  a.mean = mean(f, w);
  return a;
}

PseudoBooleanFunction to_function(const SymmetricApproximation& a) { return from_profile(a.levels); }

PseudoBooleanFunction evaluate_l_statistic(const SymmetricApproximation& a) {
  const int n = a.n;
  // os_j(x) = 1 iff |x| >= n-j+1, so the value at level s is sum_{j >= n-s+1} c_j.
  std::vector<double> at_level(n + 1, 0.0);
  for (int s = 0; s <= n; ++s) {
    double acc = 0.0;
    for (int j = n + 1; j >= n - s + 1; --j) acc += a.c[j - 1];
    at_level[s] = acc;
  }
  return from_profile({n, std::move(at_level)});
}

CenteredForm centered_form(const SymmetricApproximation& a, const WeightDistribution& w) {
  require_matching(a.n, w.arity());
  return {a.mean, std::vector<double>(a.c.begin(), a.c.begin() + a.n)};
}

PseudoBooleanFunction evaluate_centered(const CenteredForm& form, const WeightDistribution& w) {
  const int n = w.arity();
  if (form.coefficients.size() != static_cast<std::size_t>(n)) {
    throw ContractError("centered form has wrong number of coefficients");
  }
  auto result = PseudoBooleanFunction::constant(n, form.constant);
  for (int j = 1; j <= n; ++j) {
    const auto os = order_statistic(n, j);
    const double centre = mean(os, w);
    result = result + form.coefficients[j - 1] * (os + (-centre));
  }
  return result;
}

SymmetricMultilinear to_multilinear(const SymmetricApproximation& a) {
  const int n = a.n;
  SymmetricMultilinear m{n, std::vector<double>(n + 1, 0.0)};
  for (int s = 0; s <= n; ++s) {
    double acc = 0.0;
    for (int t = 0; t <= s; ++t) {
      const double sign = (s - t) % 2 == 0 ? 1.0 : -1.0;
      acc += sign * binomial(s, t) * a.levels[t];
    }
    m.abar[s] = acc;
  }
  return m;
}

PseudoBooleanFunction evaluate_multilinear(const SymmetricMultilinear& m) {
  // At a vertex with |x| = t the monomials of degree s that fire number C(t, s).
  std::vector<double> at_level(m.n + 1, 0.0);
  for (int t = 0; t <= m.n; ++t) {
    double acc = 0.0;
    for (int s = 0; s <= t; ++s) acc += binomial(t, s) * m.abar[s];
    at_level[t] = acc;
  }
  return from_profile({m.n, std::move(at_level)});
}

std::vector<double> projection_coefficients(const PseudoBooleanFunction& f,
                                            const WeightDistribution& w,
                                            std::span<const PseudoBooleanFunction> basis) {
  require_matching(f.arity(), w.arity());
  const std::size_t m = basis.size();
  if (m == 0) throw ContractError("projection basis is empty");
  if (m > f.size()) throw ContractError("basis larger than the function space");
  for (const auto& b : basis) require_matching(b.arity(), f.arity());

  Matrix gram(m);
  std::vector<double> rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      gram(i, j) = gram(j, i) = inner_product(basis[i], basis[j], w);
    }
    rhs[i] = inner_product(f, basis[i], w);
  }

  const LuSolver solver(gram);
  std::vector<double> alpha = solver.solve(rhs);

  // One round of iterative refinement against the assembled Gram matrix.
  std::vector<double> residual(m);
  for (std::size_t i = 0; i < m; ++i) {
    double acc = rhs[i];
    for (std::size_t j = 0; j < m; ++j) acc -= gram(i, j) * alpha[j];
    residual[i] = acc;
  }
  const auto correction = solver.solve(residual);
  for (std::size_t i = 0; i < m; ++i) alpha[i] += correction[i];
  return alpha;
}

PseudoBooleanFunction brute_force_projection(const PseudoBooleanFunction& f,
                                             const WeightDistribution& w,
                                             std::span<const PseudoBooleanFunction> basis) {
  const auto alpha = projection_coefficients(f, w, basis);
  return combine(f.arity(), basis, alpha);
}

std::vector<PseudoBooleanFunction> order_statistic_basis(int n) {
  std::vector<PseudoBooleanFunction> basis;
  basis.reserve(n + 1);
  for (int j = 1; j <= n + 1; ++j) basis.push_back(order_statistic(n, j));
  return basis;
}

std::vector<PseudoBooleanFunction> monomial_basis(int n, int k) {
  if (k < 0 || k > n) throw std::out_of_range("degree bound must lie in 0..n");
  std::vector<Mask> subsets;
  for (Mask b = 0; b < cube_size(n); ++b) {
    if (cardinality(b) <= k) subsets.push_back(b);
  }
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](Mask x, Mask y) { return cardinality(x) < cardinality(y); });
  std::vector<PseudoBooleanFunction> basis;
  basis.reserve(subsets.size());
  for (Mask s : subsets) basis.push_back(PseudoBooleanFunction::monomial(n, s));
  return basis;
}

std::vector<PseudoBooleanFunction> elementary_symmetric_basis(int n, int k) {
  if (k < 0 || k > n) throw std::out_of_range("degree bound must lie in 0..n");
  std::vector<PseudoBooleanFunction> basis;
  for (int s = 0; s <= k; ++s) {
    std::vector<double> v(cube_size(n));
    for (Mask b = 0; b < v.size(); ++b) v[b] = binomial(cardinality(b), s);
    basis.emplace_back(n, std::move(v));
  }
  return basis;
}

PseudoBooleanFunction degree_k_projection(const PseudoBooleanFunction& f,
                                          const WeightDistribution& w, int k) {
  const auto basis = monomial_basis(f.arity(), k);
  return brute_force_projection(f, w, basis);
}

PseudoBooleanFunction symmetric_degree_k(const PseudoBooleanFunction& f,
                                         const WeightDistribution& w, int k) {
  if (!weight_is_symmetric(w)) {
    throw ContractError("symmetric degree-k approximation requires symmetric weights");
  }
  return to_function(best_symmetric_approximation(degree_k_projection(f, w, k), w));
}

CardinalityProfile dual_profile(const CardinalityProfile& levels) {
  const int n = levels.n;
  CardinalityProfile out{n, std::vector<double>(n + 1)};
  for (int s = 0; s <= n; ++s) out.values[s] = 1.0 - levels.values[n - s];
  return out;
}

}  // namespace symapprox

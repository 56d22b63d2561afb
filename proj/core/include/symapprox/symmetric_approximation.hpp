#pragma once

/// \file symmetric_approximation.hpp
/// Best weighted least-squares approximation of a pseudo-Boolean function by
/// a symmetric one, in closed form, plus a generic Gram-system projection
/// used to cross-check it and to build degree-k projections.
///
/// The symmetric functions are exactly the shifted L-statistics
/// sum_{j=1}^{n+1} c_j os_j. The projection A(f) has coefficients
///
///     c_j     = v(n-j+1) - v(n-j)   for j = 1..n
///     c_{n+1} = v(0) = f(0)
///
/// where v(s) = E(f(x) | |x| = s) under the weight distribution. Its value on
/// a vertex of cardinality s is v(s), so A(f) preserves every level
/// expectation of f.

#include <span>
#include <vector>

#include "symapprox/pseudo_boolean.hpp"
#include "symapprox/weights.hpp"

namespace symapprox {

struct SymmetricApproximation {
  int n = 0;
  /// c[j-1] holds c_j for j = 1..n+1.
  std::vector<double> c;
  CardinalityProfile levels;
  /// <f, 1> under the weights used for the projection.
  double mean = 0.0;

  double coefficient(int j) const { return c.at(static_cast<std::size_t>(j - 1)); }
};

/// Symmetric multilinear form: A(f)(x) = sum_S abar[|S|] prod_{i in S} x_i.
struct SymmetricMultilinear {
  int n = 0;
  std::vector<double> abar;  // length n+1
};

/// Centered shifted L-statistic view:
/// A(f) = constant + sum_{j=1}^n coefficients[j-1] (os_j - <os_j, 1>).
struct CenteredForm {
  double constant = 0.0;
  std::vector<double> coefficients;  // c_1..c_n
};

SymmetricApproximation best_symmetric_approximation(const PseudoBooleanFunction& f,
                                                    const WeightDistribution& w);

/// Dense table of the shifted L-statistic: value levels[|x|] at x.
PseudoBooleanFunction to_function(const SymmetricApproximation& a);

/// Evaluates sum_j c_j os_j directly from the coefficients.
PseudoBooleanFunction evaluate_l_statistic(const SymmetricApproximation& a);

CenteredForm centered_form(const SymmetricApproximation& a, const WeightDistribution& w);
/// Reassembles the centered form into a dense table.
PseudoBooleanFunction evaluate_centered(const CenteredForm& form, const WeightDistribution& w);

/// abar[s] is the s-th forward difference of the level profile at 0.
SymmetricMultilinear to_multilinear(const SymmetricApproximation& a);
PseudoBooleanFunction evaluate_multilinear(const SymmetricMultilinear& m);

/// Orthogonal projection of f onto span(basis) under <.,.>_w, by solving the
/// Gram system with partial pivoting. Throws DegeneracyError when a pivot
/// falls below 1e-12 times the largest Gram diagonal entry.
PseudoBooleanFunction brute_force_projection(const PseudoBooleanFunction& f,
                                             const WeightDistribution& w,
                                             std::span<const PseudoBooleanFunction> basis);

/// Projection coefficients alpha with sum_i alpha_i basis_i = projection.
std::vector<double> projection_coefficients(const PseudoBooleanFunction& f,
                                            const WeightDistribution& w,
                                            std::span<const PseudoBooleanFunction> basis);

/// {os_1, ..., os_{n+1}}.
std::vector<PseudoBooleanFunction> order_statistic_basis(int n);
/// Monomials prod_{i in S} x_i with |S| <= k, ordered by (|S|, mask).
std::vector<PseudoBooleanFunction> monomial_basis(int n, int k);
/// {1, e_1, ..., e_k} where e_s(x) = C(|x|, s) is the elementary symmetric
/// monomial sum of degree s.
std::vector<PseudoBooleanFunction> elementary_symmetric_basis(int n, int k);

/// Projection A_k onto functions of degree <= k (any weights).
PseudoBooleanFunction degree_k_projection(const PseudoBooleanFunction& f,
                                          const WeightDistribution& w, int k);

/// Best approximation by a symmetric function of degree <= k, computed as
/// A(A_k(f)). Only valid for symmetric weights; throws ContractError otherwise.
PseudoBooleanFunction symmetric_degree_k(const PseudoBooleanFunction& f,
                                         const WeightDistribution& w, int k);

/// Level profile of the dual function under self-dual weights:
/// out[s] = 1 - levels[n-s].
CardinalityProfile dual_profile(const CardinalityProfile& levels);

}  // namespace symapprox

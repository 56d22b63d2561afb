#pragma once

/// \file pseudo_boolean.hpp
/// Dense pseudo-Boolean functions on {0,1}^n and their standard views.
///
/// A vertex x of the cube is addressed by a bitmask: bit i (LSB first)
/// carries x_{i+1}. The same mask addresses the subset S = {i+1 : bit i set},
/// so popcount(mask) is both |x| and |S|.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace symapprox {

using Mask = std::uint32_t;

inline constexpr int kMaxVariables = 24;
inline constexpr double kDefaultSymmetryTolerance = 1e-9;

inline int cardinality(Mask m) noexcept { return __builtin_popcount(m); }

/// Number of vertices 2^n.
inline std::size_t cube_size(int n) noexcept { return std::size_t{1} << n; }

/// Mask of the subset given by 1-based member indices.
Mask mask_of(std::span<const int> members, int n);
std::vector<int> members_of(Mask m);

/// Binomial coefficient as a double; exact for the n <= 24 range used here.
double binomial(int n, int k) noexcept;

class PseudoBooleanFunction {
 public:
  /// Throws ContractError unless 1 <= n <= 24, values.size() == 2^n and
  /// every value is finite.
  PseudoBooleanFunction(int n, std::vector<double> values);

  static PseudoBooleanFunction constant(int n, double value);
  /// The projection x -> x_{i} (1-based variable index).
  static PseudoBooleanFunction variable(int n, int i);
  /// The monomial prod_{i in S} x_i for the subset encoded by `subset`.
  static PseudoBooleanFunction monomial(int n, Mask subset);

  int arity() const noexcept { return n_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator()(Mask x) const { return values_[x]; }
  std::span<const double> values() const noexcept { return values_; }

  /// Value of the multilinear extension at a point of [0,1]^n (or R^n).
  double evaluate_multilinear(std::span<const double> point) const;

  friend PseudoBooleanFunction operator+(const PseudoBooleanFunction& a,
                                         const PseudoBooleanFunction& b);
  friend PseudoBooleanFunction operator-(const PseudoBooleanFunction& a,
                                         const PseudoBooleanFunction& b);
  friend PseudoBooleanFunction operator*(double s, const PseudoBooleanFunction& f);
  PseudoBooleanFunction operator+(double c) const;

  bool operator==(const PseudoBooleanFunction&) const = default;

 private:
  int n_;
  std::vector<double> values_;
};

/// Set-function face of a pseudo-Boolean function: v(S) = f(1_S). Shares the
/// bitmask layout, so conversion either way is a move of the table.
class SetFunctionView {
 public:
  SetFunctionView(int n, std::vector<double> values);

  /// Builds v from (members, value) pairs; unlisted subsets are 0.
  /// Members are 1-based; a subset listed twice is rejected.
  static SetFunctionView from_sparse(
      int n, std::span<const std::pair<std::vector<int>, double>> entries);

  int arity() const noexcept { return table_.arity(); }
  double operator()(Mask subset) const { return table_(subset); }
  const PseudoBooleanFunction& table() const noexcept { return table_; }

 private:
  friend PseudoBooleanFunction from_set_function(SetFunctionView v);
  PseudoBooleanFunction table_;
};

PseudoBooleanFunction from_set_function(SetFunctionView v);

/// Sparse Moebius coefficients a_f(S), keyed by subset mask.
struct MoebiusRepresentation {
  int n = 0;
  std::map<Mask, double> coefficients;

  double operator[](Mask subset) const;
  /// Largest |S| carrying a nonzero coefficient; 0 for the zero function.
  int degree() const;
  /// Nonzero entries ordered by (|S|, mask).
  std::vector<std::pair<Mask, double>> by_cardinality() const;
};

/// Fast subset-difference butterfly, O(n 2^n). Exact zeros are dropped.
MoebiusRepresentation moebius_transform(const PseudoBooleanFunction& f);
/// Subset-sum (zeta) butterfly; inverse of moebius_transform.
PseudoBooleanFunction inverse_moebius(const MoebiusRepresentation& m);

/// os_k: 1 iff popcount(x) >= n-k+1. os_0 == 0 and os_{n+1} == 1.
/// Throws std::out_of_range unless 0 <= k <= n+1.
PseudoBooleanFunction order_statistic(int n, int k);

/// True iff values agree within `tol` on every cardinality level.
bool is_symmetric(const PseudoBooleanFunction& f,
                  double tol = kDefaultSymmetryTolerance);

/// A permutation of [n], stored 0-based: image()[i] == pi(i+1) - 1.
class Permutation {
 public:
  explicit Permutation(std::vector<int> zero_based_image);
  static Permutation identity(int n);
  /// Takes the image pi(1),...,pi(n) in 1-based notation.
  static Permutation from_one_based(std::span<const int> image);

  int size() const noexcept { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[i]; }
  std::span<const int> image() const noexcept { return image_; }

  /// (this o other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

/// pi(f)(x_1..x_n) = f(x_{pi(1)},...,x_{pi(n)}).
PseudoBooleanFunction permute(const PseudoBooleanFunction& f, const Permutation& p);

/// Average of pi(f) over the symmetric group, computed level by level.
PseudoBooleanFunction symmetrize(const PseudoBooleanFunction& f);

/// f^d(x) = 1 - f(1 - x).
PseudoBooleanFunction dual(const PseudoBooleanFunction& f);

}  // namespace symapprox

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symapprox {

/// Violated caller contract: mismatched dimensions, failed preconditions.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input outside the mathematical domain of an operation (nonpositive
/// weight, non-Boolean structure value, nonzero empty coalition, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A Gram system whose pivot fell below the singularity threshold.
class DegeneracyError : public std::runtime_error {
 public:
  DegeneracyError(const std::string& what, std::size_t basis_index)
      : std::runtime_error(what), basis_index_(basis_index) {}

  /// Index into the basis sequence where elimination broke down.
  std::size_t basis_index() const noexcept { return basis_index_; }

 private:
  std::size_t basis_index_;
};

}  // namespace symapprox

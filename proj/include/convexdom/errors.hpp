#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace convexdom {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A theorem hypothesis or constructor precondition does not hold.
/// Carries every violated condition, not just the first one found.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations);
  explicit ValidationError(const std::string& violation)
      : ValidationError(std::vector<std::string>{violation}) {}

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// Base for failures that happen while computing, after inputs were accepted.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of a function (0 to a negative power, ...).
class DomainError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Argument sits on a pole (arctan at ±i, tan at π/2 + kπ, ...).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Result would overflow double range.
class RangeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// No implemented evaluation method covers the parameters.
class UnsupportedParametersError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A denominator of ψ₁/ψ₂ vanished.
class SingularInputError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A tracked fractional power hit zero, so its branch is no longer defined.
class BranchCollapseError : public NumericError {
 public:
  BranchCollapseError(std::size_t ray, std::size_t index, const std::string& what);
  std::size_t ray() const noexcept { return ray_; }
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t ray_;
  std::size_t index_;
};

/// An iterative method stopped before reaching its tolerance.
class NonConvergenceError : public NumericError {
 public:
  NonConvergenceError(const std::string& what, double estimate)
      : NumericError(what), estimate_(estimate) {}
  /// Achieved error estimate, or the partial sum for truncated series.
  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

/// A point lies too close to a closed curve to decide its winding number.
class IndeterminateError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// The radial ODE integrator could not keep its step above the floor.
class StiffnessError : public NumericError {
 public:
  StiffnessError(std::size_t ray, double radius, const std::string& what);
  std::size_t ray() const noexcept { return ray_; }
  double radius() const noexcept { return radius_; }

 private:
  std::size_t ray_;
  double radius_;
};

}  // namespace convexdom

#pragma once

#include <stdexcept>
#include <string>

namespace zetaquad {

/// Argument outside the domain of a function (log of zero, 0^k with Re k <= 0).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation at a pole (Gamma at non-positive integers, zeta at s = 1).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A route was asked to work outside the parameter region where it converges.
class RegionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Requested table or order exceeds a fixed cap.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// An iterative evaluator gave up before reaching its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zetaquad

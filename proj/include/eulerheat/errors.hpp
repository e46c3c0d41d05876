#pragma once

#include <stdexcept>
#include <string>

namespace eulerheat {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Invalid parameter combination (e.g. Kummer b at a non-positive integer).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A gamma argument or a density quotient hits a pole.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iteration or series did not reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A residual region or stencil touches a singular locus of a family.
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Non-finite values or budget exhaustion inside the time integrator.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eulerheat

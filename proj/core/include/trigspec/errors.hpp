#pragma once

#include <stdexcept>
#include <string>

namespace trigspec {

/// Precondition or argument-range violation (bad n, k out of band, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Base for failures of the numerics themselves rather than of the inputs.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A series could not reach its tail tolerance within the allowed number of terms.
class TruncationCapError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// The class normalizer H(r,k) cancelled to (relative) zero.
class DegenerateKernelError : public NumericalError {
 public:
  DegenerateKernelError(int k, double h)
      : NumericalError("degenerate kernel: H for alias class " + std::to_string(k) +
                       " is " + std::to_string(h)),
        alias_class_(k),
        value_(h) {}

  int alias_class() const noexcept { return alias_class_; }
  double value() const noexcept { return value_; }

 private:
  int alias_class_;
  double value_;
};

/// Trapezoid refinement did not settle; carries the last two estimates.
class QuadratureFailure : public NumericalError {
 public:
  QuadratureFailure(const std::string& what, double previous, double last)
      : NumericalError(what), previous_(previous), last_(last) {}

  double previous() const noexcept { return previous_; }
  double last() const noexcept { return last_; }

 private:
  double previous_;
  double last_;
};

/// Operation needs closed-form coefficients the signal does not have.
class UnsupportedSignalError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace trigspec

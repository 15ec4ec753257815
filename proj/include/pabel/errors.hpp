#pragma once

#include <stdexcept>
#include <string>

namespace pabel {

/// Arithmetic failure inside a domain (division by zero, non-invertible element).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Operands from different domains, bad signatures, malformed input.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Specialization hit a vanishing denominator; the caller should resample.
struct PoleError : DomainError {
  using DomainError::DomainError;
};

/// The chosen specialization is degenerate for the requested pipeline stage.
struct DegenerateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pabel

#pragma once

#include <stdexcept>
#include <string>

namespace twoadic {

/// An argument lies outside the mathematical domain of an operation
/// (zero valuation, c(g) for g = +-1, half-exponent of the identity, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The floating-point path was asked for a modulus it cannot represent.
class PrecisionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A bounded computation (naive order scan, orbit enumeration) hit its cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed sweep specification or command-line input.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace twoadic

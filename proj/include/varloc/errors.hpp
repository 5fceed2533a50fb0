#pragma once

#include <stdexcept>
#include <string>

namespace varloc {

/// Precondition violated by the caller (bad index, empty input, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two anchors coincide, so the pair has no local frame.
class DegeneratePair : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A baseline solver met a rank-deficient system it cannot resolve.
class SolverDegenerate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested computation exceeds its configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid benchmark configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace varloc

#pragma once

#include <stdexcept>
#include <string>

namespace polboost {

/// Input outside the physical domain of an operation (superluminal speed,
/// non-null momentum, invalid helicity, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Two states that cannot be told apart unambiguously (parallel vectors).
class DegeneratePairError : public DomainError {
public:
  using DomainError::DomainError;
};

/// Quadrature grid too coarse to meet the density-matrix invariants.
class IntegrationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range run configuration.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace polboost

#pragma once

#include <stdexcept>
#include <string>

namespace fockbench {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Requested basis dimension is not usable (e.g. D < 2).
class InvalidDimensionError : public Error {
 public:
  using Error::Error;
};

/// Two objects live on truncated bases of different dimension.
class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

/// A state construction would leave too much probability past the truncation.
class InsufficientDimensionError : public Error {
 public:
  InsufficientDimensionError(const std::string& msg, double tail_mass)
      : Error(msg), tail_mass(tail_mass) {}
  double tail_mass;
};

/// State vector or density matrix violates its normalization invariants.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// Moment data that no physical state can produce (|dL| > dH).
class InconsistentMomentsError : public Error {
 public:
  using Error::Error;
};

/// Time grid does not satisfy an operation's precondition.
class InvalidGridError : public Error {
 public:
  using Error::Error;
};

/// Run configuration rejected before any computation (e.g. step size).
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Integration left the trusted regime (trace drift, negativity).
class IntegrationDivergedError : public Error {
 public:
  using Error::Error;
};

}  // namespace fockbench

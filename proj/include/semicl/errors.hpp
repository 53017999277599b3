#pragma once

#include <stdexcept>
#include <string>

namespace semicl {

/// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A parameter violates its domain (wrong sign, out of supported range).
class DomainError : public Error {
public:
  DomainError(const std::string& field, const std::string& why)
      : Error(field + ": " + why), field_(field) {}
  const std::string& field() const { return field_; }

private:
  std::string field_;
};

/// A runtime precondition failed, e.g. (1 + s*E) < 0 for the linear family.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// Invalid solver/quadrature configuration (tolerances, step limits).
class ConfigError : public Error {
public:
  using Error::Error;
};

/// Operation not defined for this deformation family.
class UnsupportedDeformation : public Error {
public:
  using Error::Error;
};

/// Quantity is mathematically undefined on the requested domain
/// (e.g. the exact partition integral for linear deformation with s < 0).
class UnsupportedDomain : public Error {
public:
  using Error::Error;
};

/// Closed-form expression evaluated outside its validity region.
class OutOfDomain : public Error {
public:
  OutOfDomain(const std::string& msg, double n_star) : Error(msg), n_star_(n_star) {}
  /// Fractional level index bounding the validity region, when meaningful.
  double n_star() const { return n_star_; }

private:
  double n_star_;
};

/// Endpoint singularity x^p with p <= -1: the integral does not exist.
class SingularityTooStrong : public Error {
public:
  using Error::Error;
};

/// A quadrature-backed result did not reach the requested tolerance.
class ToleranceNotMet : public Error {
public:
  using Error::Error;
};

/// A user-supplied callable failed or returned a non-finite value.
class EvaluationError : public Error {
public:
  using Error::Error;
};

}  // namespace semicl

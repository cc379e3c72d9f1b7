#pragma once

#include <stdexcept>
#include <string>

namespace qagt {

// Sampled parameters violate a genericity requirement (pole-grid collision,
// vanishing structure-series denominator, singular Gram matrix, ...).
// Drivers treat this as "resample and retry", never as a check failure.
class NonGenericError : public std::runtime_error {
public:
  explicit NonGenericError(const std::string& what) : std::runtime_error(what) {}
};

// A product factor that must be invertible evaluated to zero.  Subtype of
// NonGenericError so resampling loops catch it uniformly.
class VanishingFactorError : public NonGenericError {
public:
  explicit VanishingFactorError(const std::string& what) : NonGenericError(what) {}
};

// Exact linear algebra: no unique solution (rank deficiency or inconsistency).
class SingularMatrixError : public std::runtime_error {
public:
  explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

// Rational-function reconstruction from samples failed.
class InterpolationError : public std::runtime_error {
public:
  explicit InterpolationError(const std::string& what) : std::runtime_error(what) {}
};

// A denominator did not split into the expected rational linear factors.
class FactorizationError : public std::runtime_error {
public:
  explicit FactorizationError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid campaign configuration (maps to CLI exit code 2).
class ConfigError : public std::invalid_argument {
public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace qagt

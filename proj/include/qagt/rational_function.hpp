#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qagt/errors.hpp"
#include "qagt/polynomial.hpp"

namespace qagt {

/// Evaluation of a rational function at a pole.
class PoleError : public std::domain_error {
public:
  PoleError(const Rational& location, const std::string& what)
      : std::domain_error(what), location_(location) {}
  const Rational& location() const { return location_; }

private:
  Rational location_;
};

class NotAPoleError : public std::domain_error {
public:
  explicit NotAPoleError(const std::string& what) : std::domain_error(what) {}
};

/// A pole of multiplicity >= 2 where a simple pole was required.  On any
/// reduced level-n denominator this firing is itself a check failure.
class HigherOrderPoleError : public std::domain_error {
public:
  explicit HigherOrderPoleError(const std::string& what) : std::domain_error(what) {}
};

/// Reduced ratio of polynomials in Q: denominator monic and nonzero,
/// gcd(numerator, denominator) = 1.
class RationalFunction {
public:
  RationalFunction() : num_(), den_(Rational(1)) {}
  RationalFunction(const Rational& constant) : num_(constant), den_(Rational(1)) {}
  RationalFunction(int constant) : RationalFunction(Rational(constant)) {}
  explicit RationalFunction(const Polynomial& p) : num_(p), den_(Rational(1)) {}

  /// Canonical constructor: cancels the gcd and normalizes the denominator
  /// to be monic.  Throws on a zero denominator.
  static RationalFunction reduce(const Polynomial& num, const Polynomial& den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Exact value at x; throws PoleError if x is a pole.
  Rational evaluate(const Rational& x) const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(const std::string& var = "Q") const;

private:
  Polynomial num_, den_;
};

/// Simple-pole expansion: f = sum residue/(Q - pole) + polynomial_part.
struct PoleDecomposition {
  std::vector<std::pair<Rational, Rational>> terms;  // (pole, residue), poles distinct
  Polynomial polynomial_part;

  RationalFunction recombine() const;
};

/// Residue at a simple pole x0 of the reduced denominator.  Writing
/// den = (Q - x0) * dtilde by exact synthetic division, the residue is
/// num(x0)/dtilde(x0).  Throws NotAPoleError / HigherOrderPoleError.
Rational residue_simple(const RationalFunction& f, const Rational& x0);

/// Partial fractions over simple rational poles.  Pole locations are found
/// among the caller-supplied candidates (no general factorization); a
/// repeated factor or an unfactored remainder raises FactorizationError.
PoleDecomposition partial_fractions(const RationalFunction& f,
                                    std::span<const Rational> pole_candidates);

/// Peels candidate roots off a polynomial: returns the multiplicity map of
/// the roots found and the unfactored cofactor.
std::pair<std::map<Rational, int>, Polynomial> factor_linear_roots(
    const Polynomial& p, std::span<const Rational> candidates);

/// Exact rational-function reconstruction from point samples with degree
/// bounds (deg_num, deg_den).  Requires at least deg_num + deg_den + 2
/// samples with pairwise distinct x; every sample (held-out ones included)
/// is validated against the result.  Throws InterpolationError
/// ("interpolation failed" / "degree bound too small").
RationalFunction cauchy_interpolate(std::span<const std::pair<Rational, Rational>> samples,
                                    int deg_num, int deg_den);

}  // namespace qagt

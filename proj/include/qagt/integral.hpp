#pragma once

#include <utility>
#include <vector>

#include "qagt/param_point.hpp"
#include "qagt/partition.hpp"
#include "qagt/rational_function.hpp"

namespace qagt {

/// Residue extraction at a pole of order != 1 after exact cancellation.
/// On an admissible pole assignment at generic parameters this firing
/// falsifies the simple-pole structure of the integrand.
class ResidueOrderError : public std::runtime_error {
public:
  explicit ResidueOrderError(const std::string& what) : std::runtime_error(what) {}
};

/// Product of linear factors in one active variable x:
///   scalar * x^var_power * prod (x - c_i)^{e_i}.
struct UnivariateFactorList {
  Rational scalar{1};
  int var_power = 0;
  std::vector<std::pair<Rational, int>> factors;  // (constant, exponent)

  /// Exact value at x; a vanishing denominator factor raises PoleError.
  Rational evaluate(const Rational& x) const;
};

/// P(x; a, p) = x / ((x-a)(x-1/a)(x-pa)(x-p/a)).
UnivariateFactorList p_factor(const Rational& a, const Rational& p);

/// omega(y; q1, q2, q3) = (y-1)^2 (y-q3)(y-1/q3) / ((y-q1)(y-1/q1)(y-q2)(y-1/q2))
/// evaluated at a known ratio y.  Throws PoleError naming the colliding
/// denominator factor.
Rational omega_value(const Rational& y, const Rational& q1, const Rational& q2,
                     const Rational& q3);

/// omega(x / v; q1, q2, q3) as a factor list in the still-symbolic numerator
/// variable x, the denominator endpoint being the known value v.
UnivariateFactorList omega_factor(const Rational& v, const Rational& q1, const Rational& q2,
                                  const Rational& q3);

/// Ordered pole specialization for the pair (lambda, mu): lambda-boxes in
/// row-major order at sigma q^{j-1} t^{-(i-1)}, then mu-boxes in row-major
/// order at sigma^{-1} q^{j-1} t^{-(i-1)}.  Values must be pairwise
/// distinct; coincidences are rejected as non-generic.
struct PoleAssignment {
  std::vector<Rational> values;  // x_1..x_n in specialization order
  Partition lambda, mu;
};

PoleAssignment pole_assignment(const Partition& lambda, const Partition& mu,
                               const ParamPoint& pt);

/// Iterated simple-pole residue of the level integrand along the given
/// assignment, including the prefactor [(1-q/t)/((1-q)(1-1/t))]^n.  At every
/// step the residual pole order after exact numerator/denominator
/// cancellation is asserted to be 1 (ResidueOrderError otherwise).
Rational iterated_residue_along(const PoleAssignment& assignment, const ParamPoint& pt);

/// Residue sum member for the pair (lambda, mu) in the canonical order.
Rational iterated_residue(const Partition& lambda, const Partition& mu, const ParamPoint& pt);

/// Sum over all pole configurations at level n; equals Z_n evaluated at
/// Q = sigma^2.
Rational level_sum_via_residues(int n, const ParamPoint& pt);

}  // namespace qagt

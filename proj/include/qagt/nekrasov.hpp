#pragma once

#include <span>
#include <utility>
#include <vector>

#include "qagt/param_point.hpp"
#include "qagt/partition.hpp"
#include "qagt/rational_function.hpp"

namespace qagt {

/// Nekrasov bifundamental factor
///   N_{lambda,mu}(Q) = prod_{(i,j) in mu}     (1 - Q q^{lambda_i - j} t^{mu'_j - i + 1})
///                    * prod_{(i,j) in lambda} (1 - Q q^{-mu_i + j - 1} t^{-lambda'_j + i}).
/// N_{empty,empty} = 1.
Rational n_factor(const Partition& lambda, const Partition& mu, const Rational& q_val,
                  const ParamPoint& pt);

/// Fixed-point weight Z_{lambda,mu}(Q) =
///   1 / (N_{ll}(1) N_{mm}(1) N_{lm}(Q) N_{ml}(1/Q)).
/// Throws VanishingFactorError naming the factor that vanished.
Rational z_pair(const Partition& lambda, const Partition& mu, const Rational& q_val,
                const ParamPoint& pt);

/// The same weight as an exact rational function of Q (denominator kept in
/// factored form internally, returned reduced).
RationalFunction z_pair_symbolic(const Partition& lambda, const Partition& mu,
                                 const ParamPoint& pt);

/// Graded level-n part Z_n(Q) = sum_{|lambda|+|mu|=n} Z_{lambda,mu}(Q),
/// assembled over the common factored denominator and reduced exactly.
/// At generic (q, t) the reduced denominator is squarefree with roots on
/// the grid {q^r t^{-s} : 1 <= rs <= n}; off-grid factors of individual
/// summands must cancel in the sum.
RationalFunction z_level_symbolic(int n, const ParamPoint& pt);

/// Z_n evaluated at a point by direct summation of z_pair values — an
/// evaluation route independent of the symbolic assembly.  Fails with
/// VanishingFactorError when q_val hits a pole of an individual summand.
Rational z_level_value(int n, const Rational& q_val, const ParamPoint& pt);

/// Recursion kernel
///   G(r,s) = -sgn(r) q^r t^{-s} prod_{(i,j) != (0,0), -|r| <= i <= |r|-1,
///            -|s| <= j <= |s|-1} 1 / (1 - q^i t^{-j}),     r*s >= 1.
Rational g_kernel(int r, int s, const ParamPoint& pt);

/// Z_n(Q) - delta_{n,0} - sum_{1 <= rs <= n} G(r,s) Z_{n-rs}(q^r t^s) / (Q - q^r t^{-s});
/// identically zero when the level functions satisfy the recursion.
RationalFunction recursion_residual(int n, const ParamPoint& pt);

/// Shared core of the recursion check: the family holds the level functions
/// F_0..F_n (F_k at index k).  Shifted arguments q^r t^{+s} are evaluated on
/// the reduced family members.
RationalFunction recursion_residual_from_family(std::span<const RationalFunction> family, int n,
                                                const ParamPoint& pt);

/// lhs: residue of Z_n(Q) at Q = q^r t^{-s} via exact synthetic division.
/// rhs: G(r,s) * Z_{n-rs}(q^r t^s) via the kernel product.
std::pair<Rational, Rational> residue_check(int r, int s, int n, const ParamPoint& pt);

/// lhs: Z_{lambda,mu}(Q); rhs: Z_{mu,lambda}(1/Q).
std::pair<Rational, Rational> duality_check(const Partition& lambda, const Partition& mu,
                                            const Rational& q_val, const ParamPoint& pt);

/// Terms x^n Z_n(Q) of the instanton expansion for n = 0..n_max, where
/// x stands for Lambda^4 t / q.
std::vector<Rational> z_series(const Rational& x, int n_max, const Rational& q_val,
                               const ParamPoint& pt);

}  // namespace qagt

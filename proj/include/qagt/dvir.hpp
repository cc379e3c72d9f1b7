#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "qagt/linalg.hpp"
#include "qagt/param_point.hpp"
#include "qagt/partition.hpp"
#include "qagt/rational_function.hpp"

namespace qagt {

/// Structure constants of the deformed Virasoro algebra at an exact (q, t)
/// sample.  f(x) = sum_l f_l x^l = exp(sum_{m>=1} (1-q)(1-1/t)/(1+p^m) x^m/m)
/// with p = q/t, truncated at max_order; central(r) is the coefficient of
/// the delta term in [T_r, T_{-r}].
class StructureSeries {
public:
  StructureSeries(int max_order, const ParamPoint& pt);

  int max_order() const { return static_cast<int>(f_.size()) - 1; }
  const Rational& f(int l) const { return f_.at(static_cast<size_t>(l)); }
  /// (1-q)(1-1/t)(p^r - p^{-r}) / (1-p)
  Rational central(int r) const;

private:
  std::vector<Rational> f_;
  Rational q_, t_, p_;
};

/// Element of the level-truncated Verma module M_h: finite combination of
/// the basis vectors indexed by partitions.
struct VermaVector {
  std::map<Partition, Rational> coeffs;
  Rational h;
  int cap = 0;

  bool is_zero() const { return coeffs.empty(); }
  Rational coeff(const Partition& p) const {
    const auto it = coeffs.find(p);
    return it == coeffs.end() ? Rational(0) : it->second;
  }
  void add_term(const Partition& p, const Rational& c);
};

/// Normal-ordering engine for the deformed Virasoro action on the Verma
/// module with highest weight h = sigma + 1/sigma.  A positive mode kills
/// the highest-weight vector, T_0 acts by h on it, and an out-of-order
/// adjacent pair is commuted via
///   T_n T_m = T_m T_n - sum_{l>=1} f_l (T_{n-l} T_{m+l} - T_{m-l} T_{n+l})
///             - central(n) delta_{m+n,0},
/// every generated monomial being pruned as soon as a positive mode exceeds
/// the level of the state it acts on.  Results are memoized per
/// (mode, basis partition); instances are confined to one thread.
class VermaModule {
public:
  VermaModule(const ParamPoint& pt, int level_cap);

  const Rational& h() const { return h_; }
  int cap() const { return cap_; }
  const StructureSeries& structure() const { return fs_; }

  VermaVector vacuum() const;
  VermaVector basis_vector(const Partition& p) const;

  /// T_k applied to v, expanded in the canonical basis.
  VermaVector apply_mode(int k, const VermaVector& v);

  /// Coefficient of the highest-weight vector.
  Rational vacuum_coefficient(const VermaVector& v) const { return v.coeff(Partition()); }

private:
  const std::map<Partition, Rational>& apply_to_basis(int k, const Partition& lam);

  Rational h_;
  int cap_;
  StructureSeries fs_;
  std::map<std::pair<int, Partition>, std::map<Partition, Rational>> memo_;
  int depth_ = 0;
};

/// Level-n Gram matrix of the contravariant form, rows/columns in the
/// canonical partition order: entry(mu, lambda) = <h| T_mu T_{-lambda} |h>.
struct GramMatrix {
  int level = 0;
  std::vector<Partition> order;
  Matrix entries;
};

GramMatrix gram_matrix(VermaModule& module, int n);

/// Kac determinant factor
///   prod_{r,s>=1, rs<=n} [(h^2 - h_{r,s}^2) (1-q^r)(1-t^{-r})/(q^r+t^r)]^{p(n-rs)}
/// with h_{r,s}^2 = t^r q^{-s} + t^{-r} q^s + 2 (rational, no square roots).
Rational kac_factorized_product(int n, const ParamPoint& pt, const Rational& h);

struct KacReport {
  int level = 0;
  std::vector<Rational> h_values;
  std::vector<Rational> ratios;   // det / factorized product, one per h
  bool h_independent = false;
  Rational fitted_constant;       // the common ratio when h_independent
};

/// det S^(n) divided by the factorized product must not depend on h at
/// fixed (q, t); the constant itself is fitted, not assumed.  Every point
/// must satisfy h^2 != h_{r,s}^2 for rs <= n (NonGenericError otherwise).
KacReport kac_check(int n, std::span<const ParamPoint> pts_varying_h);

/// Whittaker vector |G> = sum_n Lambda^{2n} |G_n>: T_1 |G_n> = |G_{n-1}>,
/// T_k |G_n> = 0 for 2 <= k <= n, |G_0> = |h>.  Coefficients per level.
struct GaiottoVector {
  std::vector<std::map<Partition, Rational>> levels;
};

/// Solves the mode-condition linear systems level by level; the solution
/// must be unique (NonGenericError otherwise, since genericity was assumed).
GaiottoVector gaiotto_coeffs(VermaModule& module, int n_max);

/// Re-applies T_1..T_n to the solved coefficients and checks the defining
/// conditions exactly; returns false with no side effects on failure.
bool verify_gaiotto(VermaModule& module, const GaiottoVector& g);

/// Level-n norm of the Whittaker vector: the (1^n, 1^n) entry of the
/// inverse Gram matrix, cross-checked against the direct pairing
/// c^T S c of the solved coefficients.
Rational gaiotto_norm_level(VermaModule& module, int n);

struct AgtLevelRecord {
  int level = 0;
  Rational gaiotto_side;   // (S^(n))^{-1}(1^n, 1^n)
  Rational nekrasov_side;  // Z_n(sigma^2)
  bool pass = false;
};

struct AgtReport {
  Rational prefactor;      // frozen at level 1: gaiotto = prefactor^n * nekrasov
  std::string prefactor_name;
  bool prefactor_determined = false;
  std::vector<AgtLevelRecord> levels;
  bool all_pass = false;
};

/// Compares the inverse-Gram norms against Z_n(sigma^2) for n <= n_max,
/// allowing one global monomial prefactor in {t/q, q/t, 1} determined at
/// n = 1 and then frozen.
AgtReport agt_check(int n_max, const ParamPoint& pt);

struct WhittakerRecursionReport {
  std::vector<RationalFunction> f_levels;  // reconstructed F_n(Q)
  std::vector<bool> residual_zero;         // recursion residual per level
  bool all_pass = false;
};

/// Reconstructs F_n(Q) = (q/t)^n (S^(n))^{-1}(1^n,1^n) by exact rational
/// interpolation over sigma samples (pole candidates: the level-n grid) and
/// checks that the family satisfies the same recursion as the Nekrasov
/// levels.  sigma_values must be pairwise distinct and generic.
WhittakerRecursionReport whittaker_recursion_check(int n_max, const Rational& q,
                                                   const Rational& t,
                                                   std::span<const Rational> sigma_values);

}  // namespace qagt

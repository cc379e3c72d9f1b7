#pragma once

#include <optional>
#include <vector>

#include "qagt/errors.hpp"
#include "qagt/rational.hpp"

namespace qagt {

/// Index (r, s) of the candidate pole Q = q^r t^{-s}; r and s are either
/// both positive or both negative (r*s >= 1).
struct PolePair {
  int r = 1;
  int s = 1;
  int product() const { return r * s; }
};

/// All pole pairs with 1 <= r*s <= n: the positive pairs ordered by
/// (r*s, r) ascending, followed by their sign mirrors in the same order.
std::vector<PolePair> pole_pairs(int n);

/// Exact rational sample (q, t) with an optional sigma carrying Q = sigma^2
/// and h = sigma + 1/sigma, so that square roots of Q never appear.
class ParamPoint {
public:
  ParamPoint(Rational q, Rational t);
  ParamPoint(Rational q, Rational t, Rational sigma);

  const Rational& q() const { return q_; }
  const Rational& t() const { return t_; }
  Rational p() const { return q_ / t_; }

  bool has_sigma() const { return sigma_.has_value(); }
  const Rational& sigma() const;
  /// Q = sigma^2
  Rational big_q() const;
  /// h = sigma + 1/sigma
  Rational h() const;

  /// q^a * t^b
  Rational qt_monomial(int a, int b) const { return q_.pow(a) * t_.pow(b); }
  /// Candidate pole location q^r t^{-s}.
  Rational pole_location(PolePair rs) const { return qt_monomial(rs.r, -rs.s); }
  /// Shifted evaluation point q^r t^{+s} appearing in the recursion kernel.
  Rational shifted_point(PolePair rs) const { return qt_monomial(rs.r, rs.s); }

  /// Checks the genericity needed for computations up to the given level:
  /// q, t away from 0, ±1, q != ±t, the candidate pole grid
  /// {q^r t^{-s} : 1 <= rs <= level} pairwise distinct and != 1, and, when
  /// sigma is present, sigma outside {0, ±1} with Q = sigma^2 off that grid.
  /// Throws NonGenericError.
  void require_generic(int level) const;

  /// Stronger sigma condition used by the iterated-residue engine and the
  /// sampler: Q = sigma^2 differs from every monomial q^a t^b with
  /// |a|, |b| <= window.  A violation can make an inside-contour pole
  /// collide with an outside-contour one.
  bool sigma_window_clear(int window) const;
  /// Throwing form of sigma_window_clear.
  void require_sigma_window(int window) const;

private:
  Rational q_, t_;
  std::optional<Rational> sigma_;
};

}  // namespace qagt

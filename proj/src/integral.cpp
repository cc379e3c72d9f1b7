#include "qagt/integral.hpp"

#include <algorithm>
#include <set>

namespace qagt {

Rational UnivariateFactorList::evaluate(const Rational& x) const {
  Rational acc = scalar * x.pow(var_power);
  for (const auto& [c, e] : factors) {
    const Rational v = x - c;
    if (v.is_zero()) {
      if (e < 0) throw PoleError(x, "factor list pole at " + x.to_string());
      return Rational(0);
    }
    acc *= v.pow(e);
  }
  return acc;
}

UnivariateFactorList p_factor(const Rational& a, const Rational& p) {
  if (a.is_zero()) throw std::domain_error("p_factor: a must be nonzero");
  UnivariateFactorList f;
  f.var_power = 1;
  f.factors = {{a, -1}, {a.inverse(), -1}, {p * a, -1}, {p * a.inverse(), -1}};
  return f;
}

UnivariateFactorList omega_factor(const Rational& v, const Rational& q1, const Rational& q2,
                                  const Rational& q3) {
  for (const Rational& c : {q1, q2, q3})
    if (c.is_zero()) throw std::domain_error("omega_factor: parameters must be nonzero");
  UnivariateFactorList f;
  f.factors = {{v, 2},
               {v * q3, 1},
               {v * q3.inverse(), 1},
               {v * q1, -1},
               {v * q1.inverse(), -1},
               {v * q2, -1},
               {v * q2.inverse(), -1}};
  return f;
}

Rational omega_value(const Rational& y, const Rational& q1, const Rational& q2,
                     const Rational& q3) {
  const std::pair<Rational, const char*> denoms[4] = {
      {q1, "y = q1"}, {q1.inverse(), "y = 1/q1"}, {q2, "y = q2"}, {q2.inverse(), "y = 1/q2"}};
  for (const auto& [c, name] : denoms)
    if (y == c) throw PoleError(y, std::string("omega pole: ") + name);
  const Rational num =
      (y - Rational(1)).pow(2) * (y - q3) * (y - q3.inverse());
  const Rational den = (y - q1) * (y - q1.inverse()) * (y - q2) * (y - q2.inverse());
  return num / den;
}

PoleAssignment pole_assignment(const Partition& lambda, const Partition& mu,
                               const ParamPoint& pt) {
  const Rational sigma = pt.sigma();
  PoleAssignment a;
  a.lambda = lambda;
  a.mu = mu;
  for (const Box& b : lambda.boxes())
    a.values.push_back(sigma * pt.qt_monomial(b.col - 1, -(b.row - 1)));
  for (const Box& b : mu.boxes())
    a.values.push_back(sigma.inverse() * pt.qt_monomial(b.col - 1, -(b.row - 1)));
  std::set<Rational> distinct(a.values.begin(), a.values.end());
  if (distinct.size() != a.values.size())
    throw NonGenericError("pole assignment collision for lambda=" + lambda.to_string() +
                          " mu=" + mu.to_string());
  return a;
}

Rational iterated_residue_along(const PoleAssignment& assignment, const ParamPoint& pt) {
  const size_t n = assignment.values.size();
  const Rational q = pt.q(), t = pt.t();
  const Rational p_tilde = q.inverse() * t;  // second argument of P
  // omega(y; q, 1/t, t/q)
  const Rational w1 = q, w2 = t.inverse(), w3 = p_tilde;

  // Univariate view per variable: P's own denominator factors now, factors
  // from omega(x_k / x_i) joining as each earlier x_i gets specialized.
  std::vector<UnivariateFactorList> pending(n);
  for (size_t k = 0; k < n; ++k) pending[k] = p_factor(pt.sigma(), p_tilde);

  Rational scalar(1);
  for (size_t k = 0; k < n; ++k) {
    const Rational& v = assignment.values[k];
    int pole_order = 0;
    Rational value(1);
    for (const auto& [c, e] : pending[k].factors) {
      if (c == v)
        pole_order -= e;
      else
        value *= (v - c).pow(e);
    }
    if (pole_order != 1) {
      // A degenerate sigma (Q = sigma^2 on a q^a t^b monomial) makes poles
      // from opposite sides of a contour collide; classify that as a
      // non-generic sample rather than a structure violation.
      const int extent = std::max({assignment.lambda.part(1), assignment.lambda.length(),
                                   assignment.mu.part(1), assignment.mu.length()});
      const std::string what = "non-simple pole at step " + std::to_string(k + 1) + " (order " +
                               std::to_string(pole_order) + ") for lambda=" +
                               assignment.lambda.to_string() +
                               " mu=" + assignment.mu.to_string();
      if (!pt.sigma_window_clear(extent + 2)) throw NonGenericError(what + " [degenerate sigma]");
      throw ResidueOrderError(what);
    }
    scalar *= pending[k].scalar * v.pow(pending[k].var_power) * value;
    for (size_t j = k + 1; j < n; ++j) {
      const UnivariateFactorList w = omega_factor(v, w1, w2, w3);
      pending[j].scalar *= w.scalar;
      pending[j].factors.insert(pending[j].factors.end(), w.factors.begin(), w.factors.end());
    }
  }

  const Rational prefactor =
      (Rational(1) - q * t.inverse()) /
      ((Rational(1) - q) * (Rational(1) - t.inverse()));
  return prefactor.pow(static_cast<long>(n)) * scalar;
}

Rational iterated_residue(const Partition& lambda, const Partition& mu, const ParamPoint& pt) {
  return iterated_residue_along(pole_assignment(lambda, mu, pt), pt);
}

Rational level_sum_via_residues(int n, const ParamPoint& pt) {
  if (n < 0) throw std::domain_error("level_sum_via_residues: negative level");
  Rational sum(0);
  for (const auto& [lambda, mu] : partition_pairs(n))
    sum += iterated_residue(lambda, mu, pt);
  return sum;
}

}  // namespace qagt

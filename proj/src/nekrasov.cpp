#include "qagt/nekrasov.hpp"

#include <map>

namespace qagt {

namespace {

// Exponents (a, b) of one factor (1 - Q q^a t^b); mu-boxes first, then
// lambda-boxes, matching the two products in n_factor.
std::vector<std::pair<int, int>> n_factor_exponents(const Partition& lambda,
                                                    const Partition& mu) {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(lambda.weight() + mu.weight()));
  for (const Box& b : mu.boxes())
    out.emplace_back(lambda.part(b.row) - b.col, mu.conjugate_part(b.col) - b.row + 1);
  for (const Box& b : lambda.boxes())
    out.emplace_back(-mu.part(b.row) + b.col - 1, -lambda.conjugate_part(b.col) + b.row);
  return out;
}

// Z_{lambda,mu}(Q) = scale^{-1} * Q^n / prod (Q - root)^{mult}.
struct FactoredWeight {
  Rational scale;                 // N_ll(1) N_mm(1) prod(-c_k)
  std::map<Rational, int> roots;  // denominator root -> multiplicity
  int num_power = 0;              // numerator Q^n
};

FactoredWeight z_pair_factored(const Partition& lambda, const Partition& mu,
                               const ParamPoint& pt) {
  const int n = lambda.weight() + mu.weight();
  FactoredWeight w;
  w.num_power = n;
  w.scale = n_factor(lambda, lambda, Rational(1), pt) * n_factor(mu, mu, Rational(1), pt);
  if (w.scale.is_zero())
    throw VanishingFactorError("z_pair: N(1) self factor vanishes at lambda=" +
                               lambda.to_string() + " mu=" + mu.to_string());
  // N_{lambda,mu}(Q): each factor (1 - c Q) = -c (Q - 1/c).
  for (const auto& [a, b] : n_factor_exponents(lambda, mu)) {
    const Rational c = pt.qt_monomial(a, b);
    w.scale *= -c;
    ++w.roots[c.inverse()];
  }
  // N_{mu,lambda}(1/Q): each factor (1 - d/Q) = (Q - d)/Q.
  for (const auto& [a, b] : n_factor_exponents(mu, lambda)) ++w.roots[pt.qt_monomial(a, b)];
  return w;
}

const char* factor_name(int which) {
  switch (which) {
    case 0: return "N_{lambda,lambda}(1)";
    case 1: return "N_{mu,mu}(1)";
    case 2: return "N_{lambda,mu}(Q)";
    default: return "N_{mu,lambda}(1/Q)";
  }
}

}  // namespace

Rational n_factor(const Partition& lambda, const Partition& mu, const Rational& q_val,
                  const ParamPoint& pt) {
  Rational prod(1);
  for (const auto& [a, b] : n_factor_exponents(lambda, mu))
    prod *= Rational(1) - q_val * pt.qt_monomial(a, b);
  return prod;
}

Rational z_pair(const Partition& lambda, const Partition& mu, const Rational& q_val,
                const ParamPoint& pt) {
  if (q_val.is_zero()) throw VanishingFactorError("z_pair: Q must be nonzero");
  const Rational factors[4] = {
      n_factor(lambda, lambda, Rational(1), pt),
      n_factor(mu, mu, Rational(1), pt),
      n_factor(lambda, mu, q_val, pt),
      n_factor(mu, lambda, q_val.inverse(), pt),
  };
  Rational prod(1);
  for (int k = 0; k < 4; ++k) {
    if (factors[k].is_zero())
      throw VanishingFactorError(std::string("z_pair: factor ") + factor_name(k) +
                                 " vanishes at lambda=" + lambda.to_string() +
                                 " mu=" + mu.to_string() + " Q=" + q_val.to_string());
    prod *= factors[k];
  }
  return prod.inverse();
}

RationalFunction z_pair_symbolic(const Partition& lambda, const Partition& mu,
                                 const ParamPoint& pt) {
  const FactoredWeight w = z_pair_factored(lambda, mu, pt);
  Polynomial den(w.scale);
  for (const auto& [root, mult] : w.roots)
    for (int k = 0; k < mult; ++k) den = den * Polynomial::linear(root);
  return RationalFunction::reduce(Polynomial::monomial(Rational(1), w.num_power), den);
}

RationalFunction z_level_symbolic(int n, const ParamPoint& pt) {
  if (n < 0) throw std::domain_error("z_level_symbolic: negative level");
  if (n == 0) return RationalFunction(1);

  std::vector<FactoredWeight> weights;
  for (const auto& [lambda, mu] : partition_pairs(n))
    weights.push_back(z_pair_factored(lambda, mu, pt));

  // Common denominator: every root at its maximal multiplicity.
  std::map<Rational, int> common;
  for (const FactoredWeight& w : weights)
    for (const auto& [root, mult] : w.roots)
      if (int& m = common[root]; mult > m) m = mult;

  Polynomial numerator;
  for (const FactoredWeight& w : weights) {
    Polynomial term = Polynomial::monomial(w.scale.inverse(), w.num_power);
    for (const auto& [root, mult] : common) {
      const auto it = w.roots.find(root);
      const int missing = mult - (it == w.roots.end() ? 0 : it->second);
      for (int k = 0; k < missing; ++k) term = term * Polynomial::linear(root);
    }
    numerator += term;
  }

  // Cancel shared linear factors by exact root peeling; the off-grid
  // cofactor must divide out entirely, which the pole suite verifies on the
  // reduced result.
  std::map<Rational, int> remaining = common;
  for (auto& [root, mult] : remaining) {
    while (mult > 0) {
      auto [quot, rem] = numerator.divide_by_linear(root);
      if (!rem.is_zero()) break;
      numerator = std::move(quot);
      --mult;
    }
  }
  Polynomial den(Rational(1));
  for (const auto& [root, mult] : remaining)
    for (int k = 0; k < mult; ++k) den = den * Polynomial::linear(root);
  return RationalFunction::reduce(numerator, den);
}

Rational z_level_value(int n, const Rational& q_val, const ParamPoint& pt) {
  Rational sum(0);
  for (const auto& [lambda, mu] : partition_pairs(n)) sum += z_pair(lambda, mu, q_val, pt);
  return sum;
}

Rational g_kernel(int r, int s, const ParamPoint& pt) {
  if (r * s < 1) throw std::domain_error("g_kernel: need r*s >= 1");
  Rational prod(1);
  const int ra = r > 0 ? r : -r;
  const int sa = s > 0 ? s : -s;
  for (int i = -ra; i <= ra - 1; ++i) {
    for (int j = -sa; j <= sa - 1; ++j) {
      if (i == 0 && j == 0) continue;
      const Rational f = Rational(1) - pt.qt_monomial(i, -j);
      if (f.is_zero())
        throw NonGenericError("g_kernel: factor 1 - q^" + std::to_string(i) + " t^" +
                              std::to_string(-j) + " vanishes");
      prod *= f;
    }
  }
  const Rational pre = pt.qt_monomial(r, -s);
  return (r > 0 ? -pre : pre) / prod;
}

RationalFunction recursion_residual_from_family(std::span<const RationalFunction> family, int n,
                                                const ParamPoint& pt) {
  if (n < 0 || family.size() < static_cast<size_t>(n) + 1)
    throw std::domain_error("recursion_residual: family must hold levels 0..n");
  RationalFunction rhs = (n == 0) ? RationalFunction(1) : RationalFunction(0);
  for (const PolePair& rs : pole_pairs(n)) {
    Rational shifted_value;
    try {
      shifted_value = family[static_cast<size_t>(n - rs.product())].evaluate(pt.shifted_point(rs));
    } catch (const PoleError& e) {
      throw NonGenericError("recursion: shifted point " + pt.shifted_point(rs).to_string() +
                            " is a pole of the level-" + std::to_string(n - rs.product()) +
                            " function");
    }
    const Rational coeff = g_kernel(rs.r, rs.s, pt) * shifted_value;
    rhs = rhs + RationalFunction::reduce(Polynomial(coeff),
                                         Polynomial::linear(pt.pole_location(rs)));
  }
  return family[static_cast<size_t>(n)] - rhs;
}

RationalFunction recursion_residual(int n, const ParamPoint& pt) {
  std::vector<RationalFunction> family;
  family.reserve(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) family.push_back(z_level_symbolic(k, pt));
  return recursion_residual_from_family(family, n, pt);
}

std::pair<Rational, Rational> residue_check(int r, int s, int n, const ParamPoint& pt) {
  const int product = r * s;
  if (product < 1 || product > n) throw std::domain_error("residue_check: need 1 <= rs <= n");
  const RationalFunction zn = z_level_symbolic(n, pt);
  const Rational lhs = residue_simple(zn, pt.pole_location(PolePair{r, s}));
  const RationalFunction z_shift = z_level_symbolic(n - product, pt);
  const Rational rhs =
      g_kernel(r, s, pt) * z_shift.evaluate(pt.shifted_point(PolePair{r, s}));
  return {lhs, rhs};
}

std::pair<Rational, Rational> duality_check(const Partition& lambda, const Partition& mu,
                                            const Rational& q_val, const ParamPoint& pt) {
  return {z_pair(lambda, mu, q_val, pt), z_pair(mu, lambda, q_val.inverse(), pt)};
}

std::vector<Rational> z_series(const Rational& x, int n_max, const Rational& q_val,
                               const ParamPoint& pt) {
  if (n_max < 0) throw std::domain_error("z_series: negative n_max");
  std::vector<Rational> out;
  out.reserve(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) out.push_back(x.pow(n) * z_level_value(n, q_val, pt));
  return out;
}

}  // namespace qagt

#include "qagt/rational_function.hpp"

#include <algorithm>

#include "qagt/linalg.hpp"

namespace qagt {

RationalFunction RationalFunction::reduce(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  RationalFunction f;
  if (num.is_zero()) return f;
  const Polynomial g = Polynomial::gcd(num, den);
  Polynomial n = num.divmod(g).first;
  Polynomial d = den.divmod(g).first;
  const Rational lead_inv = d.leading().inverse();
  f.num_ = n * lead_inv;
  f.den_ = d * lead_inv;
  return f;
}

Rational RationalFunction::evaluate(const Rational& x) const {
  const Rational d = den_.evaluate(x);
  if (d.is_zero()) throw PoleError(x, "pole at " + x.to_string());
  return num_.evaluate(x) / d;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r(*this);
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction::reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction::reduce(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction::reduce(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational function");
  return RationalFunction::reduce(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

RationalFunction PoleDecomposition::recombine() const {
  RationalFunction acc{polynomial_part};
  for (const auto& [pole, residue] : terms)
    acc = acc + RationalFunction::reduce(Polynomial(residue), Polynomial::linear(pole));
  return acc;
}

Rational residue_simple(const RationalFunction& f, const Rational& x0) {
  auto [dtilde, rem] = f.den().divide_by_linear(x0);
  if (!rem.is_zero()) throw NotAPoleError("not a pole: " + x0.to_string());
  const Rational d = dtilde.evaluate(x0);
  if (d.is_zero()) throw HigherOrderPoleError("higher-order pole at " + x0.to_string());
  return f.num().evaluate(x0) / d;
}

std::pair<std::map<Rational, int>, Polynomial> factor_linear_roots(
    const Polynomial& p, std::span<const Rational> candidates) {
  std::map<Rational, int> roots;
  Polynomial rest = p;
  for (const Rational& c : candidates) {
    if (roots.count(c)) continue;  // duplicates in the candidate list
    for (;;) {
      auto [quot, rem] = rest.divide_by_linear(c);
      if (!rem.is_zero()) break;
      ++roots[c];
      rest = std::move(quot);
    }
  }
  return {std::move(roots), std::move(rest)};
}

PoleDecomposition partial_fractions(const RationalFunction& f,
                                    std::span<const Rational> pole_candidates) {
  PoleDecomposition out;
  auto [quot, rem] = f.num().divmod(f.den());
  out.polynomial_part = std::move(quot);
  if (rem.is_zero() && f.den().degree() == 0) return out;

  auto [roots, cofactor] = factor_linear_roots(f.den(), pole_candidates);
  if (cofactor.degree() != 0)
    throw FactorizationError("denominator does not split over the candidate poles; remainder " +
                             cofactor.to_string());
  for (const auto& [root, mult] : roots) {
    if (mult > 1)
      throw FactorizationError("repeated factor (Q - " + root.to_string() + ")^" +
                               std::to_string(mult));
  }
  const RationalFunction proper = RationalFunction::reduce(rem, f.den());
  for (const auto& [root, mult] : roots)
    out.terms.emplace_back(root, residue_simple(proper, root));
  return out;
}

RationalFunction cauchy_interpolate(std::span<const std::pair<Rational, Rational>> samples,
                                    int deg_num, int deg_den) {
  if (deg_num < 0 || deg_den < 0)
    throw InterpolationError("interpolation failed: negative degree bound");
  const int unknowns = deg_num + deg_den + 2;
  if (static_cast<int>(samples.size()) < unknowns)
    throw InterpolationError("interpolation failed: need at least " + std::to_string(unknowns) +
                             " samples");
  // Homogeneous system num(x_k) - y_k * den(x_k) = 0 over the coefficient
  // vector [a_0..a_dn, b_0..b_dd]; the last two samples are held out for
  // validation only.
  const size_t rows = samples.size() - 2;
  Matrix A(rows, static_cast<size_t>(unknowns));
  for (size_t k = 0; k < rows; ++k) {
    const auto& [x, y] = samples[k];
    Rational xp(1);
    for (int i = 0; i <= deg_num; ++i) {
      A.at(k, static_cast<size_t>(i)) = xp;
      xp *= x;
    }
    xp = Rational(1);
    for (int j = 0; j <= deg_den; ++j) {
      A.at(k, static_cast<size_t>(deg_num + 1 + j)) = -(y * xp);
      xp *= x;
    }
  }
  const auto basis = nullspace_basis(A);
  if (basis.empty()) throw InterpolationError("interpolation failed: no nontrivial solution");

  for (const auto& v : basis) {
    std::vector<Rational> nc(v.begin(), v.begin() + deg_num + 1);
    std::vector<Rational> dc(v.begin() + deg_num + 1, v.end());
    const Polynomial den{std::move(dc)};
    if (den.is_zero()) continue;
    const RationalFunction f = RationalFunction::reduce(Polynomial(std::move(nc)), den);
    bool ok = true;
    for (const auto& [x, y] : samples) {
      try {
        if (f.evaluate(x) != y) { ok = false; break; }
      } catch (const PoleError&) {
        ok = false;
        break;
      }
    }
    if (ok) return f;
  }
  throw InterpolationError("degree bound too small");
}

}  // namespace qagt

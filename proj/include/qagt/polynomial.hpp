#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qagt/rational.hpp"

namespace qagt {

/// Dense univariate polynomial in the distinguished variable Q with exact
/// rational coefficients.  coeff(k) is the coefficient of Q^k.  The zero
/// polynomial has an empty coefficient list; otherwise the leading
/// coefficient is nonzero.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(const Rational& constant) { c_.push_back(constant); trim(); }
  Polynomial(int constant) : Polynomial(Rational(constant)) {}
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial variable() { return monomial(Rational(1), 1); }
  static Polynomial monomial(const Rational& coeff, int degree);
  /// Q - root
  static Polynomial linear(const Rational& root);

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(k)] : Rational(0);
  }
  const Rational& leading() const;
  std::span<const Rational> coeffs() const { return c_; }

  Rational evaluate(const Rational& x) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Rational& s);
  friend Polynomial operator*(const Rational& s, const Polynomial& a) { return a * s; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Exact long division: returns (quotient, remainder) with
  /// *this == quotient * den + remainder and deg remainder < deg den.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& den) const;

  /// Synthetic division by (Q - root): returns (quotient, remainder value).
  std::pair<Polynomial, Rational> divide_by_linear(const Rational& root) const;

  Polynomial derivative() const;
  Polynomial monic() const;

  /// Monic polynomial gcd by the Euclidean algorithm.
  static Polynomial gcd(Polynomial a, Polynomial b);

  std::string to_string(const std::string& var = "Q") const;

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

}  // namespace qagt

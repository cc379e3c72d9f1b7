#include "qagt/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace qagt {

Polynomial Polynomial::monomial(const Rational& coeff, int degree) {
  if (degree < 0) throw std::domain_error("Polynomial: negative degree");
  if (coeff.is_zero()) return Polynomial();
  std::vector<Rational> c(static_cast<size_t>(degree) + 1, Rational(0));
  c.back() = coeff;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::linear(const Rational& root) {
  return Polynomial(std::vector<Rational>{-root, Rational(1)});
}

const Rational& Polynomial::leading() const {
  if (c_.empty()) throw std::domain_error("Polynomial: leading coefficient of zero");
  return c_.back();
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Rational& s) {
  if (s.is_zero()) return Polynomial();
  Polynomial r(a);
  for (auto& c : r.c_) c *= s;
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& den) const {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  if (degree() < den.degree()) return {Polynomial(), *this};
  std::vector<Rational> rem(c_);
  const int dq = degree() - den.degree();
  std::vector<Rational> quot(static_cast<size_t>(dq) + 1, Rational(0));
  const Rational lead_inv = den.leading().inverse();
  for (int k = dq; k >= 0; --k) {
    const Rational q = rem[static_cast<size_t>(k + den.degree())] * lead_inv;
    quot[static_cast<size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= den.degree(); ++j)
      rem[static_cast<size_t>(k + j)] -= q * den.c_[static_cast<size_t>(j)];
  }
  rem.resize(static_cast<size_t>(std::max(den.degree(), 0)));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::pair<Polynomial, Rational> Polynomial::divide_by_linear(const Rational& root) const {
  if (is_zero()) return {Polynomial(), Rational(0)};
  std::vector<Rational> quot(c_.size() - 1, Rational(0));
  Rational carry(0);
  for (size_t k = c_.size(); k-- > 1;) {
    carry = c_[k] + carry * root;
    quot[k - 1] = carry;
  }
  return {Polynomial(std::move(quot)), c_[0] + carry * root};
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<Rational> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long>(k));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = r.monic();  // renormalizing each step keeps coefficients small
  }
  return a.monic();
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[static_cast<size_t>(k)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << c.to_string();
    if (k == 1)
      os << "*" << var;
    else if (k > 1)
      os << "*" << var << "^" << k;
  }
  return os.str();
}

}  // namespace qagt

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qagt {

using BigInt = mpz_class;

/// Arbitrary-precision exact rational scalar, the only scalar type in the
/// library.  Always canonical: gcd(|num|, den) = 1, den > 0, zero is 0/1.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(const BigInt& n) : v_(n) {}

  Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Parses "a/b" or "a" (base 10).
  static Rational from_string(std::string_view s) {
    mpq_class v;
    if (v.set_str(std::string(s), 10) != 0 || v.get_den() == 0)
      throw std::domain_error("Rational: cannot parse '" + std::string(s) + "'");
    v.canonicalize();
    Rational r;
    r.v_ = std::move(v);
    return r;
  }

  const BigInt& num() const { return v_.get_num(); }
  const BigInt& den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1 / v_));
  }

  /// Exact integer power; negative exponents require a nonzero base.
  /// Convention: 0^0 = 1.
  Rational pow(long e) const {
    if (e == 0) return Rational(1);
    if (e < 0) return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    Rational r;
    r.v_ = mpq_class(n, d);  // already canonical: gcd(n,d)=1, d>0
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  /// Canonical "num/den" form, e.g. "-3/2", "5/1", "0/1".
  std::string to_string() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;  // invariant: canonicalized
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace qagt

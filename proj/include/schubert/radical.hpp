#pragma once

// Numbers a + b*sqrt(q) + c*sqrt(q') with rational a, b, c and fixed rational
// q, q' >= 0. Signs are decided exactly by squaring.

#include <string>

#include "schubert/arith.hpp"

namespace schubert {

/// Sign of a + b*sqrt(q), q >= 0.
int sign_one_radical(const Rational& a, const Rational& b, const Rational& q);
/// Sign of a + b*sqrt(q) + c*sqrt(q2), q, q2 >= 0.
int sign_two_radicals(const Rational& a, const Rational& b, const Rational& q, const Rational& c, const Rational& q2);

class RadicalNumber {
 public:
  RadicalNumber(Rational q, Rational q2);
  RadicalNumber(Rational a, Rational b, Rational c, Rational q, Rational q2);
  static RadicalNumber rational(const Rational& a, const Rational& q, const Rational& q2) { return {a, 0, 0, q, q2}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& q() const { return q_; }
  const Rational& q2() const { return q2_; }

  int sign() const { return sign_two_radicals(a_, b_, q_, c_, q2_); }
  bool is_rational() const { return b_ == 0 && c_ == 0; }

  RadicalNumber& operator+=(const RadicalNumber& o);
  RadicalNumber& operator-=(const RadicalNumber& o);
  RadicalNumber& operator*=(const Rational& s);
  friend RadicalNumber operator+(RadicalNumber x, const RadicalNumber& y) { return x += y; }
  friend RadicalNumber operator-(RadicalNumber x, const RadicalNumber& y) { return x -= y; }
  friend RadicalNumber operator*(const Rational& s, RadicalNumber x) { return x *= s; }
  RadicalNumber operator-() const { return {-a_, -b_, -c_, q_, q2_}; }

  /// Product; throws ConsistencyError if a sqrt(q)*sqrt(q') cross term survives.
  friend RadicalNumber operator*(const RadicalNumber& x, const RadicalNumber& y);

  /// Exact equality of values (same radicands assumed).
  friend bool operator==(const RadicalNumber& x, const RadicalNumber& y) { return (x - y).sign() == 0; }

  std::string str() const;

 private:
  void require_compatible(const RadicalNumber& o) const;
  Rational a_, b_, c_, q_, q2_;
};

}  // namespace schubert

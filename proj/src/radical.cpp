#include "schubert/radical.hpp"

namespace schubert {

int sign_one_radical(const Rational& a, const Rational& b, const Rational& q) {
  if (q < 0) throw DomainError("radicand must be nonnegative");
  const int sa = sgn(a);
  const int sb = q == 0 ? 0 : sgn(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the term with the larger square wins.
  const int order = cmp(a * a, b * b * q);
  if (order > 0) return sa;
  if (order < 0) return sb;
  return 0;
}

int sign_two_radicals(const Rational& a, const Rational& b, const Rational& q, const Rational& c, const Rational& q2) {
  if (q2 < 0) throw DomainError("radicand must be nonnegative");
  const int sx = sign_one_radical(a, b, q);
  const int sy = q2 == 0 ? 0 : sgn(c);
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  // x = a + b sqrt(q), y = c sqrt(q2): x^2 - y^2 = (a^2 + b^2 q - c^2 q2) + 2ab sqrt(q).
  const int diff = sign_one_radical(a * a + b * b * q - c * c * q2, 2 * a * b, q);
  if (diff > 0) return sx;
  if (diff < 0) return sy;
  return 0;
}

RadicalNumber::RadicalNumber(Rational q, Rational q2) : RadicalNumber(0, 0, 0, std::move(q), std::move(q2)) {}

RadicalNumber::RadicalNumber(Rational a, Rational b, Rational c, Rational q, Rational q2)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), q_(std::move(q)), q2_(std::move(q2)) {
  if (q_ < 0 || q2_ < 0) throw DomainError("radicands must be nonnegative");
}

void RadicalNumber::require_compatible(const RadicalNumber& o) const {
  if (q_ != o.q_ || q2_ != o.q2_) throw ConsistencyError("radical numbers over different radicands");
}

RadicalNumber& RadicalNumber::operator+=(const RadicalNumber& o) {
  require_compatible(o);
  a_ += o.a_;
  b_ += o.b_;
  c_ += o.c_;
  return *this;
}

RadicalNumber& RadicalNumber::operator-=(const RadicalNumber& o) {
  require_compatible(o);
  a_ -= o.a_;
  b_ -= o.b_;
  c_ -= o.c_;
  return *this;
}

RadicalNumber& RadicalNumber::operator*=(const Rational& s) {
  a_ *= s;
  b_ *= s;
  c_ *= s;
  return *this;
}

RadicalNumber operator*(const RadicalNumber& x, const RadicalNumber& y) {
  x.require_compatible(y);
  if (x.b_ * y.c_ + x.c_ * y.b_ != 0) throw ConsistencyError("product has a sqrt(q)*sqrt(q') cross term");
  return {x.a_ * y.a_ + x.b_ * y.b_ * x.q_ + x.c_ * y.c_ * x.q2_, x.a_ * y.b_ + x.b_ * y.a_,
          x.a_ * y.c_ + x.c_ * y.a_, x.q_, x.q2_};
}

std::string RadicalNumber::str() const {
  std::string out;
  auto term = [&](const Rational& coeff, const std::string& radical) {
    if (coeff == 0) return;
    if (!out.empty()) out += coeff > 0 ? " + " : " - ";
    else if (coeff < 0) out += "-";
    Rational mag = abs(coeff);
    if (radical.empty()) out += to_string(mag);
    else out += (mag == 1 ? "" : to_string(mag) + "*") + radical;
  };
  term(a_, "");
  term(b_, "sqrt(" + to_string(q_) + ")");
  term(c_, "sqrt(" + to_string(q2_) + ")");
  return out.empty() ? "0" : out;
}

}  // namespace schubert

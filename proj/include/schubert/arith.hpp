#pragma once

// Exact scalar types and the error vocabulary shared by every module.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

using Integer = mpz_class;
using Rational = mpq_class;

/// Invalid input: a precondition of a public operation was violated.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal invariant failed. Indicates a bug, never bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Integer binomial(long n, long m);
Integer factorial(unsigned long n);

/// Canonical "p/q" form (q > 0, gcd 1); integers render without a denominator.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

/// Parses "p", "p/q", or "-p/q". Throws DomainError on malformed text or q = 0.
Rational parse_rational(std::string_view text);

Rational make_rational(long num, long den = 1);

inline int sign(const Integer& x) { return sgn(x); }
inline int sign(const Rational& x) { return sgn(x); }

/// Scales a rational vector to a primitive integer vector with the same direction.
std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v);

}  // namespace schubert

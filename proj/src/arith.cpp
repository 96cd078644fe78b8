#include "schubert/arith.hpp"

#include <cctype>

namespace schubert {

Integer binomial(long n, long m) {
  if (m < 0 || n < 0 || m > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(m));
  return out;
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw DomainError("malformed rational '" + std::string(whole) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw DomainError("malformed rational '" + std::string(whole) + "'");
    }
  }
  std::string s(text[0] == '+' ? text.substr(1) : text);
  return Integer(s, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Rational make_rational(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v) {
  Integer lcm_den = 1;
  for (const auto& x : v) lcm_den = lcm(lcm_den, Rational(x).get_den());
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    Rational scaled = x * lcm_den;
    scaled.canonicalize();
    out.push_back(scaled.get_num());
    g = gcd(g, scaled.get_num());
  }
  if (g > 1) {
    for (auto& x : out) x /= g;
  }
  return out;
}

}  // namespace schubert

#include <doctest.h>
#include <mpfr.h>

#include <random>

#include "schubert/radical.hpp"

using namespace schubert;

namespace {

// Enclosure of a + b sqrt(q) + c sqrt(q2) at 256 bits with directed rounding.
class Enclosure {
 public:
  Enclosure() {
    for (auto* x : {&lo_, &hi_, &t_, &s_}) mpfr_init2(*x, 256);
  }
  ~Enclosure() {
    for (auto* x : {&lo_, &hi_, &t_, &s_}) mpfr_clear(*x);
  }

  // -1 / +1 when the interval excludes zero, 0 when it straddles it.
  int sign(const Rational& a, const Rational& b, const Rational& q, const Rational& c, const Rational& q2) {
    mpfr_set_q(lo_, a.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, a.get_mpq_t(), MPFR_RNDU);
    add_term(b, q);
    add_term(c, q2);
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    return 0;
  }

 private:
  void add_term(const Rational& coeff, const Rational& rad) {
    if (coeff == 0) return;
    // lower bound of coeff*sqrt(rad): round sqrt toward the side that lowers the product
    const bool pos = coeff > 0;
    mpfr_set_q(s_, rad.get_mpq_t(), pos ? MPFR_RNDD : MPFR_RNDU);
    mpfr_sqrt(s_, s_, pos ? MPFR_RNDD : MPFR_RNDU);
    mpfr_set_q(t_, coeff.get_mpq_t(), MPFR_RNDD);
    mpfr_mul(t_, t_, s_, MPFR_RNDD);
    mpfr_add(lo_, lo_, t_, MPFR_RNDD);

    mpfr_set_q(s_, rad.get_mpq_t(), pos ? MPFR_RNDU : MPFR_RNDD);
    mpfr_sqrt(s_, s_, pos ? MPFR_RNDU : MPFR_RNDD);
    mpfr_set_q(t_, coeff.get_mpq_t(), MPFR_RNDU);
    mpfr_mul(t_, t_, s_, MPFR_RNDU);
    mpfr_add(hi_, hi_, t_, MPFR_RNDU);
  }

  mpfr_t lo_, hi_, t_, s_;
};

}  // namespace

TEST_CASE("radical signs: hand cases") {
  CHECK(sign_one_radical(1, -3, make_rational(1, 10)) == 1);
  CHECK(sign_one_radical(1, -3, make_rational(1, 9)) == 0);
  CHECK(sign_one_radical(1, -3, make_rational(1, 8)) == -1);
  CHECK(sign_one_radical(0, 0, 5) == 0);
  CHECK(sign_two_radicals(0, 1, 2, -1, 2) == 0);
  CHECK(sign_two_radicals(0, 1, 8, -2, 2) == 0);
  CHECK(sign_two_radicals(3, -1, 2, -1, 3) == -1);  // 3 - 1.414 - 1.732 < 0
  CHECK(sign_two_radicals(3, -1, 3, -1, 2) == -1);
  CHECK(sign_two_radicals(make_rational(315, 100), -1, 2, -1, 3) == 1);
  CHECK(sign_two_radicals(-3, 1, 5, 1, 2) == 1);    // 2.236 + 1.414 > 3
  CHECK(sign_two_radicals(-4, 1, 5, 1, 2) == -1);
  RadicalNumber x(1, 2, 0, 3, 5);
  CHECK((x - x).sign() == 0);
  CHECK(x.str() == "1 + 2*sqrt(3)");
  CHECK_THROWS_AS(RadicalNumber(0, 1, 0, 2, 3) * RadicalNumber(0, 0, 1, 2, 3), ConsistencyError);
  CHECK((RadicalNumber(0, 1, 0, 2, 3) * RadicalNumber(0, 1, 0, 2, 3)) == RadicalNumber::rational(2, 2, 3));
}

TEST_CASE("property: exact signs agree with 256-bit enclosures on 10^4 instances") {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<long> num(-60, 60), den(1, 40), rad(0, 50), mode(0, 9);
  auto rat = [&] { return make_rational(num(rng), den(rng)); };
  auto radicand = [&] { return make_rational(rad(rng), den(rng)); };
  Enclosure enc;
  int zeros = 0, nonzero = 0, straddles = 0;
  for (int t = 0; t < 10000; ++t) {
    Rational a = rat(), b = rat(), c = rat(), q = radicand(), q2 = radicand();
    switch (mode(rng)) {
      case 0: {  // perfect square radicand, exact cancellation
        const Rational s = rat();
        q = s * s;
        a = -b * abs(s);
        c = 0;
        break;
      }
      case 1: {  // sqrt(q2) a rational multiple of sqrt(q)
        const Rational u = make_rational(1 + rad(rng) % 7, 1 + rad(rng) % 5);
        q2 = q * u * u;
        c = -b / u;
        a = 0;
        break;
      }
      case 2: {  // near cancellation: a approximates -b sqrt(q) to about 1e-9
        mpf_class f(q, 256);
        f = sqrt(f);
        Rational approx(mpz_class(f * 1000000000), mpz_class(1000000000));
        approx.canonicalize();
        a = -b * approx;
        c = 0;
        break;
      }
      default:
        break;
    }
    const int exact = sign_two_radicals(a, b, q, c, q2);
    const int interval = enc.sign(a, b, q, c, q2);
    CAPTURE(to_string(a));
    CAPTURE(to_string(b));
    CAPTURE(to_string(q));
    CAPTURE(to_string(c));
    CAPTURE(to_string(q2));
    if (interval != 0) {
      REQUIRE(exact == interval);
      ++nonzero;
    } else {
      // at 256 bits the enclosure straddles zero only for exact zeros here
      REQUIRE(exact == 0);
      ++straddles;
    }
    if (exact == 0) ++zeros;
    if (c == 0) REQUIRE(sign_one_radical(a, b, q) == exact);
  }
  MESSAGE("nonzero verdicts " << nonzero << ", exact zeros " << zeros << ", enclosures containing 0 " << straddles);
  CHECK(zeros > 500);
  CHECK(nonzero > 5000);
}

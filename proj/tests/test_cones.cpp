#include <doctest.h>

#include <random>

#include "schubert/cones.hpp"

using namespace schubert;

namespace {

RationalVector rv(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

ChowClass sigma(const GrassCtx& g, std::vector<int> p) { return ChowClass::schubert(g, std::move(p)); }

void check_membership_contract(const std::vector<RationalVector>& gens, const RationalVector& v) {
  const auto res = cone_membership(gens, v);
  if (res.member) {
    REQUIRE(verify_witness(gens, v, res.weights));
    REQUIRE(res.functional.empty());
  } else {
    REQUIRE(verify_certificate(gens, v, res.functional));
    REQUIRE(res.weights.empty());
  }
}

}  // namespace

TEST_CASE("cone_membership: small cases") {
  auto r1 = cone_membership({rv({1, 0}), rv({0, 1})}, rv({1, 1}));
  REQUIRE(r1.member);
  CHECK(r1.weights == rv({1, 1}));
  auto r2 = cone_membership({rv({1, 0})}, rv({0, 1}));
  REQUIRE_FALSE(r2.member);
  CHECK(verify_certificate({rv({1, 0})}, rv({0, 1}), r2.functional));
  CHECK(dot(r2.functional, rv({0, 1})) < 0);
  auto r3 = cone_membership({rv({1, 0}), rv({0, 1})}, rv({0, 0}));
  CHECK(r3.member);
}

TEST_CASE("property: membership returns a verified witness or certificate") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(-3, 3);
  std::uniform_int_distribution<int> count(1, 6);
  for (int t = 0; t < 500; ++t) {
    const int dim = 2 + t % 4;
    std::vector<RationalVector> gens(static_cast<std::size_t>(count(rng)));
    for (auto& g : gens) {
      g.resize(static_cast<std::size_t>(dim));
      for (auto& x : g) x = c(rng);
    }
    RationalVector v(static_cast<std::size_t>(dim));
    for (auto& x : v) x = c(rng);
    check_membership_contract(gens, v);
  }
}

TEST_CASE("thm44 generators and membership") {
  const auto cone = thm44_generators(2);
  CHECK(cone.generators.size() == 5);
  auto r = cone_membership(cone, rv({2, -1, -2}));
  CHECK(r.member);
  for (int k = 2; k <= 6; ++k) {
    const auto ck = thm44_generators(k);
    CHECK(cone_membership(ck, rv({1, -k, 0})).member);
    auto no = cone_membership(ck, rv({1, -(k + 1), 0}));
    REQUIRE_FALSE(no.member);
    CHECK(verify_certificate(ck.generators, rv({1, -(k + 1), 0}), no.functional));
  }
}

TEST_CASE("thm44 facets") {
  for (int k = 2; k <= 5; ++k) {
    auto fs = facets(thm44_generators(k));
    // a >= ... : (a, -b1, -b2) coordinates; ka >= b1 + b2 is (k, 1, 1) and the
    // per-point facets (k, 1, 0), (k, 0, 1).
    std::vector<RationalVector> expect = {rv({k, 0, 1}), rv({k, 1, 0}), rv({k, 1, 1})};
    std::sort(expect.begin(), expect.end());
    std::vector<RationalVector> got;
    for (const auto& f : fs) {
      if (f != rv({1, 0, 0})) got.push_back(f);
    }
    std::sort(got.begin(), got.end());
    CHECK(got == expect);
  }
}

TEST_CASE("lemma41: examples") {
  auto d = lemma41_decompose(2, 2, 1, 2);
  CHECK(d.reproduces());
  CHECK(d.coefficient(beta_label(2, 1)) == 1);
  CHECK(d.coefficient(beta_label(2, 0)) == 1);
  CHECK(d.coefficient("E2") == 1);
  CHECK(d.terms.size() == 3);
  for (int k = 1; k <= 5; ++k) {
    for (int m = 0; m <= k; ++m) {
      auto b = lemma41_decompose(k, 1, m, k - m);
      REQUIRE(b.terms.size() == 1);
      CHECK(b.coefficient(beta_label(k, m)) == 1);
    }
  }
  auto h = lemma41_decompose(3, 1, 0, 0);
  REQUIRE(h.terms.size() == 1);
  CHECK(h.coefficient("H") == 1);
  CHECK_THROWS_AS(lemma41_decompose(2, 1, 2, 1), DomainError);
}

TEST_CASE("property: lemma41 agrees with the LP on k <= 4, b <= 12") {
  for (int k = 1; k <= 4; ++k) {
    const auto cone = thm44_generators(k);
    for (int a = 0; a <= 6; ++a) {
      for (int b1 = 0; b1 <= 12; ++b1) {
        for (int b2 = 0; b2 <= 12; ++b2) {
          const bool member = cone_membership(cone, rv({a, -b1, -b2})).member;
          bool decomposed = true;
          try {
            const auto dec = lemma41_decompose(k, a, b1, b2);
            REQUIRE(dec.reproduces());
          } catch (const DomainError&) {
            decomposed = false;
          }
          REQUIRE(member == decomposed);
        }
      }
    }
  }
}

TEST_CASE("lemma42: examples") {
  GrassCtx g(2, 4);
  BlowupCtx c3(g, 3);
  auto C = BlowupClass::dim(c3, 1, Integer(3) * sigma(g, {2, 1}), {1, 1, 1});
  auto d = lemma42_decompose(C);
  CHECK(d.reproduces());
  CHECK(d.terms.size() == 3);
  BlowupCtx c1(g, 1);
  auto S = BlowupClass::codim(c1, sigma(g, {2}) + sigma(g, {1, 1}), {2});
  auto d2 = lemma42_decompose(S);
  CHECK(d2.coefficient("s(2)-E1^[2]") == 1);
  CHECK(d2.coefficient("s(1,1)-E1^[2]") == 1);
  GrassCtx g5(2, 5);
  BlowupCtx c52(g5, 2);
  auto T = BlowupClass::codim(c52, Integer(2) * sigma(g5, {2, 1}) + sigma(g5, {3}), {2, 1});
  auto d3 = lemma42_decompose(T);
  CHECK(d3.reproduces());
  CHECK(d3.coefficient("s(2,1)-E1^[3]") == 1);
  CHECK(d3.coefficient("s(2,1)-E2^[3]") == 1);
  CHECK(d3.coefficient("s(3)-E1^[3]") == 1);
  CHECK_THROWS_AS(lemma42_decompose(BlowupClass::codim(c1, sigma(g, {2}), {2})), DomainError);
}

TEST_CASE("property: lemma42 reproduces random inputs") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> c(0, 5);
  GrassCtx g(3, 6);
  BlowupCtx ctx(g, 4);
  for (int t = 0; t < 300; ++t) {
    ChowClass amb(g, 3);
    Integer total = 0;
    for (const auto& l : enumerate_partitions(3, 3, 3)) {
      const int a = c(rng);
      amb.add_term(l, a);
      total += a;
    }
    std::vector<Integer> b(4);
    Integer rest = total;
    for (auto& x : b) {
      x = std::min<long>(c(rng), rest.get_si());
      rest -= x;
    }
    auto d = lemma42_decompose(BlowupClass::codim(ctx, amb, b));
    REQUIRE(d.reproduces());
  }
}

TEST_CASE("g25 three-cycles") {
  auto a = g25_threecycle_decompose(1, 0, {2});
  CHECK(a.coefficient("s21-2E1") == 1);
  CHECK(a.terms.size() == 1);
  auto b = g25_threecycle_decompose(0, 1, {1});
  CHECK(b.coefficient("s3-E1") == 1);
  CHECK(b.terms.size() == 1);
  auto c = g25_threecycle_decompose(1, 1, {3, 0, 0, 0});
  CHECK(c.coefficient("s21-2E1") == 1);
  CHECK(c.coefficient("s3-E1") == 1);
  CHECK_THROWS_AS(g25_threecycle_decompose(1, 0, {2, 1}), DomainError);
  for (int a21 = 0; a21 <= 4; ++a21) {
    for (int a3 = 0; a3 <= 4; ++a3) {
      for (int b1 = 0; b1 <= 6; ++b1) {
        for (int b2 = 0; b2 <= b1; ++b2) {
          for (int b3 = 0; b3 <= 2; ++b3) {
            const std::vector<Integer> b = {b1, b2, b3, 1};
            if (2 * a21 + a3 >= b1 + b2 + b3 + 1) {
              REQUIRE(g25_threecycle_decompose(a21, a3, b).reproduces());
            } else {
              REQUIRE_THROWS_AS(g25_threecycle_decompose(a21, a3, b), DomainError);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("bounds") {
  CHECK(sgen_bound(GrassCtx(2, 4), 1) == 2);
  CHECK(sgen_bound(GrassCtx(2, 5), 1) == 5);
  CHECK(sgen_bound(GrassCtx(2, 5), 2) == 4);
  CHECK(very_general_curve_bound(GrassCtx(2, 4)) == 2);
  CHECK(very_general_curve_bound(GrassCtx(2, 5)) == 5);
  CHECK(very_general_curve_bound(GrassCtx(3, 6)) == 42);
}

TEST_CASE("G(2,4) counterexample") {
  auto r3 = g24_nonspan_witness(3);
  CHECK(r3.query.ambient() == sigma(GrassCtx(2, 4), {2}) + sigma(GrassCtx(2, 4), {1, 1}));
  CHECK(r3.query.exc() == std::vector<Integer>{1, 1, 1});
  REQUIRE(r3.verdict == SGenVerdict::NotInSpan);
  REQUIRE(r3.functional.has_value());
  CHECK(verify_certificate(r3.generators.generators, r3.query.coordinates(), *r3.functional));
  auto r2 = g24_nonspan_witness(2);
  REQUIRE(r2.verdict == SGenVerdict::InSpan);
  REQUIRE(r2.witness.has_value());
  CHECK(r2.witness->reproduces());
}

TEST_CASE("sgen_check on curves and surfaces") {
  GrassCtx g(2, 5);
  BlowupCtx ctx(g, 3);
  auto ok = sgen_check(BlowupClass::dim(ctx, 1, Integer(3) * sigma(g, {3, 2}), {1, 1, 1}));
  CHECK(ok.verdict == SGenVerdict::InSpan);
  auto no = sgen_check(BlowupClass::dim(ctx, 1, Integer(2) * sigma(g, {3, 2}), {1, 1, 1}));
  CHECK(no.verdict == SGenVerdict::NotInSpan);
  BlowupCtx one(g, 1);
  auto sing = sgen_check(BlowupClass::dim(one, 3, sigma(g, {2, 1}), {2}));
  CHECK(sing.verdict == SGenVerdict::InSpan);
}

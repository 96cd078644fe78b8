#include <doctest.h>

#include <random>

#include "schubert/chow.hpp"

using namespace schubert;

namespace {

std::vector<GrassCtx> boxes_up_to(int max_dim) {
  std::vector<GrassCtx> out;
  for (int k = 1; k <= max_dim; ++k) {
    for (int n = k + 1; k * (n - k) <= max_dim; ++n) out.emplace_back(k, n);
  }
  return out;
}

// Standard Young tableaux of the k x (n-k) rectangle, by the hook length formula.
Integer hook_degree(int k, int w) {
  Integer num = factorial(static_cast<unsigned long>(k * w));
  Integer den = 1;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < w; ++j) den *= (w - j - 1) + (k - i - 1) + 1;
  }
  return num / den;
}

ChowClass sigma(const GrassCtx& g, std::vector<int> p) { return ChowClass::schubert(g, std::move(p)); }

}  // namespace

TEST_CASE("pieri: examples") {
  GrassCtx g(2, 4);
  CHECK(pieri(1, g.partition({1})) == sigma(g, {2}) + sigma(g, {1, 1}));
  CHECK(pieri(0, g.partition({2, 1})) == sigma(g, {2, 1}));
  CHECK(pieri(1, g.partition({2, 1})) == sigma(g, {2, 2}));
  CHECK(pieri(2, g.partition({2})).is_zero() == false);
  CHECK_THROWS_AS(pieri(3, g.partition({1})), DomainError);
}

TEST_CASE("giambelli: examples") {
  GrassCtx g(2, 4);
  const auto single = giambelli(g.partition({2}));
  CHECK(single.size() == 1);
  CHECK(single.at({2}) == 1);
  const auto e11 = giambelli(g.partition({1, 1}));
  CHECK(e11.at({1, 1}) == 1);
  CHECK(e11.at({2}) == -1);
  CHECK(evaluate_special_polynomial(g, e11) == sigma(g, {1, 1}));
  CHECK(evaluate_special_polynomial(g, giambelli(g.partition({2, 1}))) == sigma(g, {2, 1}));
}

TEST_CASE("multiply and pair: examples") {
  GrassCtx g(2, 4);
  CHECK(multiply(sigma(g, {1}), sigma(g, {2, 1})) == sigma(g, {2, 2}));
  CHECK(multiply(ChowClass::unit(g), sigma(g, {2, 1})) == sigma(g, {2, 1}));
  CHECK(multiply(sigma(g, {2}), sigma(g, {1, 1})).is_zero());
  CHECK(pair(sigma(g, {2}), sigma(g, {2})) == 1);
  CHECK(pair(sigma(g, {2}), sigma(g, {1, 1})) == 0);
  GrassCtx g25(2, 5);
  CHECK(pair(sigma(g25, {2, 1}), sigma(g25, {2, 1})) == 1);
  CHECK_THROWS_AS(pair(sigma(g, {2}), sigma(g, {1})), DomainError);
  CHECK_THROWS_AS(multiply(sigma(g, {2}), sigma(g25, {1})), DomainError);
}

TEST_CASE("degree: published values") {
  CHECK(degree(GrassCtx(2, 4)) == 2);
  CHECK(degree(GrassCtx(2, 5)) == 5);
  CHECK(degree(GrassCtx(3, 6)) == 42);
}

TEST_CASE("oracle: degree against the hook length formula") {
  for (int k = 1; k <= 4; ++k) {
    for (int n = k + 1; n <= 9; ++n) {
      const GrassCtx g(k, n);
      CAPTURE(k);
      CAPTURE(n);
      CHECK(degree_closed_form(g) == hook_degree(k, n - k));
      CHECK(degree_by_pieri(g) == hook_degree(k, n - k));
    }
  }
}

TEST_CASE("property: Poincare duality, exhaustive for k(n-k) <= 12") {
  for (const auto& g : boxes_up_to(12)) {
    for (int m = 0; m <= g.dim(); ++m) {
      for (const auto& l : enumerate_partitions(g.k, g.width(), m)) {
        for (const auto& mu : enumerate_partitions(g.k, g.width(), g.dim() - m)) {
          const Integer expect = mu == dual(l) ? 1 : 0;
          REQUIRE(pair(ChowClass::schubert(g, l), ChowClass::schubert(g, mu)) == expect);
        }
      }
    }
  }
}

TEST_CASE("property: Giambelli round trip, exhaustive for k(n-k) <= 12") {
  for (const auto& g : boxes_up_to(12)) {
    for (const auto& l : enumerate_box(g.k, g.width())) {
      REQUIRE(evaluate_special_polynomial(g, giambelli(l)) == ChowClass::schubert(g, l));
    }
  }
}

TEST_CASE("property: commutativity and associativity on random triples") {
  std::mt19937 rng(20240611);
  int checked = 0;
  for (const auto& g : boxes_up_to(12)) {
    const auto all = enumerate_box(g.k, g.width());
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int t = 0; t < 25; ++t) {
      const auto &a = all[pick(rng)], &b = all[pick(rng)], &c = all[pick(rng)];
      if (a.size() + b.size() + c.size() > g.dim()) continue;
      const auto A = ChowClass::schubert(g, a), B = ChowClass::schubert(g, b), C = ChowClass::schubert(g, c);
      REQUIRE(multiply(A, B) == multiply(B, A));
      REQUIRE(multiply(multiply(A, B), C) == multiply(A, multiply(B, C)));
      ++checked;
    }
  }
  CHECK(checked > 150);
}

TEST_CASE("product cache returns what was computed") {
  GrassCtx g(3, 6);
  ProductCache cache;
  const auto p1 = multiply_schubert(g, g.partition({2, 1}), g.partition({1, 1}), &cache);
  CHECK(cache.size() >= 1);
  const auto p2 = multiply_schubert(g, g.partition({1, 1}), g.partition({2, 1}), &cache);
  CHECK(p1 == p2);
  CHECK(p1 == multiply_schubert(g, g.partition({2, 1}), g.partition({1, 1})));
}

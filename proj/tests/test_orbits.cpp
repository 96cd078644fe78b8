#include <doctest.h>

#include <algorithm>
#include <set>

#include "schubert/finite_field.hpp"
#include "schubert/orbits.hpp"

using namespace schubert;

TEST_CASE("incidence and peeling: examples") {
  IncidenceMatrix generic(1, {{0, 0}, {0, 1}});
  CHECK(representative_from_incidence(generic).pairs == std::vector<std::pair<int, int>>{{1, 1}});
  IncidenceMatrix fixed(1, {{0, 0}, {1, 1}});
  CHECK(representative_from_incidence(fixed).pairs == std::vector<std::pair<int, int>>{{1, 0}});

  OrbitRepresentative anti{{{1, 2}, {2, 1}}};
  auto I = incidence_of_representative(anti, 2);
  CHECK(representative_from_incidence(I).canonical() == anti.canonical());

  CHECK(incidence_of_representative(OrbitRepresentative{}, 2) == IncidenceMatrix(2));
  auto one = incidence_of_representative(OrbitRepresentative{{{1, 1}}}, 1);
  CHECK(one.entries() == std::vector<std::vector<int>>{{0, 0}, {0, 1}});
  auto two = incidence_of_representative(OrbitRepresentative{{{1, 0}, {2, 1}}}, 2);
  CHECK(two(1, 0) == 1);
  CHECK(two(2, 1) == 2);
  CHECK(two(2, 0) == 1);
  CHECK(two(0, 2) == 0);

  CHECK_THROWS_AS(representative_from_incidence(IncidenceMatrix(1, {{0, 1}, {1, 1}})), DomainError);
}

TEST_CASE("enumerate_orbits: P^1 and small counts agree with F_2 and F_3") {
  auto p1 = enumerate_orbits(1, 1);
  REQUIRE(p1.size() == 3);
  std::set<std::vector<std::pair<int, int>>> got;
  for (const auto& r : p1) got.insert(r.canonical().pairs);
  CHECK(got == std::set<std::vector<std::pair<int, int>>>{{{1, 0}}, {{0, 1}}, {{1, 1}}});
  for (int d = 0; d <= 2; ++d) {
    const auto reps = enumerate_orbits(2, d);
    for (int q : {2, 3}) {
      const auto fq = fq_orbit_summary(q, 2, d);
      CAPTURE(d);
      CAPTURE(q);
      CHECK(fq.realized.size() == reps.size());
      CHECK(fq.orbit_sizes.size() == reps.size());
      CHECK(fq.orbits_match_incidence);
    }
  }
}

TEST_CASE("property: round trip on every realizable matrix, k <= 4") {
  for (int k = 1; k <= 4; ++k) {
    for (int d = 0; d <= k; ++d) {
      std::set<IncidenceMatrix> seen;
      for (const auto& rep : enumerate_orbits(k, d)) {
        REQUIRE(rep.valid(k));
        const auto I = incidence_of_representative(rep, k);
        REQUIRE(I.satisfies_invariants());
        REQUIRE(I.subspace_dim() == d);
        REQUIRE(seen.insert(I).second);
        REQUIRE(incidence_of_representative(representative_from_incidence(I), k) == I);
      }
    }
  }
}

TEST_CASE("oracle: finite fields, k <= 2") {
  for (int k = 1; k <= 2; ++k) {
    for (int d = 0; d <= k; ++d) {
      const auto cmp = compare_with_finite_fields(k, d, {2, 3});
      for (const auto& p : cmp.problems) MESSAGE(p);
      CHECK(cmp.agree);
    }
  }
  // Orbit sizes partition the F_2-points of G(2,4).
  const auto s = fq_orbit_summary(2, 2, 2);
  std::size_t total = 0;
  for (auto n : s.orbit_sizes) total += n;
  CHECK(Integer(total) == gaussian_binomial(4, 2, 2));
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(s.subspace_count == 35);
}

TEST_CASE("orbit dimensions") {
  CHECK(orbit_dimension(OrbitRepresentative{{{1, 1}}}, 1) == 1);
  CHECK(orbit_dimension(OrbitRepresentative{{{1, 0}}}, 1) == 0);
  CHECK(orbit_dimension(OrbitRepresentative{{{1, 2}, {2, 1}}}, 2) == 4);
  // The graph of the identity is stabilized by the diagonal Borel.
  CHECK(orbit_dimension(OrbitRepresentative{{{1, 1}, {2, 2}}}, 2) == 3);
  for (int k = 1; k <= 3; ++k) {
    int best = 0;
    for (const auto& rep : enumerate_orbits(k, k)) best = std::max(best, orbit_dimension(rep, k));
    CHECK(best == k * k);
  }
}

TEST_CASE("dense-orbit dimension count") {
  auto a = dense_orbit_dimension_check(2, 2);
  CHECK(a.dim_group == 6);
  CHECK(a.dim_grassmannian == 4);
  CHECK(a.verdict == "no-obstruction");
  auto b = dense_orbit_dimension_check(3, 3);
  CHECK(b.dim_group == 18);
  CHECK(b.verdict == "boundary");
  auto c = dense_orbit_dimension_check(4, 3);
  CHECK(c.dim_group == 30);
  CHECK(c.dim_grassmannian == 32);
  CHECK(c.verdict == "obstruction");
  for (int k = 1; k <= 6; ++k) {
    for (int d = 2; d <= 6; ++d) {
      auto r = dense_orbit_dimension_check(k, d);
      CHECK(r.dim_group == d * k * (k + 1) / 2);
      CHECK(r.dim_grassmannian == (d - 1) * k * k);
      if (d >= 3 && k >= 3) CHECK(r.dim_group <= r.dim_grassmannian);
    }
  }
}

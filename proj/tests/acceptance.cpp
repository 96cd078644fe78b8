// One line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "quadric_oracle.hpp"
#include "schubert/chow.hpp"
#include "schubert/cones.hpp"
#include "schubert/delpezzo.hpp"
#include "schubert/finite_field.hpp"
#include "schubert/multiplicity.hpp"
#include "schubert/orbits.hpp"
#include "schubert/verify.hpp"

using namespace schubert;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::vector<GrassCtx> boxes_up_to(int max_dim) {
  std::vector<GrassCtx> out;
  for (int k = 1; k <= max_dim; ++k) {
    for (int n = k + 1; k * (n - k) <= max_dim; ++n) out.emplace_back(k, n);
  }
  return out;
}

Outcome degrees() {
  Outcome o;
  for (auto [k, n, d] : std::vector<std::tuple<int, int, int>>{{2, 4, 2}, {2, 5, 5}, {3, 6, 42}}) {
    GrassCtx g(k, n);
    if (degree_closed_form(g) != d || degree_by_pieri(g) != d) o.fail("degree of G(" + std::to_string(k) + "," + std::to_string(n) + ")");
  }
  return o;
}

Outcome ring() {
  Outcome o;
  for (const auto& g : boxes_up_to(12)) {
    for (int m = 0; m <= g.dim(); ++m) {
      for (const auto& l : enumerate_partitions(g.k, g.width(), m)) {
        if (!(evaluate_special_polynomial(g, giambelli(l)) == ChowClass::schubert(g, l))) o.fail("Giambelli " + l.str());
        for (const auto& mu : enumerate_partitions(g.k, g.width(), g.dim() - m)) {
          if (pair(ChowClass::schubert(g, l), ChowClass::schubert(g, mu)) != (mu == dual(l) ? 1 : 0)) o.fail("duality " + l.str());
        }
      }
    }
  }
  return o;
}

Outcome multiplicities() {
  Outcome o;
  for (int k = 2; k <= 5; ++k) {
    GrassCtx g(k, 2 * k);
    if (max_point_multiplicity(g, g.partition({1})) != k) o.fail("sigma_1 on G(k,2k), k=" + std::to_string(k));
  }
  GrassCtx g25(2, 5);
  if (rz_multiplicity({g25, g25.partition({2, 1}), g25.point_class()}) != 2) o.fail("sigma_{2,1} on G(2,5)");
  for (const auto& g : boxes_up_to(12)) {
    for (const auto& l : enumerate_box(g.k, g.width())) {
      if (rz_multiplicity({g, l, l}) != 1) o.fail("open cell of " + l.str());
    }
  }
  return o;
}

Outcome two_point_cone() {
  Outcome o;
  long members = 0, certificates = 0;
  for (int k = 2; k <= 6; ++k) {
    const auto cone = thm44_generators(k);
    for (int a = 0; a <= 6; ++a) {
      for (int b1 = 0; b1 <= 6 * k; ++b1) {
        for (int b2 = 0; b2 <= 6 * k; ++b2) {
          const RationalVector v = {Rational(a), Rational(-b1), Rational(-b2)};
          const auto res = cone_membership(cone, v);
          if (k * a >= b1 + b2) {
            ++members;
            try {
              if (!lemma41_decompose(k, a, b1, b2).reproduces()) o.fail("lemma41 re-sum");
            } catch (const std::exception& e) {
              o.fail(std::string("lemma41: ") + e.what());
            }
            if (!res.member || !verify_witness(cone.generators, v, res.weights)) o.fail("LP rejects a grid point");
          } else {
            ++certificates;
            if (res.member || !verify_certificate(cone.generators, v, res.functional)) o.fail("certificate");
          }
        }
      }
    }
  }
  o.detail = o.ok ? std::to_string(members) + " members, " + std::to_string(certificates) + " certificates" : o.detail;
  return o;
}

Outcome quadric() {
  Outcome o;
  long satisfying = 0;
  for (int r = 1; r <= 7; ++r) {
    const auto st = quadric_oracle::sweep(r, 6);
    satisfying += st.precondition_holds;
    if (st.precondition_failures || st.resum_failures || st.unsound) o.fail("r=" + std::to_string(r));
  }
  if (o.ok) o.detail = std::to_string(satisfying) + " classes satisfying the inequalities";
  return o;
}

Outcome counterexample() {
  Outcome o;
  auto r3 = g24_nonspan_witness(3);
  if (r3.verdict != SGenVerdict::NotInSpan || !r3.functional ||
      !verify_certificate(r3.generators.generators, r3.query.coordinates(), *r3.functional)) {
    o.fail("no verified certificate for r = 3");
  }
  auto r2 = g24_nonspan_witness(2);
  if (r2.verdict != SGenVerdict::InSpan || !r2.witness || !r2.witness->reproduces()) o.fail("r = 2 not decomposed");
  return o;
}

Outcome orbits() {
  Outcome o;
  for (int k = 1; k <= 4; ++k) {
    for (int d = 0; d <= k; ++d) {
      for (const auto& rep : enumerate_orbits(k, d)) {
        const auto I = incidence_of_representative(rep, k);
        if (!(incidence_of_representative(representative_from_incidence(I), k) == I)) o.fail("round trip");
      }
    }
  }
  for (int k = 1; k <= 2; ++k) {
    for (int d = 0; d <= k; ++d) {
      if (!compare_with_finite_fields(k, d, {2, 3}).agree) o.fail("finite-field oracle");
    }
  }
  const auto s = fq_orbit_summary(2, 2, 2);
  std::size_t total = 0;
  for (auto n : s.orbit_sizes) total += n;
  if (Integer(total) != gaussian_binomial(4, 2, 2)) o.fail("point count of G(2,4)(F_2)");
  for (int k = 1; k <= 3; ++k) {
    int best = 0;
    for (const auto& rep : enumerate_orbits(k, k)) best = std::max(best, orbit_dimension(rep, k));
    if (best != k * k) o.fail("max orbit dimension for k=" + std::to_string(k));
  }
  for (int k = 1; k <= 6; ++k) {
    for (int d = 2; d <= 6; ++d) {
      const auto r = dense_orbit_dimension_check(k, d);
      if (r.dim_group != d * k * (k + 1) / 2 || r.dim_grassmannian != (d - 1) * k * k) o.fail("dense-orbit formulas");
    }
  }
  return o;
}

Outcome del_pezzo() {
  Outcome o;
  for (int N = 0; N <= 8; ++N) {
    if (!symbolic_self_intersection_vanishes(N)) o.fail("symbolic D^2 for N=" + std::to_string(N));
  }
  int runs = 0;
  for (const auto& row : fano_table()) {
    for (const auto& q : admissible_q_samples(row.N)) {
      ++runs;
      const RadicalClass D = build_D_delta(row.N, q);
      if (intersect(D, D).sign() != 0) o.fail(row.key + ": D^2");
      for (const auto& [label, c] : row.kernel) {
        if (intersect(D, c).sign() != 0) o.fail(row.key + ": kernel " + label);
      }
      for (const auto& [label, c] : row.gamma) {
        if (intersect(D, c).sign() <= 0) o.fail(row.key + ": gamma " + label);
      }
      if (!(9 * q < 1) || !(9 * q_prime(row.N, q) < 1)) o.fail(row.key + ": strict bounds");
      const auto rep = verify_fano_case(row, q);
      if (!rep.all_pass()) o.fail(row.key + ": report");
      bool gated = false;
      for (const auto& c : rep.checks) {
        if (c.value.find("SHGH") != std::string::npos && c.status == "pass") o.fail("SHGH claim reported as pass");
        if (c.status == "assumed") gated = true;
      }
      if (!gated) o.fail(row.key + ": SHGH assumption missing");
    }
  }
  if (runs != 40) o.fail("expected 8 rows x 5 samples");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "degree table, closed form and iterated Pieri", 10, degrees},
      {2, "Poincare duality and Giambelli round trip, k(n-k) <= 12", 60, ring},
      {3, "multiplicities", 0, multiplicities},
      {4, "two-point divisor cone grid, 2 <= k <= 6", 60, two_point_cone},
      {5, "quadric decompositions against the brute-force oracle", 0, quadric},
      {6, "G(2,4) counterexample certificate, r = 2 decomposition", 0, counterexample},
      {7, "orbit round trip, finite-field oracle, dimensions", 0, orbits},
      {8, "del Pezzo Fano table, 8 rows x 5 samples", 0, del_pezzo},
  };
  bool all = true;
  bool earlier = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs >= c.limit_s) o.fail("took " + std::to_string(secs) + " s");
    std::printf("%s %d %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.empty() ? "" : ": ",
                o.detail.c_str());
    all = all && o.ok;
    earlier = earlier && o.ok;
  }

  // 9: the non-computable claims stay assumptions and every computable suite above passed.
  Outcome nine;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const auto report = verify_paper();
    if (!report.passed()) nine.fail("verify-paper report has failures or missing operations");
    int assumed = 0;
    for (const auto& r : report.records) {
      if (r.id.rfind("assumption.", 0) == 0) {
        if (r.status != "assumed") nine.fail(r.id + " not recorded as an assumption");
        ++assumed;
      }
    }
    if (assumed == 0) nine.fail("no assumptions recorded");
    if (!earlier) nine.fail("a property suite above failed");
  } catch (const std::exception& e) {
    nine.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s 9 out-of-scope claims recorded as assumptions, computable suites pass (%.2f s)%s%s\n",
              nine.ok ? "PASS" : "FAIL", secs, nine.detail.empty() ? "" : ": ", nine.detail.c_str());
  all = all && nine.ok;
  return all ? 0 : 1;
}

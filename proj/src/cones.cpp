#include "schubert/cones.hpp"

#include <algorithm>
#include <numeric>

#include "schubert/multiplicity.hpp"

namespace schubert {

// --- Decomposition -----------------------------------------------------------

RationalVector Decomposition::sum() const {
  RationalVector out(target.size(), Rational(0));
  for (const auto& t : terms) {
    for (std::size_t i = 0; i < out.size() && i < t.vector.size(); ++i) out[i] += t.coeff * t.vector[i];
  }
  return out;
}

bool Decomposition::reproduces() const {
  for (const auto& t : terms) {
    if (t.coeff <= 0 || t.vector.size() != target.size()) return false;
  }
  return sum() == target;
}

void Decomposition::add(const std::string& label, const RationalVector& vector, const Integer& coeff) {
  if (coeff == 0) return;
  if (coeff < 0) throw ConsistencyError("negative coefficient for generator " + label);
  for (auto& t : terms) {
    if (t.label == label) {
      t.coeff += coeff;
      return;
    }
  }
  terms.push_back({label, coeff, vector});
}

Integer Decomposition::coefficient(const std::string& label) const {
  for (const auto& t : terms) {
    if (t.label == label) return t.coeff;
  }
  return 0;
}

std::string Decomposition::str() const {
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " + ";
    if (t.coeff != 1) out += t.coeff.get_str() + "*";
    out += "[" + t.label + "]";
  }
  return out.empty() ? "0" : out;
}

namespace {

RationalVector unit(std::size_t dim, std::size_t i, long value = 1) {
  RationalVector v(dim, Rational(0));
  v[i] = value;
  return v;
}

Integer sum_of(const std::vector<Integer>& v) {
  return std::accumulate(v.begin(), v.end(), Integer(0));
}

// Greedy split of  sum a_j x_j - sum b_i y_i  (a, b >= 0, sum a >= sum b) into
// (x_j - y_i) and x_j, drawing each b_i (last point first) from the largest
// remaining a_j. Coordinates: a-part first, then the r exceptional slots.
void schubert_span_split(Decomposition& dec, const std::vector<std::string>& amb_labels,
                         const std::vector<std::string>& exc_labels, std::vector<Integer> a, std::vector<Integer> b) {
  const std::size_t na = a.size();
  const std::size_t dim = na + b.size();
  for (std::size_t i = b.size(); i-- > 0;) {
    Integer need = b[i];
    while (need > 0) {
      std::size_t best = na;
      for (std::size_t j = 0; j < na; ++j) {
        if (a[j] > 0 && (best == na || a[j] > a[best])) best = j;
      }
      if (best == na) throw ConsistencyError("Schubert span split ran out of ambient coefficients");
      Integer take = std::min(need, a[best]);
      RationalVector v = unit(dim, best);
      v[na + i] = -1;
      dec.add(amb_labels[best] + "-" + exc_labels[i], v, take);
      a[best] -= take;
      need -= take;
    }
  }
  for (std::size_t j = 0; j < na; ++j) dec.add(amb_labels[j], unit(dim, j), a[j]);
}

}  // namespace

// --- two-point divisors ------------------------------------------------------

std::string beta_label(int k, int m) {
  return "H-" + std::to_string(m) + "E1-" + std::to_string(k - m) + "E2";
}

Decomposition lemma41_decompose(int k, const Integer& a, const Integer& b1, const Integer& b2) {
  if (k < 0) throw DomainError("k must be nonnegative");
  if (a < 0 || b1 < 0 || b2 < 0 || k * a < b1 + b2) {
    throw DomainError("outside dual-cone region: need a, b1, b2 >= 0 and " + std::to_string(k) +
                      "*a >= b1 + b2 (a=" + a.get_str() + ", b1=" + b1.get_str() + ", b2=" + b2.get_str() + ")");
  }
  Decomposition dec;
  dec.basis_labels = {"H", "E1", "E2"};
  dec.target = {Rational(a), Rational(-b1), Rational(-b2)};

  Integer slack = k * a - b1 - b2;
  Integer rest_a = a;
  Integer rest_b2 = b2;
  // Whole hyperplane classes absorb slack in steps of k.
  Integer spare_h = k == 0 ? rest_a : std::min(rest_a, Integer(slack / k));
  dec.add("H", unit(3, 0), spare_h);
  rest_a -= spare_h;
  slack -= k * spare_h;
  // The remainder is absorbed by E2: raise b2 so that k*a = b1 + b2 exactly.
  if (rest_a > 0) {
    dec.add("E2", unit(3, 2), slack);
    rest_b2 += slack;
  }
  // Peel beta_m with m = min(b1, k); each step keeps k*a = b1 + b2.
  if (rest_a > 0 && k > 0) {
    Integer full = std::min(rest_a, Integer(b1 / k));
    RationalVector beta_k = {Rational(1), Rational(-k), Rational(0)};
    dec.add(beta_label(k, k), beta_k, full);
    rest_a -= full;
    Integer rest_b1 = b1 - full * k;
    if (rest_a > 0) {
      const int m = static_cast<int>(rest_b1.get_si());
      dec.add(beta_label(k, m), {Rational(1), Rational(-m), Rational(m - k)}, 1);
      rest_a -= 1;
      dec.add(beta_label(k, 0), {Rational(1), Rational(0), Rational(-k)}, rest_a);
    }
  }
  if (!dec.reproduces()) throw ConsistencyError("lemma41 decomposition does not reproduce its input");
  return dec;
}

ConeSpec thm44_generators(int k) {
  if (k < 1) throw DomainError("k must be positive");
  std::vector<std::string> labels = {"E1", "E2"};
  std::vector<RationalVector> gens = {{Rational(0), Rational(1), Rational(0)}, {Rational(0), Rational(0), Rational(1)}};
  for (int m = 0; m <= k; ++m) {
    labels.push_back(beta_label(k, m));
    gens.push_back({Rational(1), Rational(-m), Rational(m - k)});
  }
  return ConeSpec(3, {"H", "E1", "E2"}, std::move(labels), std::move(gens));
}

// --- Schubert span -----------------------------------------------------------

Decomposition lemma42_decompose(const BlowupClass& c) {
  const auto coords = c.coordinates();
  const auto labels = c.basis_labels();
  const std::size_t r = c.exc().size();
  const std::size_t na = coords.size() - r;
  std::vector<Integer> a;
  for (std::size_t j = 0; j < na; ++j) a.push_back(coords[j].get_num());
  const std::vector<Integer>& b = c.exc();
  for (const auto& x : a) {
    if (x < 0) throw DomainError("Schubert span criterion needs a_lambda >= 0");
  }
  for (const auto& x : b) {
    if (x < 0) throw DomainError("Schubert span criterion needs b_i >= 0");
  }
  const Integer deficit = sum_of(b) - sum_of(a);
  if (deficit > 0) {
    throw DomainError("sum of a_lambda is smaller than sum of b_i by " + deficit.get_str());
  }
  Decomposition dec;
  dec.basis_labels = labels;
  dec.target = coords;
  std::vector<std::string> amb(labels.begin(), labels.begin() + static_cast<long>(na));
  std::vector<std::string> exc(labels.begin() + static_cast<long>(na), labels.end());
  schubert_span_split(dec, amb, exc, a, b);
  if (!dec.reproduces()) throw ConsistencyError("lemma42 decomposition does not reproduce its input");
  return dec;
}

// --- quadric curves ----------------------------------------------------------

std::string conic_label(int i, int j, int k) {
  std::array<int, 3> idx = {i, j, k};
  std::sort(idx.begin(), idx.end());
  return "2l-l" + std::to_string(idx[0]) + "-l" + std::to_string(idx[1]) + "-l" + std::to_string(idx[2]);
}

namespace {

struct PairViolation {
  bool found = false;
  std::size_t i = 0;
  std::size_t j = 0;
};

// Inequality (1) on b^+:  2a >= 2b_i + 2b_j + sum_{k != i,j} b_k.
PairViolation first_violated_pair(const Integer& a, const std::vector<Integer>& bp) {
  const Integer total = sum_of(bp);
  for (std::size_t i = 0; i < bp.size(); ++i) {
    for (std::size_t j = i + 1; j < bp.size(); ++j) {
      if (2 * a < total + bp[i] + bp[j]) return {true, i, j};
    }
  }
  return {};
}

std::vector<Integer> positive_parts(const std::vector<Integer>& b) {
  std::vector<Integer> out;
  for (const auto& x : b) out.push_back(x > 0 ? x : Integer(0));
  return out;
}

// Largest five entries of b^+ must sum to at most a.
std::optional<std::string> five_subset_violation(const Integer& a, const std::vector<Integer>& bp) {
  std::vector<std::size_t> order(bp.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return bp[x] > bp[y]; });
  Integer top = 0;
  std::string idx;
  for (std::size_t t = 0; t < 5 && t < order.size(); ++t) {
    top += bp[order[t]];
    idx += (idx.empty() ? "" : "+") + std::string("b") + std::to_string(order[t] + 1);
  }
  if (top > a) return "a >= " + idx + " (" + a.get_str() + " < " + top.get_str() + ")";
  return std::nullopt;
}

std::string pair_inequality(const Integer& a, const std::vector<Integer>& bp, std::size_t i, std::size_t j) {
  const Integer rhs = sum_of(bp) + bp[i] + bp[j];
  return "2a >= 2b" + std::to_string(i + 1) + " + 2b" + std::to_string(j + 1) + " + sum of the others (" +
         Integer(2 * a).get_str() + " < " + rhs.get_str() + ")";
}

}  // namespace

QuadricPrecondition quadric_precondition(const Integer& a, const std::vector<Integer>& b) {
  const auto bp = positive_parts(b);
  if (a < 0) return {false, "a >= 0"};
  if (b.size() <= 2) {
    if (a < sum_of(bp)) return {false, "a >= sum b_i (" + a.get_str() + " < " + sum_of(bp).get_str() + ")"};
    return {};
  }
  if (b.size() <= 6) {
    auto v = first_violated_pair(a, bp);
    if (v.found) return {false, pair_inequality(a, bp, v.i, v.j)};
    return {};
  }
  if (auto v = five_subset_violation(a, bp)) return {false, *v};
  return {};
}

Decomposition quadric_curve_decompose(const Integer& a, const std::vector<Integer>& b) {
  const std::size_t r = b.size();
  if (r > 7) throw DomainError("quadric curve decomposition handles at most 7 points");
  if (a < 0) throw DomainError("violated inequality: a >= 0");
  const std::size_t dim = r + 1;

  Decomposition dec;
  dec.basis_labels.push_back("l");
  for (std::size_t i = 1; i <= r; ++i) dec.basis_labels.push_back("l" + std::to_string(i));
  dec.target.push_back(Rational(a));
  for (const auto& x : b) dec.target.push_back(Rational(-x));

  Integer cur_a = a;
  std::vector<Integer> cur_b = b;
  auto absorb_negatives = [&] {
    for (std::size_t i = 0; i < r; ++i) {
      if (cur_b[i] < 0) {
        dec.add("l" + std::to_string(i + 1), unit(dim, i + 1), -cur_b[i]);
        cur_b[i] = 0;
      }
    }
  };
  auto subtract_conic = [&](std::size_t i, std::size_t j, std::size_t k) {
    RationalVector v(dim, Rational(0));
    v[0] = 2;
    v[i + 1] = v[j + 1] = v[k + 1] = -1;
    dec.add(conic_label(static_cast<int>(i + 1), static_cast<int>(j + 1), static_cast<int>(k + 1)), v, 1);
    cur_a -= 2;
    cur_b[i] -= 1;
    cur_b[j] -= 1;
    cur_b[k] -= 1;
    absorb_negatives();
  };
  absorb_negatives();

  if (r >= 3 && r <= 6) {
    // A class violating (1) for the pair (i, j) contains a conic through p_i, p_j.
    while (true) {
      auto v = first_violated_pair(cur_a, cur_b);
      if (!v.found) break;
      if (cur_a < 2) throw DomainError("violated inequality: " + pair_inequality(cur_a, cur_b, v.i, v.j));
      std::size_t k = r;
      for (std::size_t t = 0; t < r; ++t) {
        if (t == v.i || t == v.j) continue;
        if (k == r || cur_b[t] > cur_b[k]) k = t;
      }
      subtract_conic(v.i, v.j, k);
    }
  } else {
    auto pre = quadric_precondition(cur_a, cur_b);
    if (!pre.holds) throw DomainError("violated inequality: " + pre.violated);
  }

  // Greedy conics through the three largest coefficients.
  while (r >= 3 && cur_a >= 2 && cur_a < sum_of(cur_b)) {
    std::vector<std::size_t> order(r);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return cur_b[x] > cur_b[y]; });
    subtract_conic(order[0], order[1], order[2]);
  }
  if (cur_a < sum_of(cur_b)) {
    throw ConsistencyError("conic peeling left a residual with a' = " + cur_a.get_str() + " < sum b' = " +
                           sum_of(cur_b).get_str());
  }

  std::vector<std::string> exc_labels;
  for (std::size_t i = 1; i <= r; ++i) exc_labels.push_back("l" + std::to_string(i));
  schubert_span_split(dec, {"l"}, exc_labels, {cur_a}, cur_b);
  if (!dec.reproduces()) throw ConsistencyError("quadric decomposition does not reproduce its input");
  return dec;
}

// --- G(2,5) three-cycles -----------------------------------------------------

Decomposition g25_threecycle_decompose(const Integer& a21, const Integer& a3, const std::vector<Integer>& b) {
  const std::size_t r = b.size();
  if (r > 4) throw DomainError("the 3-cycle decomposition on G(2,5) handles at most 4 points");
  if (a21 < 0 || a3 < 0) throw DomainError("coefficients a_{2,1}, a_3 must be nonnegative");
  for (const auto& x : b) {
    if (x < 0) throw DomainError("exceptional coefficients must be nonnegative");
  }
  if (2 * a21 + a3 < sum_of(b)) {
    throw DomainError("violated inequality: 2a_{2,1} + a_3 >= sum b_i (" + Integer(2 * a21 + a3).get_str() + " < " +
                      sum_of(b).get_str() + ")");
  }
  const std::size_t dim = 2 + r;
  Decomposition dec;
  dec.basis_labels = {"s(3)", "s(2,1)"};
  for (std::size_t i = 1; i <= r; ++i) dec.basis_labels.push_back("E" + std::to_string(i) + "^[3]");
  dec.target = {Rational(a3), Rational(a21)};
  for (const auto& x : b) dec.target.push_back(Rational(-x));

  auto e = [](std::size_t i) { return "E" + std::to_string(i + 1); };
  auto gen = [&](long s3, long s21, std::initializer_list<std::pair<std::size_t, long>> exc) {
    RationalVector v(dim, Rational(0));
    v[0] = s3;
    v[1] = s21;
    for (auto [i, c] : exc) v[2 + i] = -c;
    return v;
  };

  Integer A21 = a21;
  Integer A3 = a3;
  std::vector<Integer> B = b;
  std::vector<bool> done(r, false);
  auto largest_open = [&]() {
    std::size_t best = r;
    for (std::size_t i = 0; i < r; ++i) {
      if (!done[i] && (best == r || B[i] > B[best])) best = i;
    }
    return best;
  };

  while (true) {
    const std::size_t p = largest_open();
    if (p == r || B[p] == 0) break;
    if (2 * A21 >= B[p]) {
      Integer t = B[p] / 2;
      dec.add("s21-2" + e(p), gen(0, 1, {{p, 2}}), t);
      A21 -= t;
      B[p] -= 2 * t;
      done[p] = true;
      if (B[p] == 1) {
        done[p] = false;  // look for a partner among the other points
        std::size_t q = r;
        for (std::size_t i = 0; i < r; ++i) {
          if (i != p && !done[i] && B[i] > 0 && (q == r || B[i] > B[q])) q = i;
        }
        if (q != r) {
          const std::size_t lo = std::min(p, q), hi = std::max(p, q);
          dec.add("s21-" + e(lo) + "-" + e(hi), gen(0, 1, {{lo, 1}, {hi, 1}}), 1);
          A21 -= 1;
          B[q] -= 1;
        } else if (A3 > 0) {
          dec.add("s3-" + e(p), gen(1, 0, {{p, 1}}), 1);
          A3 -= 1;
        } else {
          dec.add("s21-2" + e(p), gen(0, 1, {{p, 2}}), 1);
          dec.add(e(p), gen(0, 0, {{p, -1}}), 1);
          A21 -= 1;
        }
        B[p] = 0;
        done[p] = true;
      }
    } else {
      dec.add("s21-2" + e(p), gen(0, 1, {{p, 2}}), A21);
      B[p] -= 2 * A21;
      A21 = 0;
      for (std::size_t i = 0; i < r; ++i) {
        if (B[i] > 0) {
          dec.add("s3-" + e(i), gen(1, 0, {{i, 1}}), B[i]);
          A3 -= B[i];
          B[i] = 0;
        }
        done[i] = true;
      }
    }
    if (A21 < 0 || A3 < 0) throw ConsistencyError("3-cycle decomposition overdrew a Schubert coefficient");
  }
  dec.add("s21", gen(0, 1, {}), A21);
  dec.add("s3", gen(1, 0, {}), A3);
  if (!dec.reproduces()) throw ConsistencyError("3-cycle decomposition does not reproduce its input");
  return dec;
}

// --- bounds ------------------------------------------------------------------

int sgen_bound(const GrassCtx& ctx, int cycle_dim) {
  if (cycle_dim != 1 && cycle_dim != 2) throw DomainError("S-generation bounds are known for curves and surfaces only");
  const Integer base = binomial(ctx.n, ctx.k) - ctx.dim();
  Integer out = base;
  if (cycle_dim == 1 && degree(ctx) >= base + 1) out += 1;
  return static_cast<int>(out.get_si());
}

Integer very_general_curve_bound(const GrassCtx& ctx) { return degree(ctx); }

// --- S-generation check ------------------------------------------------------

std::string to_string(SGenVerdict v) {
  switch (v) {
    case SGenVerdict::InSpan: return "in-span";
    case SGenVerdict::NotInSpan: return "not-in-span";
    case SGenVerdict::UndecidedNeedsGeometry: return "undecided-needs-geometry";
  }
  return "undecided-needs-geometry";
}

namespace {

ConeSpec generators_for(const BlowupCtx& ctx, Grading grading, int m) {
  const GrassCtx& g = ctx.grass;
  const int amb_codim = grading == Grading::Codimension ? m : g.dim() - m;
  const auto basis = enumerate_partitions(g.k, g.width(), amb_codim);
  const std::size_t na = basis.size();
  const std::size_t dim = na + static_cast<std::size_t>(ctx.r);
  BlowupClass probe(ctx, grading, m, ChowClass(g, amb_codim), std::vector<Integer>(static_cast<std::size_t>(ctx.r), 0));
  auto labels = probe.basis_labels();

  std::vector<std::string> gl;
  std::vector<RationalVector> gv;
  for (int i = 0; i < ctx.r; ++i) {
    gl.push_back(labels[na + static_cast<std::size_t>(i)]);
    gv.push_back(unit(dim, na + static_cast<std::size_t>(i)));
  }
  for (std::size_t j = 0; j < na; ++j) {
    gl.push_back(labels[j]);
    gv.push_back(unit(dim, j));
    for (int i = 0; i < ctx.r; ++i) {
      RationalVector v = unit(dim, j);
      v[na + static_cast<std::size_t>(i)] = -1;
      gl.push_back(labels[j] + "-" + labels[na + static_cast<std::size_t>(i)]);
      gv.push_back(std::move(v));
    }
    if (ctx.r == 1) {
      const Integer d = max_point_multiplicity(g, basis[j]);
      if (d > 1) {
        RationalVector v = unit(dim, j);
        v[na] = Rational(-d);
        gl.push_back(labels[j] + "-" + d.get_str() + labels[na]);
        gv.push_back(std::move(v));
      }
    }
  }
  return ConeSpec(static_cast<int>(dim), labels, std::move(gl), std::move(gv));
}

}  // namespace

ConeSpec sgen_generators(const BlowupCtx& ctx, int cycle_dim) {
  return generators_for(ctx, Grading::Dimension, cycle_dim);
}

SGenerationReport sgen_check(const BlowupClass& query) {
  const BlowupCtx& ctx = query.ctx();
  ConeSpec cone = generators_for(ctx, query.grading(), query.m());
  const auto target = query.coordinates();
  MembershipResult res = cone_membership(cone, target);
  SGenerationReport report{query, SGenVerdict::InSpan, cone, std::nullopt, std::nullopt, ""};
  if (res.member) {
    Decomposition dec;
    dec.basis_labels = cone.basis_labels;
    dec.target = target;
    for (std::size_t j = 0; j < res.weights.size(); ++j) {
      if (res.weights[j] == 0) continue;
      // Weights may be fractional; record the exact rational weight via scaling when needed.
      Rational w = res.weights[j];
      if (w.get_den() != 1) {
        report.rationale = "witness has fractional weights; class is in the real cone spanned by the generators";
      }
      dec.terms.push_back({cone.generator_labels[j], w.get_num(), cone.generators[j]});
      if (w.get_den() != 1) {
        dec.terms.back().label += " /" + w.get_den().get_str();
        for (auto& x : dec.terms.back().vector) x /= w.get_den();
      }
    }
    report.witness = std::move(dec);
    if (report.rationale.empty()) report.rationale = "explicit nonnegative combination of the listed generators";
    return report;
  }
  report.functional = res.functional;
  const int cycle_dim = query.grading() == Grading::Dimension ? query.m() : ctx.grass.dim() - query.m();
  const bool special = ctx.configuration == PointConfiguration::Special;
  const bool g24 = ctx.grass.k == 2 && ctx.grass.n == 4;
  if (ctx.r <= 1) {
    report.verdict = SGenVerdict::NotInSpan;
    report.rationale = "one blown-up point: strict transforms of Schubert cells and exceptional classes span the cone";
  } else if (!special && cycle_dim == 1) {
    report.verdict = SGenVerdict::NotInSpan;
    report.rationale = "assumption: the Schubert curve class passes through at most one general point (rigidity of lines)";
  } else if (!special && cycle_dim == 2 && g24) {
    report.verdict = SGenVerdict::NotInSpan;
    report.rationale = "assumption: sigma_2 and sigma_{1,1} on G(2,4) are rigid, so each passes through at most one general point";
  } else {
    report.verdict = SGenVerdict::UndecidedNeedsGeometry;
    report.rationale =
        "not in the span of Schubert classes through single points; Schubert varieties through several points need geometry";
  }
  return report;
}

SGenerationReport g24_nonspan_witness(int r) {
  GrassCtx g(2, 4);
  BlowupCtx ctx(g, r);
  ChowClass ambient = ChowClass::schubert(g, {2}) + ChowClass::schubert(g, {1, 1});
  BlowupClass cls = BlowupClass::dim(ctx, 2, ambient, std::vector<Integer>(static_cast<std::size_t>(r), 1));
  return sgen_check(cls);
}

}  // namespace schubert

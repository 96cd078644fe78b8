#include "schubert/lp.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "schubert/linalg.hpp"

namespace schubert {

ConeSpec::ConeSpec(int dim_, std::vector<std::string> basis, std::vector<std::string> labels,
                   std::vector<RationalVector> gens)
    : dim(dim_), basis_labels(std::move(basis)) {
  if (labels.size() != gens.size()) throw DomainError("generator labels and vectors differ in count");
  if (!basis_labels.empty() && basis_labels.size() != static_cast<std::size_t>(dim)) {
    throw DomainError("basis label count does not match cone dimension");
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].size() != static_cast<std::size_t>(dim)) {
      throw DomainError("generator '" + labels[i] + "' has length " + std::to_string(gens[i].size()) +
                        ", expected " + std::to_string(dim));
    }
    if (std::find(generators.begin(), generators.end(), gens[i]) != generators.end()) continue;
    generator_labels.push_back(std::move(labels[i]));
    generators.push_back(std::move(gens[i]));
  }
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
  return s;
}

bool verify_witness(const std::vector<RationalVector>& generators, const RationalVector& v, const RationalVector& weights) {
  if (weights.size() != generators.size()) return false;
  RationalVector sum(v.size(), Rational(0));
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (weights[j] < 0) return false;
    for (std::size_t i = 0; i < v.size(); ++i) sum[i] += weights[j] * generators[j][i];
  }
  return sum == v;
}

bool verify_certificate(const std::vector<RationalVector>& generators, const RationalVector& v,
                        const RationalVector& functional) {
  if (functional.size() != v.size()) return false;
  for (const auto& g : generators) {
    if (dot(functional, g) < 0) return false;
  }
  return dot(functional, v) < 0;
}

MembershipResult cone_membership(const std::vector<RationalVector>& generators, const RationalVector& v) {
  const std::size_t m = v.size();
  const std::size_t n = generators.size();
  for (const auto& g : generators) {
    if (g.size() != m) throw DomainError("dimension mismatch between generators and query vector");
  }

  // Tableau for  S G x + a = S v,  x, a >= 0,  minimize sum(a).
  // Columns: n structural, m artificial, then the right-hand side.
  const std::size_t cols = n + m + 1;
  const std::size_t rhs = n + m;
  Matrix<Rational> t(m, cols);
  std::vector<int> row_sign(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    row_sign[i] = v[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t(i, j) = row_sign[i] * generators[j][i];
    t(i, n + i) = 1;
    t(i, rhs) = row_sign[i] * v[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;
  auto cost = [&](std::size_t j) { return j >= n && j < n + m ? Rational(1) : Rational(0); };

  std::vector<Rational> reduced(n + m);
  auto compute_reduced = [&] {
    for (std::size_t j = 0; j < n + m; ++j) {
      Rational r = cost(j);
      for (std::size_t i = 0; i < m; ++i) {
        if (t(i, j) != 0) r -= cost(basis[i]) * t(i, j);
      }
      reduced[j] = r;
    }
  };

  MembershipResult result;
  while (true) {
    compute_reduced();
    // Bland: lowest-index improving column, ties in the ratio test broken by lowest basic index.
    std::size_t enter = n + m;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (reduced[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == n + m) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t(i, enter) <= 0) continue;
      Rational ratio = t(i, rhs) / t(i, enter);
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw ConsistencyError("phase-one LP reported unbounded; objective is bounded below by 0");
    Rational piv = t(leave, enter);
    for (std::size_t j = 0; j < cols; ++j) t(leave, j) /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t(i, enter) == 0) continue;
      Rational f = t(i, enter);
      for (std::size_t j = 0; j < cols; ++j) {
        if (t(leave, j) != 0) t(i, j) -= f * t(leave, j);
      }
    }
    basis[leave] = enter;
    ++result.pivots;
  }

  Rational objective = 0;
  for (std::size_t i = 0; i < m; ++i) objective += cost(basis[i]) * t(i, rhs);

  if (objective == 0) {
    result.member = true;
    result.weights.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] < n) result.weights[basis[i]] = t(i, rhs);
    }
    if (!verify_witness(generators, v, result.weights)) throw ConsistencyError("simplex witness failed re-verification");
    return result;
  }

  // Phase-one duals u_i = 1 - reduced cost of artificial i; y = -S u separates.
  RationalVector y(m);
  for (std::size_t i = 0; i < m; ++i) y[i] = -row_sign[i] * (Rational(1) - reduced[n + i]);
  auto primitive = primitive_integer_vector(y);
  result.functional.clear();
  for (auto& c : primitive) result.functional.emplace_back(c);
  if (!verify_certificate(generators, v, result.functional)) {
    throw ConsistencyError("Farkas certificate failed re-verification");
  }
  return result;
}

MembershipResult cone_membership(const ConeSpec& cone, const RationalVector& v) {
  if (v.size() != static_cast<std::size_t>(cone.dim)) {
    throw DomainError("query vector has length " + std::to_string(v.size()) + ", cone dimension is " +
                      std::to_string(cone.dim));
  }
  return cone_membership(cone.generators, v);
}

std::vector<RationalVector> facets(const ConeSpec& cone) {
  const std::size_t d = static_cast<std::size_t>(cone.dim);
  const std::size_t g = cone.generators.size();
  std::set<std::vector<Integer>> found;
  if (d == 0) return {};
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> choose = [&](std::size_t start) {
    if (pick.size() == d - 1) {
      Matrix<Rational> a(d - 1, d);
      for (std::size_t r = 0; r < d - 1; ++r) {
        for (std::size_t c = 0; c < d; ++c) a(r, c) = cone.generators[pick[r]][c];
      }
      auto ns = nullspace(a);
      if (ns.size() != 1) return;
      RationalVector normal = ns.front();
      bool pos = false, neg = false;
      for (const auto& gen : cone.generators) {
        int s = sgn(dot(normal, gen));
        pos |= s > 0;
        neg |= s < 0;
      }
      if (pos && neg) return;
      if (neg) {
        for (auto& x : normal) x = -x;
      }
      found.insert(primitive_integer_vector(normal));
      return;
    }
    for (std::size_t i = start; i < g; ++i) {
      pick.push_back(i);
      choose(i + 1);
      pick.pop_back();
    }
  };
  choose(0);
  std::vector<RationalVector> out;
  for (const auto& f : found) {
    RationalVector r;
    for (const auto& x : f) r.emplace_back(x);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace schubert

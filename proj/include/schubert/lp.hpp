#pragma once

// Exact cone membership: decide whether v = sum x_i g_i with x >= 0, in
// rational arithmetic, returning either the weights or a Farkas certificate.

#include <string>
#include <vector>

#include "schubert/arith.hpp"

namespace schubert {

using RationalVector = std::vector<Rational>;

struct ConeSpec {
  int dim = 0;
  std::vector<std::string> basis_labels;
  std::vector<std::string> generator_labels;
  std::vector<RationalVector> generators;

  /// Throws DomainError on length mismatch. Exact duplicates are dropped
  /// (the first label wins).
  ConeSpec(int dim, std::vector<std::string> basis_labels, std::vector<std::string> generator_labels,
           std::vector<RationalVector> generators);
};

struct MembershipResult {
  bool member = false;
  /// Nonnegative weights, one per generator (member only).
  RationalVector weights;
  /// Primitive integer functional phi with phi(g_i) >= 0 and phi(v) < 0 (non-member only).
  RationalVector functional;
  int pivots = 0;
};

/// Phase-one simplex with Bland's rule. Both outcomes are re-verified by
/// substitution before returning; a failed re-check throws ConsistencyError.
MembershipResult cone_membership(const std::vector<RationalVector>& generators, const RationalVector& v);
MembershipResult cone_membership(const ConeSpec& cone, const RationalVector& v);

/// Independent re-checks, usable on results from any source.
bool verify_witness(const std::vector<RationalVector>& generators, const RationalVector& v, const RationalVector& weights);
bool verify_certificate(const std::vector<RationalVector>& generators, const RationalVector& v,
                        const RationalVector& functional);

/// Facet normals of a full-dimensional pointed cone, as primitive integer
/// vectors nonnegative on every generator, in lexicographic order.
std::vector<RationalVector> facets(const ConeSpec& cone);

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace schubert

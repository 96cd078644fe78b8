#pragma once

// Multiplicity of a Schubert variety along a Schubert cell, via the
// Rosenthal-Zelevinsky binomial determinant.

#include "schubert/arith.hpp"
#include "schubert/chow.hpp"
#include "schubert/linalg.hpp"

namespace schubert {

struct MultiplicityQuery {
  GrassCtx ctx;
  Partition lambda;  // the variety
  Partition mu;      // the cell; must contain lambda
};

/// The k x k matrix binom(t_i, rho - s_i), rows rho = 0..k-1, columns i = 1..k,
/// together with the sign exponent s_1 + ... + s_k.
struct MultiplicityMatrix {
  Matrix<Integer> entries;
  int sign_exponent = 0;
  std::vector<int> t;
  std::vector<int> s;
};

MultiplicityMatrix multiplicity_matrix(const MultiplicityQuery& q);

/// Throws DomainError "cell not contained in variety" unless mu >= lambda, and
/// ConsistencyError if the signed determinant comes out negative.
Integer rz_multiplicity(const MultiplicityQuery& q);

/// Multiplicity along the most singular point (mu = full box): the d_lambda in
/// the one-point blow-up generators sigma_lambda - d_lambda E.
Integer max_point_multiplicity(const GrassCtx& ctx, const Partition& lambda);

}  // namespace schubert

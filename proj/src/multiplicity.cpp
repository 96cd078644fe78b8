#include "schubert/multiplicity.hpp"

namespace schubert {

namespace {

void check_box(const GrassCtx& ctx, const Partition& p) {
  if (p.rows() != ctx.k || p.width() != ctx.width()) {
    throw DomainError("partition " + p.str() + " is not in the box of G(" + std::to_string(ctx.k) + "," +
                      std::to_string(ctx.n) + ")");
  }
}

}  // namespace

MultiplicityMatrix multiplicity_matrix(const MultiplicityQuery& q) {
  check_box(q.ctx, q.lambda);
  check_box(q.ctx, q.mu);
  if (!q.mu.contains(q.lambda)) {
    throw DomainError("cell not contained in variety: " + q.mu.str() + " does not contain " + q.lambda.str());
  }
  const int k = q.ctx.k;
  const int w = q.ctx.width();
  MultiplicityMatrix out;
  out.entries = Matrix<Integer>(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    const int lam = q.lambda[i - 1];
    out.t.push_back(w + i - lam);
    int s = 0;
    for (int j = 1; j <= k; ++j) {
      if (q.mu[j - 1] - j < lam - i) ++s;
    }
    out.s.push_back(s);
    out.sign_exponent += s;
  }
  for (int rho = 0; rho < k; ++rho) {
    for (int i = 0; i < k; ++i) {
      out.entries(static_cast<std::size_t>(rho), static_cast<std::size_t>(i)) =
          binomial(out.t[static_cast<std::size_t>(i)], rho - out.s[static_cast<std::size_t>(i)]);
    }
  }
  return out;
}

Integer rz_multiplicity(const MultiplicityQuery& q) {
  MultiplicityMatrix m = multiplicity_matrix(q);
  Integer det = bareiss_determinant(m.entries);
  if (m.sign_exponent % 2 != 0) det = -det;
  if (det < 0) {
    throw ConsistencyError("negative multiplicity " + det.get_str() + " for lambda=" + q.lambda.str() +
                           " mu=" + q.mu.str());
  }
  return det;
}

Integer max_point_multiplicity(const GrassCtx& ctx, const Partition& lambda) {
  return rz_multiplicity({ctx, lambda, ctx.point_class()});
}

}  // namespace schubert

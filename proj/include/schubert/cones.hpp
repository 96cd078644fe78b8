#pragma once

// Constructive decompositions of blow-up classes into S-generation generators,
// and the numerical S-generation criteria for curves, surfaces and divisors.

#include <optional>
#include <string>
#include <vector>

#include "schubert/blowup.hpp"
#include "schubert/lp.hpp"

namespace schubert {

struct CombinationTerm {
  std::string label;
  Integer coeff;
  RationalVector vector;
};

/// A nonnegative integer combination claimed to sum to `target`.
struct Decomposition {
  std::vector<std::string> basis_labels;
  RationalVector target;
  std::vector<CombinationTerm> terms;

  RationalVector sum() const;
  /// Every coefficient positive and the sum equals the target exactly.
  bool reproduces() const;
  /// Adds `coeff` copies of a generator, merging with an existing term of the same label.
  void add(const std::string& label, const RationalVector& vector, const Integer& coeff);
  Integer coefficient(const std::string& label) const;
  std::string str() const;
};

// --- two-point divisors on G(k,2k) ------------------------------------------

/// Basis (H, E1, E2); alpha = aH - b1 E1 - b2 E2 is the vector (a, -b1, -b2).
/// Generators: H, E1, E2 and beta_m = H - m E1 - (k-m) E2.
/// Throws DomainError "outside dual-cone region" unless a, b_i >= 0 and ka >= b1 + b2.
Decomposition lemma41_decompose(int k, const Integer& a, const Integer& b1, const Integer& b2);

std::string beta_label(int k, int m);

/// E1, E2 and H - mE1 - (k-m)E2 for 0 <= m <= k in the (H, E1, E2) basis.
ConeSpec thm44_generators(int k);

// --- Schubert span criterion -------------------------------------------------

/// Splits sum a_lambda sigma_lambda - sum b_i E_i (a, b >= 0, sum a >= sum b)
/// into sigma_lambda - E_i, sigma_lambda (and E_i never needed). Works for both gradings.
/// Throws DomainError naming the deficit when sum a < sum b.
Decomposition lemma42_decompose(const BlowupClass& c);

// --- curves on blow-ups of the quadric G(2,4) --------------------------------

/// Basis (l, l_1, ..., l_r); C = a l - sum b_i l_i is (a, -b_1, ..., -b_r).
/// Generators: l, l_i, l - l_i and conics 2l - l_i - l_j - l_k (distinct).
std::string conic_label(int i, int j, int k);

/// Which numerical inequality family a curve class on the blown-up quadric must satisfy.
struct QuadricPrecondition {
  bool holds = true;
  std::string violated;  // human-readable inequality, empty when holds
};
QuadricPrecondition quadric_precondition(const Integer& a, const std::vector<Integer>& b);

/// r <= 7. Peels conics through violated pairs, then greedy largest-three
/// conics until a' >= sum b'^+, then the Schubert span split. Throws
/// DomainError naming the violated inequality when no numerical route exists.
Decomposition quadric_curve_decompose(const Integer& a, const std::vector<Integer>& b);

// --- 3-cycles on blow-ups of G(2,5) ----------------------------------------

/// Basis (s3, s21, E_1..E_r) in codimension 3; alpha = a3 s3 + a21 s21 - sum b_i E_i.
/// Requires a, b >= 0, r <= 4 and 2 a21 + a3 >= sum b_i.
Decomposition g25_threecycle_decompose(const Integer& a21, const Integer& a3, const std::vector<Integer>& b);

// --- S-generation bounds ------------------------------------------------------

/// C(n,k) - k(n-k), plus one for curves when deg G(k,n) >= C(n,k) - k(n-k) + 1.
int sgen_bound(const GrassCtx& ctx, int cycle_dim);
/// Curves on very general blow-ups are S-generated iff r <= deg G(k,n).
Integer very_general_curve_bound(const GrassCtx& ctx);

// --- S-generation decision ----------------------------------------------------

enum class SGenVerdict { InSpan, NotInSpan, UndecidedNeedsGeometry };
std::string to_string(SGenVerdict v);

struct SGenerationReport {
  BlowupClass query;
  SGenVerdict verdict;
  ConeSpec generators;
  std::optional<Decomposition> witness;
  std::optional<RationalVector> functional;
  std::string rationale;
};

/// The numerical generator list of a dimension-m blow-up class: E_{i,[m]},
/// sigma_lambda^*, sigma_lambda^* - E_{i,[m]}, and for r = 1 also
/// sigma_lambda - d_lambda E with d_lambda the maximal point multiplicity.
ConeSpec sgen_generators(const BlowupCtx& ctx, int cycle_dim);

/// Decides membership of a dimension-graded class in sgen_generators. A
/// negative answer is a proof only where the generator list is known complete
/// (curves; surfaces on G(2,4); a single point); otherwise it is reported as
/// undecided-needs-geometry with the certificate attached.
SGenerationReport sgen_check(const BlowupClass& query);

/// sigma_{1,1} + sigma_2 - E_{1,[2]} - ... - E_{r,[2]} on G(2,4) with its verdict.
SGenerationReport g24_nonspan_witness(int r = 3);

}  // namespace schubert

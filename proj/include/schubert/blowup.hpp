#pragma once

// Numerical classes on the blow-up X_r of G(k,n) at r points.
//
// A codimension-m class is  sum a_lambda sigma_lambda - sum b_i E_i^{[m]},
// a dimension-m class is    sum a_lambda sigma_lambda - sum b_i E_{i,[m]},
// where in the second case the ambient part has codimension dim - m. The b_i
// are stored with that sign convention, so a strict transform through p_i with
// multiplicity b has b_i = b and an exceptional linear space has b_i = -1.
//
// Intersection rules: H.E_i = 0, E_i.E_j = 0 (i != j), E_{i,[m]}.E_i^{[m]} = -1,
// E_i^p = (-1)^{p-1} E_i^{[p]}, hence E_i^{dim} = (-1)^{dim+1}.

#include <string>
#include <vector>

#include "schubert/chow.hpp"

namespace schubert {

enum class PointConfiguration { VeryGeneral, General, Special };
enum class Grading { Dimension, Codimension };

std::string to_string(PointConfiguration c);
std::string to_string(Grading g);

struct BlowupCtx {
  GrassCtx grass;
  int r = 0;
  PointConfiguration configuration = PointConfiguration::General;

  BlowupCtx(GrassCtx g, int points, PointConfiguration config = PointConfiguration::General);
  friend bool operator==(const BlowupCtx& a, const BlowupCtx& b) { return a.grass == b.grass && a.r == b.r; }
};

class BlowupClass {
 public:
  /// `ambient` must have codimension m (Codimension) or dim - m (Dimension);
  /// `exc` must have exactly r entries.
  BlowupClass(BlowupCtx ctx, Grading grading, int m, ChowClass ambient, std::vector<Integer> exc);

  static BlowupClass codim(BlowupCtx ctx, ChowClass ambient, std::vector<Integer> exc);
  static BlowupClass dim(BlowupCtx ctx, int m, ChowClass ambient, std::vector<Integer> exc);
  /// The linear class E_i^{[m]} or E_{i,[m]} (b_i = -1, ambient zero). Index is 0-based.
  static BlowupClass exceptional(BlowupCtx ctx, Grading grading, int m, int i);
  /// sigma_lambda^*: the dimension-|lambda| class dual to sigma_lambda.
  static BlowupClass dual_schubert(BlowupCtx ctx, const Partition& lambda);

  const BlowupCtx& ctx() const { return ctx_; }
  Grading grading() const { return grading_; }
  int m() const { return m_; }
  const ChowClass& ambient() const { return ambient_; }
  const std::vector<Integer>& exc() const { return exc_; }

  BlowupClass& operator+=(const BlowupClass& other);
  BlowupClass& operator*=(const Integer& c);
  friend BlowupClass operator+(BlowupClass a, const BlowupClass& b) { return a += b; }
  friend BlowupClass operator*(const Integer& c, BlowupClass a) { return a *= c; }
  friend bool operator==(const BlowupClass& a, const BlowupClass& b) {
    return a.ctx_ == b.ctx_ && a.grading_ == b.grading_ && a.m_ == b.m_ && a.ambient_ == b.ambient_ &&
           a.exc_ == b.exc_;
  }

  /// Coordinates in the effective basis {sigma_lambda} (basis order of the
  /// ambient codimension) followed by {E_i}: (a_lambda..., -b_1, ..., -b_r).
  std::vector<Rational> coordinates() const;
  std::vector<std::string> basis_labels() const;

  std::string str() const;

 private:
  BlowupCtx ctx_;
  Grading grading_;
  int m_;
  ChowClass ambient_;
  std::vector<Integer> exc_;
};

/// Intersection number of a dimension-m class with a codimension-m class.
/// Either argument order is accepted. Throws DomainError on grading mismatch.
Integer pair_blowup(const BlowupClass& a, const BlowupClass& b);

/// D^p as a codimension-p class, for a divisor D = aH - sum c_i E_i and 1 <= p < dim.
BlowupClass divisor_power(const BlowupClass& divisor, int p);

/// (D^p) . beta for beta of dimension p, 1 <= p <= dim. For p = dim, beta is a
/// multiple of the fundamental class (exc must vanish) and the result is
/// beta_0 * (a^dim * deg - sum c_i^dim).
Integer divisor_power_pair(const BlowupClass& divisor, int p, const BlowupClass& beta);

enum class EffectivityPattern { ExceptionalSupported, StandardForm, Indeterminate };
std::string to_string(EffectivityPattern p);

/// Sign pattern an irreducible effective class must have: a positive multiple
/// of one E_i, or nonnegative a_lambda (not all zero) with b_i >= 0.
EffectivityPattern effective_representation_check(const BlowupClass& c);

}  // namespace schubert

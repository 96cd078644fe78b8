#include "schubert/blowup.hpp"

#include <algorithm>

namespace schubert {

std::string to_string(PointConfiguration c) {
  switch (c) {
    case PointConfiguration::VeryGeneral: return "very_general";
    case PointConfiguration::General: return "general";
    case PointConfiguration::Special: return "special";
  }
  return "general";
}

std::string to_string(Grading g) { return g == Grading::Dimension ? "dim" : "codim"; }

std::string to_string(EffectivityPattern p) {
  switch (p) {
    case EffectivityPattern::ExceptionalSupported: return "exceptional-supported";
    case EffectivityPattern::StandardForm: return "standard-form";
    case EffectivityPattern::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

BlowupCtx::BlowupCtx(GrassCtx g, int points, PointConfiguration config) : grass(g), r(points), configuration(config) {
  if (points < 0) throw DomainError("number of blown-up points must be nonnegative");
}

BlowupClass::BlowupClass(BlowupCtx ctx, Grading grading, int m, ChowClass ambient, std::vector<Integer> exc)
    : ctx_(ctx), grading_(grading), m_(m), ambient_(std::move(ambient)), exc_(std::move(exc)) {
  const int dim = ctx_.grass.dim();
  if (m < 0 || m > dim) throw DomainError("grade " + std::to_string(m) + " outside [0, " + std::to_string(dim) + "]");
  if (!(ambient_.ctx() == ctx_.grass)) throw DomainError("ambient class lives on a different Grassmannian");
  const int expected = grading == Grading::Codimension ? m : dim - m;
  if (ambient_.codim() != expected) {
    throw DomainError("ambient codimension " + std::to_string(ambient_.codim()) + " does not match " +
                      to_string(grading) + " " + std::to_string(m));
  }
  if (exc_.size() != static_cast<std::size_t>(ctx_.r)) {
    throw DomainError("expected " + std::to_string(ctx_.r) + " exceptional coefficients, got " +
                      std::to_string(exc_.size()));
  }
}

BlowupClass BlowupClass::codim(BlowupCtx ctx, ChowClass ambient, std::vector<Integer> exc) {
  const int m = ambient.codim();
  return BlowupClass(ctx, Grading::Codimension, m, std::move(ambient), std::move(exc));
}

BlowupClass BlowupClass::dim(BlowupCtx ctx, int m, ChowClass ambient, std::vector<Integer> exc) {
  return BlowupClass(ctx, Grading::Dimension, m, std::move(ambient), std::move(exc));
}

BlowupClass BlowupClass::exceptional(BlowupCtx ctx, Grading grading, int m, int i) {
  if (i < 0 || i >= ctx.r) throw DomainError("exceptional index out of range");
  const int codim = grading == Grading::Codimension ? m : ctx.grass.dim() - m;
  std::vector<Integer> exc(static_cast<std::size_t>(ctx.r), 0);
  exc[static_cast<std::size_t>(i)] = -1;
  return BlowupClass(ctx, grading, m, ChowClass(ctx.grass, codim), std::move(exc));
}

BlowupClass BlowupClass::dual_schubert(BlowupCtx ctx, const Partition& lambda) {
  return BlowupClass(ctx, Grading::Dimension, lambda.size(), ChowClass::schubert(ctx.grass, dual(lambda)),
                     std::vector<Integer>(static_cast<std::size_t>(ctx.r), 0));
}

BlowupClass& BlowupClass::operator+=(const BlowupClass& other) {
  if (!(other.ctx_ == ctx_) || other.grading_ != grading_ || other.m_ != m_) {
    throw DomainError("adding blow-up classes of different grade");
  }
  ambient_ += other.ambient_;
  for (std::size_t i = 0; i < exc_.size(); ++i) exc_[i] += other.exc_[i];
  return *this;
}

BlowupClass& BlowupClass::operator*=(const Integer& c) {
  ambient_ *= c;
  for (auto& b : exc_) b *= c;
  return *this;
}

std::vector<Rational> BlowupClass::coordinates() const {
  std::vector<Rational> out;
  for (const auto& c : ambient_.coordinates()) out.emplace_back(c);
  for (const auto& b : exc_) out.emplace_back(-b);
  return out;
}

std::vector<std::string> BlowupClass::basis_labels() const {
  std::vector<std::string> out;
  const auto& g = ctx_.grass;
  for (const auto& lambda : enumerate_partitions(g.k, g.width(), ambient_.codim())) out.push_back("s" + lambda.str());
  const std::string suffix = grading_ == Grading::Codimension ? "^[" + std::to_string(m_) + "]"
                                                              : "_[" + std::to_string(m_) + "]";
  for (int i = 1; i <= ctx_.r; ++i) out.push_back("E" + std::to_string(i) + suffix);
  return out;
}

std::string BlowupClass::str() const {
  std::string out = ambient_.str();
  for (std::size_t i = 0; i < exc_.size(); ++i) {
    if (exc_[i] == 0) continue;
    out += exc_[i] > 0 ? " - " : " + ";
    Integer a = abs(exc_[i]);
    if (a != 1) out += a.get_str() + "*";
    out += "E" + std::to_string(i + 1);
  }
  return out;
}

namespace {

void require_same_space(const BlowupClass& a, const BlowupClass& b) {
  if (!(a.ctx() == b.ctx())) throw DomainError("classes live on different blow-ups");
}

const BlowupClass& the_divisor(const BlowupClass& d) {
  if (d.grading() != Grading::Codimension || d.m() != 1) {
    throw DomainError("expected a divisor class (codimension 1)");
  }
  return d;
}

}  // namespace

Integer pair_blowup(const BlowupClass& a, const BlowupClass& b) {
  require_same_space(a, b);
  if (a.grading() == b.grading()) throw DomainError("pairing needs one dimension-graded and one codimension-graded class");
  const BlowupClass& cycle = a.grading() == Grading::Dimension ? a : b;
  const BlowupClass& cocycle = a.grading() == Grading::Dimension ? b : a;
  if (cycle.m() != cocycle.m()) {
    throw DomainError("grading mismatch: dimension " + std::to_string(cycle.m()) + " against codimension " +
                      std::to_string(cocycle.m()));
  }
  Integer out = pair(cycle.ambient(), cocycle.ambient());
  // (-b_i E_{i,[m]}) . (-c_i E_i^{[m]}) = b_i c_i (E_{i,[m]} . E_i^{[m]}) = -b_i c_i
  for (std::size_t i = 0; i < cycle.exc().size(); ++i) out -= cycle.exc()[i] * cocycle.exc()[i];
  return out;
}

BlowupClass divisor_power(const BlowupClass& divisor, int p) {
  const BlowupClass& d = the_divisor(divisor);
  const GrassCtx& g = d.ctx().grass;
  if (p < 1 || p >= g.dim()) throw DomainError("divisor power must satisfy 1 <= p < dim");
  const Integer a = d.ambient().coefficient(g.partition({1}));
  ChowClass ambient = ChowClass::unit(g);
  for (int i = 0; i < p; ++i) ambient = pieri(1, ambient);
  Integer ap;
  mpz_pow_ui(ap.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(p));
  ambient *= ap;
  // (-c_i E_i)^p = (-c_i)^p E_i^p and E_i^p = (-1)^{p-1} E_i^{[p]}.
  const int self_sign = (p - 1) % 2 == 0 ? 1 : -1;
  std::vector<Integer> exc;
  for (const auto& c : d.exc()) {
    Integer minus_c = -c;
    Integer pow;
    mpz_pow_ui(pow.get_mpz_t(), minus_c.get_mpz_t(), static_cast<unsigned long>(p));
    Integer coeff_of_linear = pow * self_sign;  // coefficient of +E_i^{[p]}
    exc.push_back(-coeff_of_linear);
  }
  return BlowupClass::codim(d.ctx(), std::move(ambient), std::move(exc));
}

Integer divisor_power_pair(const BlowupClass& divisor, int p, const BlowupClass& beta) {
  const BlowupClass& d = the_divisor(divisor);
  require_same_space(d, beta);
  if (beta.grading() != Grading::Dimension || beta.m() != p) {
    throw DomainError("grading mismatch: need a dimension-" + std::to_string(p) + " class");
  }
  const GrassCtx& g = d.ctx().grass;
  if (p < 1 || p > g.dim()) throw DomainError("divisor power must satisfy 1 <= p <= dim");
  if (p < g.dim()) return pair_blowup(beta, divisor_power(d, p));

  // Top power: D^dim = a^dim [X-degree] + sum (-c_i)^dim E_i^dim, E_i^dim = (-1)^{dim+1}.
  for (const auto& b : beta.exc()) {
    if (b != 0) throw DomainError("a top-dimensional class has no exceptional part");
  }
  const Integer multiple = beta.ambient().coefficient(Partition::empty(g.k, g.width()));
  const Integer a = d.ambient().coefficient(g.partition({1}));
  Integer total;
  mpz_pow_ui(total.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(g.dim()));
  total *= degree(g);
  const int top_sign = (g.dim() + 1) % 2 == 0 ? 1 : -1;
  for (const auto& c : d.exc()) {
    Integer minus_c = -c;
    Integer pow;
    mpz_pow_ui(pow.get_mpz_t(), minus_c.get_mpz_t(), static_cast<unsigned long>(g.dim()));
    total += pow * top_sign;
  }
  return total * multiple;
}

EffectivityPattern effective_representation_check(const BlowupClass& c) {
  const auto& exc = c.exc();
  const bool ambient_zero = c.ambient().is_zero();
  if (ambient_zero) {
    const auto nonzero = std::count_if(exc.begin(), exc.end(), [](const Integer& b) { return b != 0; });
    const bool one_negative = nonzero == 1 && std::any_of(exc.begin(), exc.end(), [](const Integer& b) { return b < 0; });
    return one_negative ? EffectivityPattern::ExceptionalSupported : EffectivityPattern::Indeterminate;
  }
  const auto& terms = c.ambient().terms();
  const bool a_nonneg = std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.second >= 0; });
  const bool b_nonneg = std::all_of(exc.begin(), exc.end(), [](const Integer& b) { return b >= 0; });
  return a_nonneg && b_nonneg ? EffectivityPattern::StandardForm : EffectivityPattern::Indeterminate;
}

}  // namespace schubert

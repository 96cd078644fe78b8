#pragma once

// The Chow ring of the Grassmannian G(k,n): Pieri and Giambelli, products,
// the Poincare pairing and the Pluecker degree.

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "schubert/arith.hpp"
#include "schubert/partitions.hpp"

namespace schubert {

struct GrassCtx {
  int k;
  int n;

  /// Throws DomainError unless n > k >= 1.
  GrassCtx(int k, int n);

  int width() const { return n - k; }
  int dim() const { return k * (n - k); }
  /// k >= 2 and n - k >= 2; callers warn (never fail) when this is false.
  bool standard_range() const { return k >= 2 && n - k >= 2; }

  Partition partition(std::vector<int> parts) const { return Partition(std::move(parts), k, width()); }
  Partition point_class() const { return Partition::full_box(k, width()); }

  friend bool operator==(const GrassCtx&, const GrassCtx&) = default;
};

/// A homogeneous integer combination of Schubert classes.
class ChowClass {
 public:
  using Terms = std::map<Partition, Integer, BasisOrder>;

  ChowClass(GrassCtx ctx, int codim);

  static ChowClass schubert(const GrassCtx& ctx, const Partition& lambda);
  static ChowClass schubert(const GrassCtx& ctx, std::vector<int> parts);
  static ChowClass unit(const GrassCtx& ctx);

  const GrassCtx& ctx() const { return ctx_; }
  int codim() const { return codim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(const Partition& lambda) const;
  void add_term(const Partition& lambda, const Integer& c);

  ChowClass& operator+=(const ChowClass& other);
  ChowClass& operator-=(const ChowClass& other);
  ChowClass& operator*=(const Integer& c);
  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
  friend ChowClass operator*(const Integer& c, ChowClass a) { return a *= c; }
  friend bool operator==(const ChowClass& a, const ChowClass& b) {
    return a.ctx_ == b.ctx_ && a.codim_ == b.codim_ && a.terms_ == b.terms_;
  }

  /// Coefficients in the basis enumerate_partitions(k, n-k, codim).
  std::vector<Integer> coordinates() const;

  std::string str() const;

 private:
  GrassCtx ctx_;
  int codim_;
  Terms terms_;
};

/// sigma_p * sigma_mu. Throws DomainError when p exceeds the box width.
ChowClass pieri(int special, const Partition& mu);
ChowClass pieri(int special, const ChowClass& cls);

/// Giambelli determinant expansion: monomial (special sizes, descending,
/// zeros dropped) -> signed coefficient.
using GiambelliExpansion = std::map<std::vector<int>, Integer>;
GiambelliExpansion giambelli(const Partition& lambda);

/// Evaluates a polynomial in special classes by folding Pieri from the unit class.
ChowClass evaluate_special_polynomial(const GrassCtx& ctx, const GiambelliExpansion& poly);

/// Memo table for products of Schubert classes. Concurrent readers, one writer
/// at a time; stored values never depend on insertion order.
class ProductCache {
 public:
  std::optional<ChowClass> find(const Partition& a, const Partition& b) const;
  void insert(const Partition& a, const Partition& b, const ChowClass& product);
  std::size_t size() const;

 private:
  static std::pair<Partition, Partition> key(const Partition& a, const Partition& b);
  mutable std::shared_mutex mutex_;
  std::map<std::pair<Partition, Partition>, ChowClass> table_;
};

/// Bilinear product through Giambelli expansion of `a` and Pieri folds over `b`.
/// Throws DomainError on mismatched contexts or when the total codimension exceeds dim.
ChowClass multiply(const ChowClass& a, const ChowClass& b, ProductCache* cache = nullptr);
ChowClass multiply_schubert(const GrassCtx& ctx, const Partition& a, const Partition& b,
                            ProductCache* cache = nullptr);

/// Degree of the top-codimension part of a*b. Requires codim(a)+codim(b) = dim.
Integer pair(const ChowClass& a, const ChowClass& b);

Integer degree_closed_form(const GrassCtx& ctx);
Integer degree_by_pieri(const GrassCtx& ctx);
/// Computes both routes; throws ConsistencyError if they disagree.
Integer degree(const GrassCtx& ctx);

}  // namespace schubert

#pragma once

// Partitions confined to a k x w box. They index the Schubert basis of every
// Chow group downstream, so the storage is fixed-length (trailing zeros kept).

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace schubert {

class Partition {
 public:
  /// `parts` may omit trailing zeros; it is padded to `k` entries.
  /// Throws DomainError unless weakly decreasing, nonnegative, and inside the box.
  Partition(std::vector<int> parts, int k, int w);

  static Partition empty(int k, int w);
  static Partition full_box(int k, int w);

  int rows() const { return k_; }
  int width() const { return w_; }
  int size() const;
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  std::span<const int> parts() const { return parts_; }
  std::vector<int> nonzero_parts() const;
  int length() const;  // number of nonzero parts

  bool is_special() const { return length() <= 1; }

  /// Componentwise mu >= lambda.
  bool contains(const Partition& lambda) const;

  /// "(2,1)"; the empty partition renders as "()".
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.k_ <=> b.k_; c != 0) return c;
    if (auto c = a.w_ <=> b.w_; c != 0) return c;
    return a.parts_ <=> b.parts_;
  }

 private:
  int k_;
  int w_;
  std::vector<int> parts_;
};

/// Canonical basis order: reverse lexicographic, so (2,0) precedes (1,1).
struct BasisOrder {
  bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

/// All partitions of m in the k x w box, in BasisOrder. Empty when m is out of range.
std::vector<Partition> enumerate_partitions(int k, int w, int m);

/// All partitions in the box, grade by grade.
std::vector<Partition> enumerate_box(int k, int w);

/// The complement (w - lambda_k, ..., w - lambda_1).
Partition dual(const Partition& lambda);

}  // namespace schubert

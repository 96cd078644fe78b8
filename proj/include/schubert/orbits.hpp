#pragma once

// Orbits of the block upper-triangular group B on G(k', 2k) (and on G(k, 2k+s)),
// labelled by incidence matrices dim W ∩ (F_i + G_j), 0 <= i, j <= k.

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "schubert/arith.hpp"

namespace schubert {

class IncidenceMatrix {
 public:
  explicit IncidenceMatrix(int k);
  IncidenceMatrix(int k, std::vector<std::vector<int>> entries);

  int k() const { return k_; }
  int operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  int& at(int i, int j) { return entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const std::vector<std::vector<int>>& entries() const { return entries_; }
  int subspace_dim() const { return (*this)(k_, k_); }

  /// Zero corner, monotone rows and columns, unit steps, corner bound dim <= k.
  bool satisfies_invariants() const;
  std::string str() const;

  friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;
  friend auto operator<=>(const IncidenceMatrix&, const IncidenceMatrix&) = default;

 private:
  int k_;
  std::vector<std::vector<int>> entries_;
};

/// w_l = f_{i_l} + g_{j_l}; index 0 means that summand is absent.
struct OrbitRepresentative {
  std::vector<std::pair<int, int>> pairs;

  /// Pairs in range, none equal to (0,0), no nonzero f- or g-index repeated.
  bool valid(int k) const;
  /// Sorted pairs, so equal sets compare equal.
  OrbitRepresentative canonical() const;
  std::string str() const;
  friend bool operator==(const OrbitRepresentative&, const OrbitRepresentative&) = default;
};

IncidenceMatrix incidence_of_representative(const OrbitRepresentative& rep, int k);

/// Greedy peeling of the lexicographically first nonzero entry. Throws
/// DomainError "invalid incidence profile" if the matrix is not realizable.
OrbitRepresentative representative_from_incidence(const IncidenceMatrix& I);

/// One representative per orbit of dim-dimensional subspaces of F_k + G_k,
/// ordered by incidence matrix.
std::vector<OrbitRepresentative> enumerate_orbits(int k, int subspace_dim);

/// dim B - dim Stab_B(W) for n = 2k + s. For s > 0 the representative spans
/// W ∩ (F_k + G_k) and W is completed by the last k - |pairs| extra basis vectors.
int orbit_dimension(const OrbitRepresentative& rep, int k, int s = 0);

/// Dimension of the Lie algebra of B for n = 2k + s.
int borel_block_dimension(int k, int s);

struct DenseOrbitReport {
  int k = 0;
  int d = 0;
  Integer dim_group;        // dk(k+1)/2
  Integer dim_grassmannian; // (d-1)k^2
  Integer dim_group_effective;  // scalars act trivially
  std::string verdict;      // "obstruction", "boundary" or "no-obstruction"
};

DenseOrbitReport dense_orbit_dimension_check(int k, int d);

}  // namespace schubert

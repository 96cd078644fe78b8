#pragma once

// Brute-force check of the orbit combinatorics over F_q (q prime): every
// subspace of F_q^{2k}, its incidence matrix by ranks, and the actual orbits
// of the block upper-triangular group B(F_q).

#include <cstdint>
#include <set>
#include <vector>

#include "schubert/orbits.hpp"

namespace schubert {

/// A subspace stored as its reduced row echelon basis (canonical).
using FqSubspace = std::vector<std::vector<int>>;

/// All d-dimensional subspaces of F_q^n, q prime.
std::vector<FqSubspace> enumerate_subspaces(int q, int n, int d);

int rank_mod(std::vector<std::vector<int>> rows, int q);
FqSubspace rref_mod(std::vector<std::vector<int>> rows, int q);

/// dim W ∩ (F_i + G_j) computed as dim W + dim(F_i+G_j) - dim(W + F_i + G_j).
IncidenceMatrix incidence_over_fq(const FqSubspace& w, int k, int q);

/// Number of F_q-points of G(d, n).
Integer gaussian_binomial(int n, int d, int q);

struct FqOrbitSummary {
  int q = 0;
  int k = 0;
  int subspace_dim = 0;
  std::size_t subspace_count = 0;
  std::set<IncidenceMatrix> realized;   // incidence matrices of actual subspaces
  std::vector<std::size_t> orbit_sizes; // sizes of the B(F_q)-orbits
  bool orbits_match_incidence = false;  // incidence is constant on orbits and separates them
};

/// Orbits of B(F_q) on G(d, 2k)(F_q), computed by applying every group element.
FqOrbitSummary fq_orbit_summary(int q, int k, int subspace_dim);

struct OracleComparison {
  bool agree = false;
  std::vector<std::string> problems;
};

/// Compares enumerate_orbits(k, d) with the F_q computation for the given primes.
OracleComparison compare_with_finite_fields(int k, int subspace_dim, const std::vector<int>& primes = {2, 3});

}  // namespace schubert

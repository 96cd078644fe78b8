#include "schubert/orbits.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "schubert/linalg.hpp"

namespace schubert {

IncidenceMatrix::IncidenceMatrix(int k) : k_(k) {
  if (k < 0) throw DomainError("k must be nonnegative");
  entries_.assign(static_cast<std::size_t>(k + 1), std::vector<int>(static_cast<std::size_t>(k + 1), 0));
}

IncidenceMatrix::IncidenceMatrix(int k, std::vector<std::vector<int>> entries) : k_(k), entries_(std::move(entries)) {
  if (k < 0) throw DomainError("k must be nonnegative");
  if (entries_.size() != static_cast<std::size_t>(k + 1)) throw DomainError("incidence matrix must have k+1 rows");
  for (const auto& row : entries_) {
    if (row.size() != static_cast<std::size_t>(k + 1)) throw DomainError("incidence matrix must have k+1 columns");
  }
}

bool IncidenceMatrix::satisfies_invariants() const {
  if ((*this)(0, 0) != 0) return false;
  if (subspace_dim() > k_) return false;
  for (int i = 0; i <= k_; ++i) {
    for (int j = 0; j <= k_; ++j) {
      if ((*this)(i, j) < 0) return false;
      if (i > 0) {
        int step = (*this)(i, j) - (*this)(i - 1, j);
        if (step < 0 || step > 1) return false;
      }
      if (j > 0) {
        int step = (*this)(i, j) - (*this)(i, j - 1);
        if (step < 0 || step > 1) return false;
      }
    }
  }
  return true;
}

std::string IncidenceMatrix::str() const {
  std::string out = "[";
  for (int i = 0; i <= k_; ++i) {
    if (i) out += ";";
    for (int j = 0; j <= k_; ++j) out += (j ? " " : "") + std::to_string((*this)(i, j));
  }
  return out + "]";
}

bool OrbitRepresentative::valid(int k) const {
  std::set<int> fs, gs;
  for (auto [i, j] : pairs) {
    if (i < 0 || j < 0 || i > k || j > k) return false;
    if (i == 0 && j == 0) return false;
    if (i > 0 && !fs.insert(i).second) return false;
    if (j > 0 && !gs.insert(j).second) return false;
  }
  return true;
}

OrbitRepresentative OrbitRepresentative::canonical() const {
  OrbitRepresentative out = *this;
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

std::string OrbitRepresentative::str() const {
  std::string out;
  for (auto [i, j] : pairs) {
    if (!out.empty()) out += ", ";
    if (i && j) out += "f" + std::to_string(i) + "+g" + std::to_string(j);
    else if (i) out += "f" + std::to_string(i);
    else out += "g" + std::to_string(j);
  }
  return "<" + out + ">";
}

IncidenceMatrix incidence_of_representative(const OrbitRepresentative& rep, int k) {
  if (!rep.valid(k)) throw DomainError("invalid orbit representative " + rep.str());
  IncidenceMatrix I(k);
  for (auto [a, b] : rep.pairs) {
    for (int i = a; i <= k; ++i) {
      for (int j = b; j <= k; ++j) ++I.at(i, j);
    }
  }
  return I;
}

OrbitRepresentative representative_from_incidence(const IncidenceMatrix& I) {
  const int k = I.k();
  if (!I.satisfies_invariants()) throw DomainError("invalid incidence profile: " + I.str());
  IncidenceMatrix residual = I;
  OrbitRepresentative rep;
  while (residual(k, k) > 0) {
    int pi = -1, pj = -1;
    for (int i = 0; i <= k && pi < 0; ++i) {
      for (int j = 0; j <= k; ++j) {
        if (residual(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    rep.pairs.emplace_back(pi, pj);
    for (int i = pi; i <= k; ++i) {
      for (int j = pj; j <= k; ++j) {
        if (--residual.at(i, j) < 0) throw DomainError("invalid incidence profile: " + I.str());
      }
    }
  }
  for (const auto& row : residual.entries()) {
    for (int x : row) {
      if (x != 0) throw DomainError("invalid incidence profile: " + I.str());
    }
  }
  if (!rep.valid(k) || !(incidence_of_representative(rep, k) == I)) {
    throw DomainError("invalid incidence profile: " + I.str());
  }
  return rep;
}

std::vector<OrbitRepresentative> enumerate_orbits(int k, int subspace_dim) {
  if (k < 1) throw DomainError("k must be positive");
  if (subspace_dim < 0 || subspace_dim > k) throw DomainError("subspace dimension must lie in [0, k]");
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; j <= k; ++j) {
      if (i || j) cells.emplace_back(i, j);
    }
  }
  std::map<IncidenceMatrix, OrbitRepresentative> found;
  OrbitRepresentative cur;
  std::vector<bool> used_f(static_cast<std::size_t>(k + 1), false), used_g(static_cast<std::size_t>(k + 1), false);
  // Multisets of cells in index order; only index 0 may repeat.
  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    if (static_cast<int>(cur.pairs.size()) == subspace_dim) {
      found.emplace(incidence_of_representative(cur, k), cur);
      return;
    }
    for (std::size_t c = start; c < cells.size(); ++c) {
      auto [i, j] = cells[c];
      if ((i && used_f[static_cast<std::size_t>(i)]) || (j && used_g[static_cast<std::size_t>(j)])) continue;
      if (i) used_f[static_cast<std::size_t>(i)] = true;
      if (j) used_g[static_cast<std::size_t>(j)] = true;
      cur.pairs.emplace_back(i, j);
      extend(c + 1);
      cur.pairs.pop_back();
      if (i) used_f[static_cast<std::size_t>(i)] = false;
      if (j) used_g[static_cast<std::size_t>(j)] = false;
    }
  };
  extend(0);
  std::vector<OrbitRepresentative> out;
  for (auto& [I, rep] : found) out.push_back(rep.canonical());
  return out;
}

int borel_block_dimension(int k, int s) { return k * (k + 1) + 2 * k * s + s * (s + 1) / 2; }

int orbit_dimension(const OrbitRepresentative& rep, int k, int s) {
  if (s < 0) throw DomainError("s must be nonnegative");
  if (!rep.valid(k)) throw DomainError("invalid orbit representative " + rep.str());
  const int n = 2 * k + s;
  const int extra = s > 0 ? k - static_cast<int>(rep.pairs.size()) : 0;
  if (extra < 0) throw DomainError("representative has more than k vectors");
  if (extra > s) throw DomainError("not enough extra coordinates to complete the representative");
  const int d = static_cast<int>(rep.pairs.size()) + extra;

  // Columns of A span W; coordinates f_1..f_k, g_1..g_k, h_1..h_s.
  Matrix<Rational> A(static_cast<std::size_t>(n), static_cast<std::size_t>(d));
  int col = 0;
  for (auto [i, j] : rep.pairs) {
    if (i) A(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(col)) = 1;
    if (j) A(static_cast<std::size_t>(k + j - 1), static_cast<std::size_t>(col)) = 1;
    ++col;
  }
  for (int e = 0; e < extra; ++e, ++col) A(static_cast<std::size_t>(n - extra + e), static_cast<std::size_t>(col)) = 1;

  // Rows of M span the annihilator of W.
  Matrix<Rational> At(static_cast<std::size_t>(d), static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < d; ++c) At(static_cast<std::size_t>(c), static_cast<std::size_t>(r)) = A(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  }
  const auto ann = nullspace(At);

  auto allowed = [&](int a, int b) {
    const bool a_f = a < k, a_g = a >= k && a < 2 * k, a_h = a >= 2 * k;
    const bool b_f = b < k, b_g = b >= k && b < 2 * k, b_h = b >= 2 * k;
    if (b_h) return !a_h || a <= b;
    if (a_h) return false;
    if (a_f && b_f) return a <= b;
    if (a_g && b_g) return a <= b;
    return false;
  };

  // Tangent map X -> M X A restricted to the Lie algebra of B.
  std::vector<std::vector<Rational>> images;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!allowed(a, b)) continue;
      std::vector<Rational> img;
      for (const auto& m : ann) {
        for (int c = 0; c < d; ++c) img.push_back(m[static_cast<std::size_t>(a)] * A(static_cast<std::size_t>(b), static_cast<std::size_t>(c)));
      }
      images.push_back(std::move(img));
    }
  }
  if (static_cast<int>(images.size()) != borel_block_dimension(k, s)) {
    throw ConsistencyError("Lie algebra basis has the wrong size");
  }
  const std::size_t width = ann.size() * static_cast<std::size_t>(d);
  if (width == 0) return 0;
  Matrix<Rational> T(images.size(), width);
  for (std::size_t r = 0; r < images.size(); ++r) {
    for (std::size_t c = 0; c < width; ++c) T(r, c) = images[r][c];
  }
  return static_cast<int>(rank(T));
}

DenseOrbitReport dense_orbit_dimension_check(int k, int d) {
  if (k < 1 || d < 2) throw DomainError("need k >= 1 and d >= 2");
  DenseOrbitReport rep;
  rep.k = k;
  rep.d = d;
  rep.dim_group = Integer(d) * k * (k + 1) / 2;
  rep.dim_grassmannian = Integer(d - 1) * k * k;
  rep.dim_group_effective = rep.dim_group - 1;
  if (rep.dim_group < rep.dim_grassmannian) rep.verdict = "obstruction";
  else if (rep.dim_group == rep.dim_grassmannian) rep.verdict = "boundary";
  else rep.verdict = "no-obstruction";
  return rep;
}

}  // namespace schubert

#include "schubert/finite_field.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace schubert {

namespace {

int inverse_mod(int a, int q) {
  for (int x = 1; x < q; ++x) {
    if (a * x % q == 1) return x;
  }
  throw DomainError("no inverse mod " + std::to_string(q));
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int p = 2; p * p <= q; ++p) {
    if (q % p == 0) return false;
  }
  return true;
}

}  // namespace

FqSubspace rref_mod(std::vector<std::vector<int>> rows, int q) {
  if (rows.empty()) return {};
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] % q == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const int inv = inverse_mod(((rows[r][c] % q) + q) % q, q);
    for (auto& x : rows[r]) x = ((x * inv) % q + q) % q;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      const int f = ((rows[i][c] % q) + q) % q;
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = ((rows[i][j] - f * rows[r][j]) % q + q) % q;
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

int rank_mod(std::vector<std::vector<int>> rows, int q) { return static_cast<int>(rref_mod(std::move(rows), q).size()); }

std::vector<FqSubspace> enumerate_subspaces(int q, int n, int d) {
  if (!is_prime(q)) throw DomainError("field size must be prime");
  if (d < 0 || d > n) throw DomainError("subspace dimension out of range");
  std::vector<FqSubspace> out;
  if (d == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> pivots;
  std::function<void(int)> choose = [&](int start) {
    if (static_cast<int>(pivots.size()) == d) {
      // Free entries: row r, column c > pivot r and c not a pivot.
      std::vector<std::pair<int, int>> free;
      for (int r = 0; r < d; ++r) {
        for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < n; ++c) {
          if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(r, c);
        }
      }
      std::vector<int> vals(free.size(), 0);
      while (true) {
        FqSubspace m(static_cast<std::size_t>(d), std::vector<int>(static_cast<std::size_t>(n), 0));
        for (int r = 0; r < d; ++r) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])] = 1;
        for (std::size_t t = 0; t < free.size(); ++t) {
          m[static_cast<std::size_t>(free[t].first)][static_cast<std::size_t>(free[t].second)] = vals[t];
        }
        out.push_back(std::move(m));
        std::size_t t = 0;
        while (t < vals.size() && ++vals[t] == q) vals[t++] = 0;
        if (t == vals.size()) break;
      }
      return;
    }
    for (int c = start; c < n; ++c) {
      pivots.push_back(c);
      choose(c + 1);
      pivots.pop_back();
    }
  };
  choose(0);
  return out;
}

IncidenceMatrix incidence_over_fq(const FqSubspace& w, int k, int q) {
  const int n = 2 * k;
  IncidenceMatrix I(k);
  const int dw = static_cast<int>(w.size());
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; j <= k; ++j) {
      std::vector<std::vector<int>> rows = w;
      for (int a = 0; a < i; ++a) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(a)] = 1;
        rows.push_back(e);
      }
      for (int b = 0; b < j; ++b) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(k + b)] = 1;
        rows.push_back(e);
      }
      const int sum_dim = rows.empty() ? 0 : rank_mod(rows, q);
      I.at(i, j) = dw + i + j - sum_dim;
    }
  }
  return I;
}

Integer gaussian_binomial(int n, int d, int q) {
  if (d < 0 || d > n) return 0;
  Integer num = 1, den = 1;
  for (int i = 0; i < d; ++i) {
    Integer a, b;
    mpz_ui_pow_ui(a.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(n - i));
    mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(i + 1));
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

namespace {

// All invertible upper-triangular k x k matrices over F_q.
std::vector<std::vector<std::vector<int>>> upper_triangular_group(int k, int q) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) cells.emplace_back(i, j);
  }
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> vals(cells.size(), 0);
  while (true) {
    bool invertible = true;
    std::vector<std::vector<int>> m(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k), 0));
    for (std::size_t t = 0; t < cells.size(); ++t) {
      m[static_cast<std::size_t>(cells[t].first)][static_cast<std::size_t>(cells[t].second)] = vals[t];
      if (cells[t].first == cells[t].second && vals[t] == 0) invertible = false;
    }
    if (invertible) out.push_back(std::move(m));
    std::size_t t = 0;
    while (t < vals.size() && ++vals[t] == q) vals[t++] = 0;
    if (t == vals.size()) break;
  }
  return out;
}

}  // namespace

FqOrbitSummary fq_orbit_summary(int q, int k, int subspace_dim) {
  FqOrbitSummary s;
  s.q = q;
  s.k = k;
  s.subspace_dim = subspace_dim;
  const int n = 2 * k;
  const auto spaces = enumerate_subspaces(q, n, subspace_dim);
  s.subspace_count = spaces.size();
  std::map<FqSubspace, std::size_t> index;
  for (std::size_t i = 0; i < spaces.size(); ++i) index.emplace(spaces[i], i);

  std::vector<IncidenceMatrix> incidence;
  for (const auto& w : spaces) {
    incidence.push_back(incidence_over_fq(w, k, q));
    s.realized.insert(incidence.back());
  }

  // Union-find over the action of B = B_1 x B_2 on row spaces: w -> w C^T.
  std::vector<std::size_t> parent(spaces.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  const auto tri = upper_triangular_group(k, q);
  for (const auto& b1 : tri) {
    for (const auto& b2 : tri) {
      for (std::size_t i = 0; i < spaces.size(); ++i) {
        std::vector<std::vector<int>> moved;
        for (const auto& row : spaces[i]) {
          std::vector<int> v(static_cast<std::size_t>(n), 0);
          // (C x)_a = sum_b C_ab x_b within each block.
          for (int a = 0; a < k; ++a) {
            int fa = 0, ga = 0;
            for (int b = 0; b < k; ++b) {
              fa += b1[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] * row[static_cast<std::size_t>(b)];
              ga += b2[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] * row[static_cast<std::size_t>(k + b)];
            }
            v[static_cast<std::size_t>(a)] = fa % q;
            v[static_cast<std::size_t>(k + a)] = ga % q;
          }
          moved.push_back(std::move(v));
        }
        const auto it = index.find(rref_mod(moved, q));
        if (it == index.end()) throw ConsistencyError("group action left the Grassmannian");
        parent[find(i)] = find(it->second);
      }
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> orbits;
  for (std::size_t i = 0; i < spaces.size(); ++i) orbits[find(i)].push_back(i);
  std::map<IncidenceMatrix, int> owners;
  bool ok = true;
  for (const auto& [root, members] : orbits) {
    s.orbit_sizes.push_back(members.size());
    for (auto m : members) ok &= incidence[m] == incidence[root];
    ok &= ++owners[incidence[root]] == 1;
  }
  s.orbits_match_incidence = ok;
  return s;
}

OracleComparison compare_with_finite_fields(int k, int subspace_dim, const std::vector<int>& primes) {
  OracleComparison cmp;
  std::set<IncidenceMatrix> combinatorial;
  for (const auto& rep : enumerate_orbits(k, subspace_dim)) combinatorial.insert(incidence_of_representative(rep, k));
  for (int q : primes) {
    const auto s = fq_orbit_summary(q, k, subspace_dim);
    const std::string tag = "q=" + std::to_string(q) + " k=" + std::to_string(k) + " dim=" + std::to_string(subspace_dim);
    if (s.realized != combinatorial) {
      cmp.problems.push_back(tag + ": realized incidence matrices differ from the enumeration (" +
                             std::to_string(s.realized.size()) + " vs " + std::to_string(combinatorial.size()) + ")");
    }
    if (!s.orbits_match_incidence) cmp.problems.push_back(tag + ": B-orbits are not the incidence fibers");
    if (s.orbit_sizes.size() != combinatorial.size()) {
      cmp.problems.push_back(tag + ": " + std::to_string(s.orbit_sizes.size()) + " orbits, expected " +
                             std::to_string(combinatorial.size()));
    }
    const std::size_t total = std::accumulate(s.orbit_sizes.begin(), s.orbit_sizes.end(), std::size_t{0});
    if (Integer(static_cast<unsigned long>(total)) != gaussian_binomial(2 * k, subspace_dim, q)) {
      cmp.problems.push_back(tag + ": orbit sizes do not add up to the point count");
    }
  }
  cmp.agree = cmp.problems.empty();
  return cmp;
}

}  // namespace schubert

#include "schubert/chow.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

namespace schubert {

GrassCtx::GrassCtx(int k_, int n_) : k(k_), n(n_) {
  if (k < 1 || n <= k) {
    throw DomainError("invalid Grassmannian G(" + std::to_string(k) + "," + std::to_string(n) +
                      "): need n > k >= 1");
  }
}

ChowClass::ChowClass(GrassCtx ctx, int codim) : ctx_(ctx), codim_(codim) {
  if (codim < 0 || codim > ctx.dim()) {
    throw DomainError("codimension " + std::to_string(codim) + " outside [0, " + std::to_string(ctx.dim()) + "]");
  }
}

ChowClass ChowClass::schubert(const GrassCtx& ctx, const Partition& lambda) {
  if (lambda.rows() != ctx.k || lambda.width() != ctx.width()) {
    throw DomainError("partition " + lambda.str() + " is not in the box of G(" + std::to_string(ctx.k) + "," +
                      std::to_string(ctx.n) + ")");
  }
  ChowClass out(ctx, lambda.size());
  out.terms_.emplace(lambda, 1);
  return out;
}

ChowClass ChowClass::schubert(const GrassCtx& ctx, std::vector<int> parts) {
  return schubert(ctx, ctx.partition(std::move(parts)));
}

ChowClass ChowClass::unit(const GrassCtx& ctx) { return schubert(ctx, Partition::empty(ctx.k, ctx.width())); }

Integer ChowClass::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Integer(0) : it->second;
}

void ChowClass::add_term(const Partition& lambda, const Integer& c) {
  if (lambda.size() != codim_ || lambda.rows() != ctx_.k || lambda.width() != ctx_.width()) {
    throw DomainError("term " + lambda.str() + " does not match codimension " + std::to_string(codim_));
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ChowClass& ChowClass::operator+=(const ChowClass& other) {
  if (!(other.ctx_ == ctx_) || other.codim_ != codim_) throw DomainError("adding classes of different grade or ring");
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, c);
  return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& other) {
  if (!(other.ctx_ == ctx_) || other.codim_ != codim_) throw DomainError("subtracting classes of different grade or ring");
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, -c);
  return *this;
}

ChowClass& ChowClass::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, coeff] : terms_) coeff *= c;
  return *this;
}

std::vector<Integer> ChowClass::coordinates() const {
  std::vector<Integer> out;
  for (const auto& lambda : enumerate_partitions(ctx_.k, ctx_.width(), codim_)) out.push_back(coefficient(lambda));
  return out;
}

std::string ChowClass::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [lambda, c] : terms_) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    Integer a = abs(c);
    if (a != 1) out += a.get_str() + "*";
    out += "s" + lambda.str();
  }
  return out;
}

ChowClass pieri(int special, const Partition& mu) {
  const int k = mu.rows();
  const int w = mu.width();
  if (special < 0 || special > w) {
    throw DomainError("sigma_" + std::to_string(special) + " is not a special class in this box (width " +
                      std::to_string(w) + ")");
  }
  GrassCtx ctx(k, k + w);
  const int target = mu.size() + special;
  if (target > ctx.dim()) {
    throw DomainError("product exceeds the top codimension " + std::to_string(ctx.dim()));
  }
  ChowClass out(ctx, target);
  std::vector<int> nu(static_cast<std::size_t>(k));
  // mu_i <= nu_i <= mu_{i-1}, with mu_0 = w.
  std::function<void(int, int)> place = [&](int row, int remaining) {
    if (row == k) {
      if (remaining == 0) out.add_term(Partition(nu, k, w), 1);
      return;
    }
    const int lo = mu[row];
    const int hi = row == 0 ? w : mu[row - 1];
    for (int v = lo; v <= hi && v - lo <= remaining; ++v) {
      nu[static_cast<std::size_t>(row)] = v;
      place(row + 1, remaining - (v - lo));
    }
  };
  place(0, special);
  return out;
}

ChowClass pieri(int special, const ChowClass& cls) {
  const GrassCtx& ctx = cls.ctx();
  if (special < 0 || special > ctx.width()) {
    throw DomainError("sigma_" + std::to_string(special) + " is not a special class in this box (width " +
                      std::to_string(ctx.width()) + ")");
  }
  const int target = cls.codim() + special;
  if (target > ctx.dim()) {
    throw DomainError("product exceeds the top codimension " + std::to_string(ctx.dim()));
  }
  ChowClass out(ctx, target);
  for (const auto& [mu, c] : cls.terms()) {
    ChowClass term = pieri(special, mu);
    term *= c;
    out += term;
  }
  return out;
}

GiambelliExpansion giambelli(const Partition& lambda) {
  const int len = lambda.length();
  const int w = lambda.width();
  GiambelliExpansion out;
  if (len == 0) {
    out.emplace(std::vector<int>{}, 1);
    return out;
  }
  // entry(i, j) = sigma_{lambda_i + j - i}; zero outside [0, w].
  auto entry = [&](int i, int j) { return lambda[i] + j - i; };
  std::vector<bool> used(static_cast<std::size_t>(len), false);
  std::vector<int> factors;
  std::function<void(int, int)> expand = [&](int row, int sign) {
    if (row == len) {
      std::vector<int> mono;
      for (int f : factors) {
        if (f > 0) mono.push_back(f);
      }
      std::sort(mono.rbegin(), mono.rend());
      auto& c = out[mono];
      c += sign;
      if (c == 0) out.erase(mono);
      return;
    }
    // Parity of the permutation: count used columns to the right of j.
    for (int j = 0; j < len; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      int m = entry(row, j);
      if (m < 0 || m > w) continue;
      int inversions = 0;
      for (int jj = j + 1; jj < len; ++jj) inversions += used[static_cast<std::size_t>(jj)] ? 1 : 0;
      used[static_cast<std::size_t>(j)] = true;
      factors.push_back(m);
      expand(row + 1, (inversions % 2 == 0) ? sign : -sign);
      factors.pop_back();
      used[static_cast<std::size_t>(j)] = false;
    }
  };
  expand(0, 1);
  return out;
}

ChowClass evaluate_special_polynomial(const GrassCtx& ctx, const GiambelliExpansion& poly) {
  std::optional<ChowClass> out;
  for (const auto& [mono, c] : poly) {
    ChowClass term = ChowClass::unit(ctx);
    for (int m : mono) term = pieri(m, term);
    term *= c;
    if (!out) out = ChowClass(ctx, term.codim());
    *out += term;
  }
  if (!out) throw DomainError("empty special polynomial has no grade");
  return *out;
}

std::pair<Partition, Partition> ProductCache::key(const Partition& a, const Partition& b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

std::optional<ChowClass> ProductCache::find(const Partition& a, const Partition& b) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find(key(a, b));
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void ProductCache::insert(const Partition& a, const Partition& b, const ChowClass& product) {
  std::unique_lock lock(mutex_);
  table_.try_emplace(key(a, b), product);
}

std::size_t ProductCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

ChowClass multiply_schubert(const GrassCtx& ctx, const Partition& a, const Partition& b, ProductCache* cache) {
  if (cache) {
    if (auto hit = cache->find(a, b)) return *hit;
  }
  if (a.size() + b.size() > ctx.dim()) {
    throw DomainError("product codimension " + std::to_string(a.size() + b.size()) + " exceeds dim " +
                      std::to_string(ctx.dim()));
  }
  ChowClass base = ChowClass::schubert(ctx, b);
  ChowClass out(ctx, a.size() + b.size());
  for (const auto& [mono, c] : giambelli(a)) {
    ChowClass term = base;
    for (int m : mono) term = pieri(m, term);
    term *= c;
    out += term;
  }
  if (cache) cache->insert(a, b, out);
  return out;
}

ChowClass multiply(const ChowClass& a, const ChowClass& b, ProductCache* cache) {
  if (!(a.ctx() == b.ctx())) throw DomainError("multiplying classes from different Grassmannians");
  const GrassCtx& ctx = a.ctx();
  if (a.codim() + b.codim() > ctx.dim()) {
    throw DomainError("product codimension " + std::to_string(a.codim() + b.codim()) + " exceeds dim " +
                      std::to_string(ctx.dim()));
  }
  ChowClass out(ctx, a.codim() + b.codim());
  for (const auto& [lambda, ca] : a.terms()) {
    for (const auto& [mu, cb] : b.terms()) {
      ChowClass term = multiply_schubert(ctx, lambda, mu, cache);
      term *= ca * cb;
      out += term;
    }
  }
  return out;
}

Integer pair(const ChowClass& a, const ChowClass& b) {
  if (!(a.ctx() == b.ctx())) throw DomainError("pairing classes from different Grassmannians");
  if (a.codim() + b.codim() != a.ctx().dim()) {
    throw DomainError("pairing needs complementary codimensions: " + std::to_string(a.codim()) + " + " +
                      std::to_string(b.codim()) + " != " + std::to_string(a.ctx().dim()));
  }
  return multiply(a, b).coefficient(a.ctx().point_class());
}

Integer degree_closed_form(const GrassCtx& ctx) {
  // (k(n-k))! * prod_{i=1}^k (i-1)! / (n-k+i-1)!
  Rational d(factorial(static_cast<unsigned long>(ctx.dim())));
  for (int i = 1; i <= ctx.k; ++i) {
    d *= Rational(factorial(static_cast<unsigned long>(i - 1)), factorial(static_cast<unsigned long>(ctx.width() + i - 1)));
    d.canonicalize();
  }
  if (d.get_den() != 1) throw ConsistencyError("Pluecker degree formula produced a non-integer");
  return d.get_num();
}

Integer degree_by_pieri(const GrassCtx& ctx) {
  ChowClass power = ChowClass::unit(ctx);
  for (int i = 0; i < ctx.dim(); ++i) power = pieri(1, power);
  return power.coefficient(ctx.point_class());
}

Integer degree(const GrassCtx& ctx) {
  Integer closed = degree_closed_form(ctx);
  Integer iterated = degree_by_pieri(ctx);
  if (closed != iterated) {
    throw ConsistencyError("degree mismatch: closed form " + closed.get_str() + " vs iterated Pieri " +
                           iterated.get_str());
  }
  return closed;
}

}  // namespace schubert

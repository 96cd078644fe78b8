#include "schubert/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "schubert/arith.hpp"

namespace schubert {

Partition::Partition(std::vector<int> parts, int k, int w) : k_(k), w_(w), parts_(std::move(parts)) {
  if (k < 1 || w < 1) throw DomainError("box dimensions must be positive");
  if (parts_.size() > static_cast<std::size_t>(k)) {
    // Allow explicit trailing zeros beyond k only if they are zeros.
    if (std::any_of(parts_.begin() + k, parts_.end(), [](int p) { return p != 0; })) {
      throw DomainError("partition has more than k = " + std::to_string(k) + " nonzero parts");
    }
    parts_.resize(static_cast<std::size_t>(k));
  }
  parts_.resize(static_cast<std::size_t>(k), 0);
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw DomainError("partition parts must be nonnegative");
    if (parts_[i] > w) throw DomainError("partition exceeds box width " + std::to_string(w));
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition must be weakly decreasing");
  }
}

Partition Partition::empty(int k, int w) { return Partition({}, k, w); }

Partition Partition::full_box(int k, int w) {
  return Partition(std::vector<int>(static_cast<std::size_t>(k), w), k, w);
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::length() const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p > 0; }));
}

std::vector<int> Partition::nonzero_parts() const {
  std::vector<int> out;
  for (int p : parts_) {
    if (p > 0) out.push_back(p);
  }
  return out;
}

bool Partition::contains(const Partition& lambda) const {
  if (lambda.k_ != k_ || lambda.w_ != w_) return false;
  for (int i = 0; i < k_; ++i) {
    if (parts_[static_cast<std::size_t>(i)] < lambda[i]) return false;
  }
  return true;
}

std::string Partition::str() const {
  std::string out = "(";
  bool first = true;
  for (int p : nonzero_parts()) {
    if (!first) out += ",";
    out += std::to_string(p);
    first = false;
  }
  return out + ")";
}

std::vector<Partition> enumerate_partitions(int k, int w, int m) {
  std::vector<Partition> out;
  if (k < 1 || w < 1 || m < 0 || m > k * w) return out;
  std::vector<int> parts(static_cast<std::size_t>(k), 0);
  // Depth-first with the largest admissible part first yields reverse-lex order.
  std::function<void(int, int, int)> fill = [&](int row, int remaining, int cap) {
    if (row == k) {
      if (remaining == 0) out.emplace_back(parts, k, w);
      return;
    }
    int rows_left = k - row;
    int hi = std::min(cap, remaining);
    int lo = (remaining + rows_left - 1) / rows_left;  // the rest must fit below this part
    for (int p = hi; p >= lo; --p) {
      parts[static_cast<std::size_t>(row)] = p;
      fill(row + 1, remaining - p, p);
    }
    parts[static_cast<std::size_t>(row)] = 0;
  };
  fill(0, m, w);
  return out;
}

std::vector<Partition> enumerate_box(int k, int w) {
  std::vector<Partition> out;
  for (int m = 0; m <= k * w; ++m) {
    auto grade = enumerate_partitions(k, w, m);
    out.insert(out.end(), grade.begin(), grade.end());
  }
  return out;
}

Partition dual(const Partition& lambda) {
  const int k = lambda.rows();
  const int w = lambda.width();
  std::vector<int> parts(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) parts[static_cast<std::size_t>(i)] = w - lambda[k - 1 - i];
  return Partition(std::move(parts), k, w);
}

}  // namespace schubert

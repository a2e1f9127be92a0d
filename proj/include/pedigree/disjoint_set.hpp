#ifndef PEDIGREE_DISJOINT_SET_HPP
#define PEDIGREE_DISJOINT_SET_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace pedigree {

/// Union by size with path halving over dense integer ids. No rollback.
class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n = 0) { grow(n); }

  void grow(std::size_t n) {
    const auto old = parent_.size();
    if (n <= old) return;
    parent_.resize(n);
    size_.resize(n, 1);
    for (auto i = old; i < n; ++i) parent_[i] = static_cast<std::int32_t>(i);
  }

  std::size_t capacity() const { return parent_.size(); }

  std::int32_t find(std::int32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Non-compressing lookup for const contexts.
  std::int32_t root(std::int32_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  /// Returns true if a and b were in different sets.
  bool unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> size_;
};

}  // namespace pedigree

#endif  // PEDIGREE_DISJOINT_SET_HPP

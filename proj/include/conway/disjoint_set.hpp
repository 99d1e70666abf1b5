#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace conway {

// Union-find with path halving and union by size.
class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t Find(std::size_t x) noexcept {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns false if x and y were already joined.
  bool Unite(std::size_t x, std::size_t y) noexcept {
    x = Find(x);
    y = Find(y);
    if (x == y) return false;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    return true;
  }

  bool Same(std::size_t x, std::size_t y) noexcept { return Find(x) == Find(y); }
  std::size_t SizeOf(std::size_t x) noexcept { return size_[Find(x)]; }
  std::size_t size() const noexcept { return parent_.size(); }

  // Classes as sorted lists, ordered by their smallest element.
  std::vector<std::vector<std::size_t>> Classes() {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> slot(parent_.size(), SIZE_MAX);
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      std::size_t root = Find(i);
      if (slot[root] == SIZE_MAX) {
        slot[root] = out.size();
        out.emplace_back();
      }
      out[slot[root]].push_back(i);
    }
    return out;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace conway

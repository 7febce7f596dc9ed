#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace octacat::detail {

// Union-find where every element also carries a Z/2 offset relative to its
// root. Plain connectivity is the special case that only ever unites with
// parity 0.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n) : parent_(n), parity_(n, 0), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t size() const { return parent_.size(); }

  // Returns (root, parity of x relative to root).
  std::pair<std::size_t, unsigned> find(std::size_t x) {
    std::size_t root = x;
    unsigned acc = 0;
    while (parent_[root] != root) {
      acc ^= parity_[root];
      root = parent_[root];
    }
    // Compress, rewriting parities so they point straight at the root.
    unsigned remaining = acc;
    while (parent_[x] != root && parent_[x] != x) {
      std::size_t next = parent_[x];
      unsigned old = parity_[x];
      parent_[x] = root;
      parity_[x] = remaining;
      remaining ^= old;
      x = next;
    }
    return {root, acc};
  }

  std::size_t root(std::size_t x) { return find(x).first; }

  // Imposes value(a) xor value(b) == parity. Returns false on contradiction.
  bool unite(std::size_t a, std::size_t b, unsigned parity = 0) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == parity;
    if (rank_[ra] < rank_[rb]) {
      std::swap(ra, rb);
      std::swap(pa, pb);
    }
    parent_[rb] = ra;
    parity_[rb] = pa ^ pb ^ parity;
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned> parity_;
  std::vector<unsigned> rank_;
};

}  // namespace octacat::detail

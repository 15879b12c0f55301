#pragma once
// Canonical edge identity and per-window dense edge indexing. An edge joins
// two vertices differing by exactly 1 in every coordinate; its canonical form
// is (lower endpoint, up-sign mask) where `lower` has the smaller d-th
// coordinate and the mask gives the signs of the first d-1 coordinate steps
// (MSB-first, bit set => +1). The d-th step is implicitly +1.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "bbperc/geometry.hpp"

namespace bbp {

struct EdgeRef {
  Point lower;
  uint32_t mask = 0;

  bool operator==(const EdgeRef&) const = default;
};

// Canonical form of the unordered pair {a, b}; throws if not an edge.
EdgeRef canonical_edge(const Point& a, const Point& b);

Point upper_endpoint(const EdgeRef& e);

// Dense index over the edges with both endpoints inside a window, ordered by
// (lower vertex lexicographic, mask ascending). The index is a bijection onto
// 0..count-1 and is what the exhaustive-configuration oracle enumerates over.
class EdgeIndexer {
 public:
  explicit EdgeIndexer(const Window& w);

  const Window& window() const { return win_; }
  int64_t count() const { return static_cast<int64_t>(edges_.size()); }
  // -1 if the edge is not fully inside the window.
  int64_t index_of(const EdgeRef& e) const;
  const EdgeRef& edge_at(int64_t index) const { return edges_.at(index); }
  const std::vector<EdgeRef>& edges() const { return edges_; }

 private:
  Window win_;
  std::vector<EdgeRef> edges_;
  std::unordered_map<uint64_t, int64_t> lookup_;  // (cell, mask) -> index
  uint64_t key_of(const EdgeRef& e) const;
};

}  // namespace bbp

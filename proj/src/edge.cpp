#include "bbperc/edge.hpp"

#include <stdexcept>

namespace bbp {

EdgeRef canonical_edge(const Point& a, const Point& b) {
  if (!is_vertex(a) || !is_vertex(b) || !are_neighbors(a, b))
    throw std::invalid_argument("not a lattice edge");
  const Point& lower = a.level() < b.level() ? a : b;
  const Point& upper = a.level() < b.level() ? b : a;
  uint32_t mask = 0;
  const int d = a.dim;
  for (int j = 0; j < d - 1; ++j) {
    if (upper.x[j] > lower.x[j]) mask |= 1u << (d - 2 - j);
  }
  return EdgeRef{lower, mask};
}

Point upper_endpoint(const EdgeRef& e) {
  const int d = e.lower.dim;
  Point up = e.lower;
  for (int j = 0; j < d - 1; ++j) {
    up.x[j] += (e.mask >> (d - 2 - j)) & 1u ? 1 : -1;
  }
  up.x[d - 1] += 1;
  return up;
}

EdgeIndexer::EdgeIndexer(const Window& w) : win_(w) {
  const int d = w.dim();
  for (const Point& lower : window_vertices(w)) {
    for (uint32_t m = 0; m < (1u << (d - 1)); ++m) {
      EdgeRef e{lower, m};
      if (win_.contains(upper_endpoint(e))) {
        lookup_.emplace(key_of(e), static_cast<int64_t>(edges_.size()));
        edges_.push_back(e);
      }
    }
  }
}

uint64_t EdgeIndexer::key_of(const EdgeRef& e) const {
  return static_cast<uint64_t>(win_.index_of(e.lower)) << 6 | e.mask;
}

int64_t EdgeIndexer::index_of(const EdgeRef& e) const {
  if (!win_.contains(e.lower) || !win_.contains(upper_endpoint(e))) return -1;
  auto it = lookup_.find(key_of(e));
  return it == lookup_.end() ? -1 : it->second;
}

}  // namespace bbp

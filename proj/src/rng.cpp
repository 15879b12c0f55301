#include "bbperc/rng.hpp"

#include <stdexcept>

namespace bbp {

bool is_open(double u, double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("p must be in [0,1]");
  return u < p;
}

int64_t open_edge_count(const EdgeConfig& cfg, const Window& w, double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("p must be in [0,1]");
  const int d = w.dim();
  int64_t count = 0;
  const int64_t cells = w.cell_count();
  for (int64_t i = 0; i < cells; ++i) {
    const Point lower = w.point_at(i);
    if (!is_vertex(lower)) continue;
    for (uint32_t m = 0; m < (1u << (d - 1)); ++m) {
      const EdgeRef e{lower, m};
      if (w.contains(upper_endpoint(e)) && cfg.open(e, p)) ++count;
    }
  }
  return count;
}

}  // namespace bbp

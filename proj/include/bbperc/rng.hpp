#pragma once
// Deterministic per-edge uniforms with monotone coupling across p. Each edge
// gets one uniform in [0,1) computed by the counter-based construction
// "sm64chain/v1": a SplitMix64 finalizer chained over (master seed, trial
// index, lower-endpoint coordinates, up-sign mask). The edge is open at level
// p iff its uniform is < p, so open-edge sets are nested in p by construction.
// Uniforms are keyed by the edge's geometric identity, not by any window
// index, so enlarging the window never changes an edge's uniform.

#include <cstdint>

#include "bbperc/edge.hpp"
#include "bbperc/geometry.hpp"

namespace bbp {

inline constexpr const char* kPrfName = "sm64chain/v1";

struct RngKey {
  uint64_t master_seed = 0;
  uint64_t trial = 0;

  bool operator==(const RngKey&) const = default;
};

// SplitMix64 finalizer (Stafford mix 13).
inline uint64_t sm64_mix(uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

// 53-bit uniform for a canonical edge; `key_offset` is subtracted from the
// lower endpoint before hashing (translation re-keying; zero by default).
inline double edge_uniform(const RngKey& key, const EdgeRef& e,
                           const Point& key_offset) {
  uint64_t s = sm64_mix(0x6bbcfe3f9c31a7e5ULL ^ key.master_seed);
  s = sm64_mix(s ^ key.trial);
  const int d = e.lower.dim;
  for (int j = 0; j < d; ++j) {
    const uint64_t c = static_cast<uint64_t>(
        static_cast<int64_t>(e.lower.x[j]) -
        static_cast<int64_t>(key_offset.x[j]));
    s = sm64_mix(s ^ c ^ (0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(j + 1)));
  }
  s = sm64_mix(s ^ e.mask ^ (static_cast<uint64_t>(d) << 32));
  return static_cast<double>(s >> 11) * 0x1.0p-53;
}

inline double edge_uniform(const RngKey& key, const EdgeRef& e) {
  return edge_uniform(key, e, Point::zero(e.lower.dim));
}

// u < p. Throws unless 0 <= p <= 1.
bool is_open(double u, double p);

// Immutable view of one random edge configuration: (key, offset) fix every
// uniform; openness at level p is thresholding. Pure and lock-free; safe to
// query from any number of threads.
struct EdgeConfig {
  RngKey key;
  Point key_offset;

  static EdgeConfig make(uint64_t master_seed, uint64_t trial, int dim) {
    return EdgeConfig{RngKey{master_seed, trial}, Point::zero(dim)};
  }

  double uniform(const EdgeRef& e) const {
    return edge_uniform(key, e, key_offset);
  }
  bool open(const EdgeRef& e, double p) const { return uniform(e) < p; }
};

// Number of open edges among the window's edges (both endpoints inside).
int64_t open_edge_count(const EdgeConfig& cfg, const Window& w, double p);

}  // namespace bbp

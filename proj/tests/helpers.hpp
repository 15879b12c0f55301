#pragma once
// Shared generators and independent oracles for the test suites. Everything
// here is deliberately written from the definitions, independent of the
// library's code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "bbperc/beta.hpp"
#include "bbperc/geometry.hpp"
#include "bbperc/path.hpp"

namespace bbt {

using bbp::BetaSeq;
using bbp::Path;
using bbp::Point;
using bbp::Region;
using bbp::Window;

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random lattice vertex with coordinates in [-span, span].
inline Point random_vertex(Rng& rng, int dim, int span) {
  Point p = Point::zero(dim);
  const int parity = rand_int(rng, 0, 1);
  for (int i = 0; i < dim; ++i) {
    int c = rand_int(rng, -span, span);
    if ((c & 1) != parity) c += c < span ? 1 : -1;
    p.x[i] = c;
  }
  return p;
}

// Random self-avoiding neighbor path from `start`, up to `len` steps, kept
// inside `region` (restarts a step on collision; gives up quietly).
inline Path random_sa_path(Rng& rng, const Region& region, Point start,
                           int len) {
  Path path;
  path.v.push_back(start);
  for (int step = 0; step < len; ++step) {
    Point cur = path.v.back();
    auto nbrs = bbp::neighbors(cur);
    std::shuffle(nbrs.begin(), nbrs.end(), rng);
    bool moved = false;
    for (const Point& w : nbrs) {
      if (!region.contains(w)) continue;
      if (std::find(path.v.begin(), path.v.end(), w) != path.v.end()) continue;
      path.v.push_back(w);
      moved = true;
      break;
    }
    if (!moved) break;
  }
  return path;
}

// Random eventually-cyclic backbend spec; inf entries optional.
inline BetaSeq random_beta(Rng& rng, bool allow_inf = true, int max_val = 6) {
  BetaSeq s;
  const int plen = rand_int(rng, 0, 3);
  const int tlen = rand_int(rng, 1, 3);
  auto value = [&]() -> uint32_t {
    if (allow_inf && rand_int(rng, 0, 9) == 0) return bbp::kBetaInf;
    return static_cast<uint32_t>(rand_int(rng, 0, max_val));
  };
  for (int i = 0; i < plen; ++i) s.prefix.push_back(value());
  for (int i = 0; i < tlen; ++i) s.tail.push_back(value());
  return s;
}

// Direct transcription of the backbend condition: records as running maxima,
// floor h - beta_h, start level >= 0, distinct adjacent region vertices.
inline bool path_valid_by_definition(const BetaSeq& beta, const Path& path,
                                     const Region& region) {
  if (path.v.empty()) return false;
  if (path.v[0].level() < 0) return false;
  int64_t record = path.v[0].level();
  for (size_t i = 0; i < path.v.size(); ++i) {
    const Point& v = path.v[i];
    for (size_t j = 0; j < i; ++j)
      if (path.v[j] == v) return false;
    if (i > 0 && !bbp::are_neighbors(path.v[i - 1], v)) return false;
    if (!region.contains(v)) return false;
    record = std::max<int64_t>(record, v.level());
    const uint32_t b = beta.at(record);
    if (b != bbp::kBetaInf &&
        int64_t{v.level()} < record - static_cast<int64_t>(b))
      return false;
  }
  return true;
}

// Plain union-find; used to cross-check unoriented clusters.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace bbt

#pragma once
// Path-level semantics: record levels and the backbend-path validator. A path
// is a self-avoiding sequence of adjacent vertices; it is a beta-backbend
// path when every vertex sits at or above the floor h - beta_h of the record
// level h attained so far, the start level is >= 0, and every vertex lies in
// the region.

#include <cstdint>
#include <string>
#include <vector>

#include "bbperc/beta.hpp"
#include "bbperc/geometry.hpp"

namespace bbp {

struct Path {
  std::vector<Point> v;
};

// h^i = max_{j <= i} x^j_d.
std::vector<int64_t> record_levels(const Path& path);

struct PathCheck {
  enum class Clause { None, Distinct, Adjacency, Region, StartLevel, Backbend };

  bool valid = true;
  int64_t index = -1;  // first failing vertex index
  Clause clause = Clause::None;
  std::string reason;
};

std::string to_string(PathCheck::Clause c);

// Validates in clause order (distinct, adjacency, region, start level,
// backbend) at each index and reports the first failure. Throws on an empty
// path.
PathCheck validate_path(const BetaSeq& spec, const Path& path,
                        const Region& region);

// Splices an oriented path (every step raises the level by 1) onto a suffix
// path starting at its endpoint, cutting at the first common vertex, and
// validates the splice. When the spec has a monotone floor and the suffix is
// itself valid from the junction, the splice always validates.
bool concatenation_preserves(const BetaSeq& spec, const Path& oriented_prefix,
                             const Path& suffix, const Region& region);

}  // namespace bbp

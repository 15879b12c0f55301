#include "bbperc/path.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace bbp {

namespace {

uint64_t point_hash(const Point& p) {
  uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (int i = 0; i < p.dim; ++i) {
    h ^= static_cast<uint64_t>(static_cast<int64_t>(p.x[i]));
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
  }
  return h;
}

struct PointHash {
  size_t operator()(const Point& p) const { return point_hash(p); }
};

}  // namespace

std::vector<int64_t> record_levels(const Path& path) {
  if (path.v.empty()) throw std::invalid_argument("empty path");
  std::vector<int64_t> h(path.v.size());
  int64_t rec = path.v[0].level();
  for (size_t i = 0; i < path.v.size(); ++i) {
    rec = std::max<int64_t>(rec, path.v[i].level());
    h[i] = rec;
  }
  return h;
}

std::string to_string(PathCheck::Clause c) {
  switch (c) {
    case PathCheck::Clause::None:
      return "none";
    case PathCheck::Clause::Distinct:
      return "distinct";
    case PathCheck::Clause::Adjacency:
      return "adjacency";
    case PathCheck::Clause::Region:
      return "region";
    case PathCheck::Clause::StartLevel:
      return "start_level";
    case PathCheck::Clause::Backbend:
      return "backbend";
  }
  return "?";
}

PathCheck validate_path(const BetaSeq& spec, const Path& path,
                        const Region& region) {
  if (path.v.empty()) throw std::invalid_argument("empty path");

  auto fail = [](int64_t i, PathCheck::Clause c, std::string reason) {
    return PathCheck{false, i, c, std::move(reason)};
  };

  std::unordered_set<Point, PointHash> seen;
  int64_t record = path.v[0].level();
  for (size_t i = 0; i < path.v.size(); ++i) {
    const Point& v = path.v[i];
    if (!seen.insert(v).second)
      return fail(i, PathCheck::Clause::Distinct,
                  "vertex repeats earlier position");
    if (i > 0 && !are_neighbors(path.v[i - 1], v))
      return fail(i, PathCheck::Clause::Adjacency,
                  "consecutive vertices are not lattice neighbors");
    if (!region.contains(v))
      return fail(i, PathCheck::Clause::Region, "vertex outside region");
    if (i == 0 && v.level() < 0)
      return fail(0, PathCheck::Clause::StartLevel, "start level below 0");
    record = std::max<int64_t>(record, v.level());
    const int64_t floor = spec.floor_at(record);
    if (floor != kFloorNegInf && v.level() < floor)
      return fail(i, PathCheck::Clause::Backbend,
                  "level " + std::to_string(v.level()) + " below floor " +
                      std::to_string(floor) + " at record " +
                      std::to_string(record));
  }
  return PathCheck{};
}

bool concatenation_preserves(const BetaSeq& spec, const Path& oriented_prefix,
                             const Path& suffix, const Region& region) {
  if (oriented_prefix.v.empty() || suffix.v.empty())
    throw std::invalid_argument("empty path");
  if (!(oriented_prefix.v.back() == suffix.v.front()))
    throw std::invalid_argument("junction mismatch");
  for (size_t i = 1; i < oriented_prefix.v.size(); ++i) {
    if (!are_neighbors(oriented_prefix.v[i - 1], oriented_prefix.v[i]) ||
        oriented_prefix.v[i].level() !=
            oriented_prefix.v[i - 1].level() + 1)
      throw std::invalid_argument("prefix is not an oriented path");
  }

  // Cut at the first prefix vertex that also lies on the suffix, then follow
  // the suffix from there; the result is self-avoiding by construction.
  std::unordered_set<Point, PointHash> on_suffix;
  for (const Point& p : suffix.v) on_suffix.insert(p);

  Path spliced;
  size_t suffix_from = suffix.v.size();
  for (const Point& p : oriented_prefix.v) {
    if (on_suffix.count(p)) {
      for (size_t j = 0; j < suffix.v.size(); ++j) {
        if (suffix.v[j] == p) {
          suffix_from = j;
          break;
        }
      }
      break;
    }
    spliced.v.push_back(p);
  }
  for (size_t j = suffix_from; j < suffix.v.size(); ++j)
    spliced.v.push_back(suffix.v[j]);

  return validate_path(spec, spliced, region).valid;
}

}  // namespace bbp

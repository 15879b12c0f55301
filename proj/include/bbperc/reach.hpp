#pragma once
// Reachability by open beta-backbend paths. The walk engine explores
// (vertex, record-level) states with a bucket queue ordered by record level
// (records never decrease along a walk). For monotone-floor specs the walk
// cluster equals the true self-avoiding-path cluster: erasing a loop can only
// lower record levels, and a nondecreasing floor makes lower records weaker
// constraints. For general specs the walk cluster may be a strict superset;
// the exact flag says which case holds, and the self-avoiding enumeration
// oracle computes the true cluster on small windows.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "bbperc/beta.hpp"
#include "bbperc/edge.hpp"
#include "bbperc/geometry.hpp"
#include "bbperc/rng.hpp"

namespace bbp {

struct ReachSpec {
  Region region;
  Window window;
  BetaSeq beta;
  std::vector<Point> sources;
};

struct ClusterResult {
  std::vector<Point> reached;  // ascending lexicographic
  std::vector<std::pair<Point, int32_t>> states;  // (vertex, record) visited
  int64_t max_level = INT64_MIN;
  std::vector<Point> sources;
  bool exact = false;
  bool stopped_early = false;
};

struct StopRule {
  enum class Kind { None, Level, Size, Axis, Targets };
  Kind kind = Kind::None;
  int axis = -1;       // Axis: 0-based coordinate
  int64_t value = 0;   // Level / Size / Axis threshold
  std::vector<Point> targets;  // Targets: stop when all are reached

  static StopRule none() { return {}; }
  static StopRule level(int64_t v) {
    return {Kind::Level, -1, v, {}};
  }
  static StopRule size(int64_t v) { return {Kind::Size, -1, v, {}}; }
  static StopRule axis(int ax, int64_t v) { return {Kind::Axis, ax, v, {}}; }
  static StopRule all_of(std::vector<Point> t) {
    return {Kind::Targets, -1, 0, std::move(t)};
  }
};

struct ReachOutcome {
  bool hit = false;
  int64_t max_level = INT64_MIN;
  int64_t size = 0;
  int64_t visited_states = 0;
};

// Openness views for the walk engine: any type with
// `bool open(const EdgeRef&) const`.
struct ThresholdView {
  const EdgeConfig* cfg;
  double p;
  bool open(const EdgeRef& e) const { return cfg->open(e, p); }
};

// Explicit assignment over a window's indexed edges; anything outside the
// index (e.g. crossing the window boundary) is closed.
struct MaskView {
  const EdgeIndexer* idx;
  uint64_t bits;
  bool open(const EdgeRef& e) const {
    const int64_t i = idx->index_of(e);
    return i >= 0 && (bits >> i) & 1u;
  }
};

class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reusable walk engine bound to one (region, window, beta, sources) problem;
// scratch arrays persist across runs. A single instance is not thread-safe;
// use one per thread.
class Reacher {
 public:
  explicit Reacher(ReachSpec spec);
  ~Reacher();

  const ReachSpec& spec() const { return spec_; }
  bool exact() const { return monotone_; }

  ClusterResult run(const EdgeConfig& cfg, double p);
  ClusterResult run(const MaskView& cfg);
  ReachOutcome run_event(const EdgeConfig& cfg, double p, const StopRule& stop);
  ReachOutcome run_event(const MaskView& cfg, const StopRule& stop);

  // Swap the source set (re-validated) without rebuilding scratch arrays.
  void set_sources(std::vector<Point> sources);

 private:
  template <class Cfg>
  ReachOutcome walk(const Cfg& cfg, const StopRule& stop, ClusterResult* full);
  void bump_epoch();

  ReachSpec spec_;
  bool monotone_ = false;
  int dim_ = 0;
  int64_t cells_ = 0;
  int32_t top_ = 0;  // highest record level = window top
  std::vector<int64_t> floor_tab_;
  std::vector<Point> steps_;         // 2^d sign steps, mask order
  std::vector<uint32_t> edge_mask_;  // per step: canonical edge mask
  std::vector<uint8_t> step_up_;     // per step: lower endpoint is v (not w)
  std::vector<int64_t> deltas_;      // per step: window cell-index offset

  uint32_t epoch_ = 0;
  std::vector<uint32_t> reached_stamp_;
  std::vector<int32_t> best_record_;  // monotone-mode push dedup
  std::vector<uint32_t> best_stamp_;
  std::vector<uint32_t> target_stamp_;
  std::vector<std::vector<int64_t>> buckets_;
  std::vector<int32_t> touched_;  // buckets dirtied by the last run
  std::vector<int64_t> reached_cells_;
  std::vector<std::pair<int64_t, int32_t>> state_list_;
  // general (non-monotone) mode: distinct (cell, record) states seen
  struct SeenSet;
  std::unique_ptr<SeenSet> seen_;
};

// One-shot walk cluster.
ClusterResult reach_walk(const ReachSpec& spec, const EdgeConfig& cfg,
                         double p);

struct SawOptions {
  int64_t guard_max_vertices = 30;  // region-and-window vertex count
  bool force = false;               // lift the guard (hard cap 64)
  bool stop_when_full = true;       // abort once every vertex is reached
};

// Exact cluster by exhaustive enumeration of open self-avoiding paths.
// Throws GuardExceeded when the instance is above the guard and not forced.
ClusterResult reach_saw_oracle(const ReachSpec& spec, const EdgeConfig& cfg,
                               double p, const SawOptions& opt = {});
ClusterResult reach_saw_oracle(const ReachSpec& spec, const MaskView& cfg,
                               const SawOptions& opt = {});

bool survives(const ClusterResult& r, int64_t level);

int64_t count_in_set(const ClusterResult& r, const std::vector<Point>& target);

// Seed-block propagation event: every vertex of D*+z reached from D*+x.
struct BlockSpec {
  int dim = 0;
  int r = 0;
  Point x, z;
  Region region;
  Window window;
  BetaSeq beta;
};

bool block_event(const BlockSpec& b, const EdgeConfig& cfg, double p);

// Exact event probability by summing over all 2^E edge assignments of the
// window. Guarded; intended for tiny instances only.
double exact_event_probability(const ReachSpec& spec, double p,
                               const StopRule& stop,
                               int64_t guard_max_edges = 20);
double exact_block_probability(const BlockSpec& b, double p,
                               int64_t guard_max_edges = 20);

}  // namespace bbp

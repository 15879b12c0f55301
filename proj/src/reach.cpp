#include "bbperc/reach.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_set>

namespace bbp {

namespace {

constexpr int64_t kMaxCells = int64_t{1} << 27;

struct SeenHash {
  size_t operator()(uint64_t k) const { return sm64_mix(k); }
};

}  // namespace

struct Reacher::SeenSet {
  std::unordered_set<uint64_t, SeenHash> set;
};

Reacher::Reacher(ReachSpec spec) : spec_(std::move(spec)) {
  dim_ = spec_.window.dim();
  if (spec_.region.dim != dim_)
    throw std::invalid_argument("region/window dimension mismatch");
  cells_ = spec_.window.cell_count();
  if (cells_ > kMaxCells)
    throw std::invalid_argument("window too large: " + std::to_string(cells_) +
                                " cells");
  monotone_ = spec_.beta.monotone_floor();
  top_ = std::max<int32_t>(0, spec_.window.hi.level());
  if (top_ > 32000)
    throw std::invalid_argument("window top level too large");

  floor_tab_.resize(static_cast<size_t>(top_) + 1);
  for (int32_t h = 0; h <= top_; ++h) floor_tab_[h] = spec_.beta.floor_at(h);

  const uint32_t nsteps = 1u << dim_;
  steps_.resize(nsteps);
  edge_mask_.resize(nsteps);
  step_up_.resize(nsteps);
  deltas_.resize(nsteps);
  for (uint32_t m = 0; m < nsteps; ++m) {
    steps_[m] = sign_step(m, dim_);
    const bool up = m & 1u;  // level sign is the least significant bit
    step_up_[m] = up;
    const uint32_t body = m >> 1;
    edge_mask_[m] = up ? body : ~body & ((1u << (dim_ - 1)) - 1u);
    int64_t delta = 0;
    for (int j = 0; j < dim_; ++j) {
      int64_t stride = 1;
      for (int i = j + 1; i < dim_; ++i)
        stride *= int64_t{spec_.window.hi.x[i]} - spec_.window.lo.x[i] + 1;
      delta += int64_t{steps_[m].x[j]} * stride;
    }
    deltas_[m] = delta;
  }

  reached_stamp_.assign(static_cast<size_t>(cells_), 0);
  best_stamp_.assign(static_cast<size_t>(cells_), 0);
  best_record_.assign(static_cast<size_t>(cells_), 0);
  target_stamp_.assign(static_cast<size_t>(cells_), 0);
  buckets_.resize(static_cast<size_t>(top_) + 1);
  seen_ = std::make_unique<SeenSet>();
  set_sources(spec_.sources);
}

Reacher::~Reacher() = default;

void Reacher::set_sources(std::vector<Point> sources) {
  for (const Point& s : sources) {
    if (!spec_.window.contains(s) || !spec_.region.contains(s))
      throw std::invalid_argument("source " + point_to_string(s) +
                                  " outside region or window");
    if (s.level() < 0)
      throw std::invalid_argument("source " + point_to_string(s) +
                                  " below level 0");
  }
  spec_.sources = std::move(sources);
}

void Reacher::bump_epoch() {
  if (++epoch_ == 0) {
    std::fill(reached_stamp_.begin(), reached_stamp_.end(), 0u);
    std::fill(best_stamp_.begin(), best_stamp_.end(), 0u);
    std::fill(target_stamp_.begin(), target_stamp_.end(), 0u);
    epoch_ = 1;
  }
}

template <class Cfg>
ReachOutcome Reacher::walk(const Cfg& cfg, const StopRule& stop,
                           ClusterResult* full) {
  bump_epoch();
  for (int32_t h : touched_) buckets_[h].clear();
  touched_.clear();
  reached_cells_.clear();
  state_list_.clear();
  if (!monotone_) {
    seen_->set.clear();
  }

  ReachOutcome out;
  int64_t targets_remaining = 0;
  bool targets_unreachable = false;
  if (stop.kind == StopRule::Kind::Targets) {
    for (const Point& t : stop.targets) {
      if (!spec_.window.contains(t) || !spec_.region.contains(t)) {
        targets_unreachable = true;
        continue;
      }
      const int64_t cell = spec_.window.index_of(t);
      if (target_stamp_[cell] != epoch_) {
        target_stamp_[cell] = epoch_;
        ++targets_remaining;
      }
    }
    if (targets_remaining == 0 && !targets_unreachable) {
      // Empty (or fully degenerate) target set: trivially contained.
      out.hit = true;
      if (!full) return out;
    }
  }

  auto on_reach = [&](int64_t cell, const Point& w) -> bool {
    reached_stamp_[cell] = epoch_;
    reached_cells_.push_back(cell);
    ++out.size;
    if (w.level() > out.max_level) out.max_level = w.level();
    switch (stop.kind) {
      case StopRule::Kind::Level:
        return w.level() >= stop.value;
      case StopRule::Kind::Axis:
        return w.x[stop.axis] >= stop.value;
      case StopRule::Kind::Size:
        return out.size >= stop.value;
      case StopRule::Kind::Targets:
        if (target_stamp_[cell] == epoch_) {
          target_stamp_[cell] = 0;
          if (--targets_remaining == 0 && !targets_unreachable) return true;
        }
        return false;
      default:
        return false;
    }
  };

  int32_t hmin = top_;
  for (const Point& s : spec_.sources) {
    const int64_t cell = spec_.window.index_of(s);
    if (reached_stamp_[cell] == epoch_) continue;
    const int32_t lvl = s.level();
    hmin = std::min(hmin, lvl);
    best_stamp_[cell] = epoch_;
    best_record_[cell] = lvl;
    if (!monotone_)
      seen_->set.insert(static_cast<uint64_t>(cell) << 16 |
                        static_cast<uint32_t>(lvl));
    if (buckets_[lvl].empty()) touched_.push_back(lvl);
    buckets_[lvl].push_back(cell);
    if (full && !monotone_) state_list_.push_back({cell, lvl});
    if (on_reach(cell, s)) {
      out.hit = true;
      if (!full) return out;
    }
  }

  const Point wlo = spec_.window.lo, whi = spec_.window.hi;
  const uint32_t nsteps = 1u << dim_;

  for (int32_t h = hmin; h <= top_ && !(out.hit && !full); ++h) {
    auto& bq = buckets_[h];
    for (size_t qi = 0; qi < bq.size(); ++qi) {
      const int64_t cell = bq[qi];
      if (monotone_) {
        if (best_stamp_[cell] != epoch_ || best_record_[cell] != h) continue;
        if (full) state_list_.push_back({cell, h});
      }
      ++out.visited_states;
      const Point v = spec_.window.point_at(cell);

      for (uint32_t m = 0; m < nsteps; ++m) {
        Point w = v;
        bool inside = true;
        for (int j = 0; j < dim_; ++j) {
          w.x[j] += steps_[m].x[j];
          if (w.x[j] < wlo.x[j] || w.x[j] > whi.x[j]) {
            inside = false;
            break;
          }
        }
        if (!inside || !spec_.region.bounds_contain(w)) continue;
        const int32_t wl = w.x[dim_ - 1];
        const int32_t h2 = wl > h ? wl : h;
        if (int64_t{wl} < floor_tab_[h2]) continue;
        const int64_t wcell = cell + deltas_[m];

        uint64_t seen_key = 0;
        if (monotone_) {
          if (best_stamp_[wcell] == epoch_ && best_record_[wcell] <= h2)
            continue;
        } else {
          seen_key = static_cast<uint64_t>(wcell) << 16 |
                     static_cast<uint32_t>(h2);
          if (seen_->set.count(seen_key)) continue;
        }

        const EdgeRef e{step_up_[m] ? v : w, edge_mask_[m]};
        if (!cfg.open(e)) continue;

        if (monotone_) {
          best_stamp_[wcell] = epoch_;
          best_record_[wcell] = h2;
        } else {
          seen_->set.insert(seen_key);
          if (full) state_list_.push_back({wcell, h2});
        }
        if (buckets_[h2].empty()) touched_.push_back(h2);
        buckets_[h2].push_back(wcell);
        if (reached_stamp_[wcell] != epoch_ && on_reach(wcell, w)) {
          out.hit = true;
          if (!full) return out;
        }
      }
    }
  }

  if (full) {
    std::sort(reached_cells_.begin(), reached_cells_.end());
    full->reached.reserve(reached_cells_.size());
    for (int64_t c : reached_cells_)
      full->reached.push_back(spec_.window.point_at(c));
    std::sort(state_list_.begin(), state_list_.end());
    full->states.reserve(state_list_.size());
    for (auto [c, rec] : state_list_)
      full->states.push_back({spec_.window.point_at(c), rec});
    full->max_level = out.max_level;
    full->sources = spec_.sources;
    full->exact = monotone_;
    full->stopped_early = out.hit;
  }
  return out;
}

ClusterResult Reacher::run(const EdgeConfig& cfg, double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("p must be in [0,1]");
  ClusterResult r;
  walk(ThresholdView{&cfg, p}, StopRule::none(), &r);
  return r;
}

ClusterResult Reacher::run(const MaskView& cfg) {
  ClusterResult r;
  walk(cfg, StopRule::none(), &r);
  return r;
}

ReachOutcome Reacher::run_event(const EdgeConfig& cfg, double p,
                                const StopRule& stop) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("p must be in [0,1]");
  return walk(ThresholdView{&cfg, p}, stop, nullptr);
}

ReachOutcome Reacher::run_event(const MaskView& cfg, const StopRule& stop) {
  return walk(cfg, stop, nullptr);
}

ClusterResult reach_walk(const ReachSpec& spec, const EdgeConfig& cfg,
                         double p) {
  Reacher r(spec);
  return r.run(cfg, p);
}

namespace {

// Exhaustive DFS over open self-avoiding paths on a small vertex set.
struct SawRunner {
  const ReachSpec& spec;
  std::vector<Point> verts;                // region-and-window vertices
  std::vector<std::vector<int>> open_adj;  // open-edge adjacency
  std::vector<int64_t> floors;             // per record level
  int32_t top = 0;
  std::vector<uint8_t> reached;
  std::unordered_set<uint64_t> states;
  int64_t reached_count = 0;
  bool full_stop = false;
  bool stop_when_full = true;

  template <class Cfg>
  SawRunner(const ReachSpec& s, const Cfg& cfg, const SawOptions& opt)
      : spec(s) {
    for (const Point& v : window_vertices(s.window)) {
      if (s.region.bounds_contain(v)) verts.push_back(v);
    }
    const int64_t n = static_cast<int64_t>(verts.size());
    if (n > opt.guard_max_vertices && !opt.force)
      throw GuardExceeded("instance has " + std::to_string(n) +
                          " vertices, above the oracle guard of " +
                          std::to_string(opt.guard_max_vertices));
    if (n > 64)
      throw GuardExceeded("oracle hard cap is 64 vertices, instance has " +
                          std::to_string(n));
    stop_when_full = opt.stop_when_full;

    top = std::max<int32_t>(0, s.window.hi.level());
    floors.resize(static_cast<size_t>(top) + 1);
    for (int32_t h = 0; h <= top; ++h) floors[h] = s.beta.floor_at(h);

    open_adj.resize(verts.size());
    for (size_t i = 0; i < verts.size(); ++i) {
      for (size_t j = i + 1; j < verts.size(); ++j) {
        if (!are_neighbors(verts[i], verts[j])) continue;
        if (!cfg.open(canonical_edge(verts[i], verts[j]))) continue;
        open_adj[i].push_back(static_cast<int>(j));
        open_adj[j].push_back(static_cast<int>(i));
      }
    }
    reached.assign(verts.size(), 0);
  }

  void touch(int v, int32_t rec) {
    if (!reached[v]) {
      reached[v] = 1;
      ++reached_count;
      if (stop_when_full &&
          reached_count == static_cast<int64_t>(verts.size()))
        full_stop = true;
    }
    states.insert(static_cast<uint64_t>(rec) << 8 |
                  static_cast<uint32_t>(v));
  }

  void dfs(int v, int32_t rec, uint64_t visited) {
    touch(v, rec);
    if (full_stop) return;
    for (int w : open_adj[v]) {
      if (visited >> w & 1u) continue;
      const int32_t wl = verts[w].level();
      const int32_t h2 = wl > rec ? wl : rec;
      if (int64_t{wl} < floors[h2]) continue;
      dfs(w, h2, visited | uint64_t{1} << w);
      if (full_stop) return;
    }
  }

  ClusterResult finish() {
    ClusterResult r;
    for (size_t i = 0; i < verts.size(); ++i) {
      if (reached[i]) {
        r.reached.push_back(verts[i]);
        r.max_level = std::max<int64_t>(r.max_level, verts[i].level());
      }
    }
    for (uint64_t k : states)
      r.states.push_back(
          {verts[k & 0xff], static_cast<int32_t>(k >> 8)});
    std::sort(r.states.begin(), r.states.end(),
              [](const auto& a, const auto& b) {
                return a.second != b.second ? a.second < b.second
                                            : lex_less(a.first, b.first);
              });
    r.sources = spec.sources;
    r.exact = true;
    r.stopped_early = full_stop;
    return r;
  }
};

template <class Cfg>
ClusterResult saw_oracle_impl(const ReachSpec& spec, const Cfg& cfg,
                              const SawOptions& opt) {
  for (const Point& s : spec.sources) {
    if (!spec.window.contains(s) || !spec.region.contains(s))
      throw std::invalid_argument("source " + point_to_string(s) +
                                  " outside region or window");
    if (s.level() < 0)
      throw std::invalid_argument("source " + point_to_string(s) +
                                  " below level 0");
  }
  SawRunner runner(spec, cfg, opt);
  for (const Point& s : spec.sources) {
    int id = -1;
    for (size_t i = 0; i < runner.verts.size(); ++i) {
      if (runner.verts[i] == s) {
        id = static_cast<int>(i);
        break;
      }
    }
    runner.dfs(id, s.level(), uint64_t{1} << id);
    if (runner.full_stop) break;
  }
  return runner.finish();
}

}  // namespace

ClusterResult reach_saw_oracle(const ReachSpec& spec, const EdgeConfig& cfg,
                               double p, const SawOptions& opt) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("p must be in [0,1]");
  return saw_oracle_impl(spec, ThresholdView{&cfg, p}, opt);
}

ClusterResult reach_saw_oracle(const ReachSpec& spec, const MaskView& cfg,
                               const SawOptions& opt) {
  return saw_oracle_impl(spec, cfg, opt);
}

bool survives(const ClusterResult& r, int64_t level) {
  return r.max_level >= level;
}

int64_t count_in_set(const ClusterResult& r, const std::vector<Point>& target) {
  int64_t n = 0;
  for (const Point& t : target) {
    if (std::binary_search(r.reached.begin(), r.reached.end(), t,
                           [](const Point& a, const Point& b) {
                             return lex_less(a, b);
                           }))
      ++n;
  }
  return n;
}

namespace {

void check_block(const BlockSpec& b) {
  if (b.z.level() < b.x.level())
    throw std::invalid_argument("block event requires z_d >= x_d");
  for (const Point& s : translate(seed_block(b.dim, b.r), b.x)) {
    if (!b.window.contains(s) || !b.region.contains(s))
      throw std::invalid_argument("seed block vertex " + point_to_string(s) +
                                  " outside region or window");
  }
}

}  // namespace

bool block_event(const BlockSpec& b, const EdgeConfig& cfg, double p) {
  check_block(b);
  ReachSpec spec{b.region, b.window, b.beta,
                 translate(seed_block(b.dim, b.r), b.x)};
  Reacher reacher(std::move(spec));
  const auto targets = translate(seed_block(b.dim, b.r), b.z);
  return reacher.run_event(cfg, p, StopRule::all_of(targets)).hit;
}

double exact_event_probability(const ReachSpec& spec, double p,
                               const StopRule& stop, int64_t guard_max_edges) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("p must be in [0,1]");
  EdgeIndexer idx(spec.window);
  const int64_t ne = idx.count();
  if (ne > guard_max_edges)
    throw GuardExceeded("window has " + std::to_string(ne) +
                        " edges, above the exhaustive guard of " +
                        std::to_string(guard_max_edges));
  std::vector<double> wopen(ne + 1), wclosed(ne + 1);
  wopen[0] = wclosed[0] = 1.0;
  for (int64_t k = 1; k <= ne; ++k) {
    wopen[k] = wopen[k - 1] * p;
    wclosed[k] = wclosed[k - 1] * (1.0 - p);
  }
  Reacher reacher(spec);
  double prob = 0.0;
  for (uint64_t bits = 0; bits < (uint64_t{1} << ne); ++bits) {
    if (reacher.run_event(MaskView{&idx, bits}, stop).hit) {
      const int k = static_cast<int>(std::popcount(bits));
      prob += wopen[k] * wclosed[ne - k];
    }
  }
  return prob;
}

double exact_block_probability(const BlockSpec& b, double p,
                               int64_t guard_max_edges) {
  check_block(b);
  ReachSpec spec{b.region, b.window, b.beta,
                 translate(seed_block(b.dim, b.r), b.x)};
  const auto targets = translate(seed_block(b.dim, b.r), b.z);
  return exact_event_probability(spec, p, StopRule::all_of(targets),
                                 guard_max_edges);
}

}  // namespace bbp

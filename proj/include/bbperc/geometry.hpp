#pragma once
// BCC lattice geometry: vertices are integer points whose coordinates all
// share one parity; every vertex has 2^d diagonal neighbors (all coordinates
// change by exactly 1). Regions are the sublattices the simulations run on:
// half-space, half-slabs, slabs, finite boxes. A Window is the finite box a
// computation is truncated to.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace bbp {

inline constexpr int kMaxDim = 6;
inline constexpr int kMinDim = 2;

// Unbounded box-interval sentinel (Region boxes may be half-infinite).
inline constexpr int64_t kUnbounded = INT64_MAX;

// Integer point in Z^d, 2 <= d <= kMaxDim. Unused trailing coordinates stay
// zero so default comparison works. The same storage is used for lattice
// vertices, sign steps, and window corners; only vertices carry the parity
// invariant (checked by is_vertex, not by the type).
struct Point {
  std::array<int32_t, kMaxDim> x{};
  int32_t dim = 0;

  static Point zero(int d) {
    Point p;
    p.dim = d;
    return p;
  }
  static Point of(std::initializer_list<int32_t> coords) {
    Point p;
    p.dim = static_cast<int32_t>(coords.size());
    int i = 0;
    for (int32_t c : coords) p.x[i++] = c;
    return p;
  }

  int32_t operator[](int i) const { return x[i]; }
  int32_t& operator[](int i) { return x[i]; }
  // d-th coordinate ("level"): the oriented direction of the process.
  int32_t level() const { return x[dim - 1]; }

  bool operator==(const Point&) const = default;
};

// Lexicographic order on coordinates; points must have equal dim.
bool lex_less(const Point& a, const Point& b);

Point add(const Point& a, const Point& b);
Point sub(const Point& a, const Point& b);
Point negate(const Point& a);

// All coordinates congruent mod 2 (all even or all odd).
bool is_vertex(const Point& p);

// Sign step from a d-bit mask read most-significant-bit-first: bit (d-1-j)
// gives the sign of coordinate j (+1 if set, -1 if clear). Ascending mask
// order is lexicographic order over sign vectors with -1 < +1.
Point sign_step(uint32_t mask, int dim);

// The 2^d neighbors v + s in ascending sign-step order.
std::vector<Point> neighbors(const Point& v);

bool are_neighbors(const Point& a, const Point& b);

int64_t linf_distance(const Point& a, const Point& b);

// Finite inclusive box [lo, hi]; all computation is restricted to it.
struct Window {
  Point lo, hi;

  int dim() const { return lo.dim; }
  bool contains(const Point& p) const;
  int64_t cell_count() const;  // full integer-box volume (both parities)
  int64_t index_of(const Point& p) const;
  Point point_at(int64_t idx) const;
  Window translated(const Point& y) const;
  std::string to_string() const;

  bool operator==(const Window&) const = default;
};

Window make_window(const Point& lo, const Point& hi);

// All lattice vertices inside the window, ascending lexicographic order.
// Materializes the set; use only on small windows.
std::vector<Point> window_vertices(const Window& w);

// Logical (possibly infinite) vertex set. Membership = parity test plus
// kind-specific coordinate bounds. Never materialized; computations take an
// explicit Window and work on region-intersect-window.
struct Region {
  enum class Kind { FullSpace, HalfSpace, HalfSlab, Slab, Box };

  Kind kind = Kind::FullSpace;
  int32_t dim = 0;
  int32_t l = 0;  // HalfSlab lateral bound, l >= 1
  int32_t e = 0;  // HalfSlab free dimensions, 2 <= e <= d
  int32_t t = 0;  // Slab height, t >= 1
  std::array<int64_t, kMaxDim> blo{}, bhi{};  // Box bounds, +-kUnbounded allowed

  static Region full_space(int d);
  static Region half_space(int d);
  // Q_l^e: first d-e coordinates in [-l,l], level >= 0. Q_l^d == H.
  static Region half_slab(int d, int l, int e);
  // S_t: 0 <= level <= t.
  static Region slab(int d, int t);
  static Region box(int d, const std::array<int64_t, kMaxDim>& lo,
                    const std::array<int64_t, kMaxDim>& hi);
  static Region box(const Window& w);

  bool contains(const Point& v) const;
  // Bounds test only (no parity); for walkers that already know v is a vertex.
  bool bounds_contain(const Point& v) const;
  // Box regions translate exactly; other kinds throw.
  Region translated(const Point& y) const;
  std::string to_string() const;
};

// Region grammar: `H` | `V` | `slab:<t>` | `halfslab:<l>,<e>` |
// `box:<lo..hi>x<lo..hi>x...` where a bound is an integer, `inf` or `-inf`.
Region parse_region(const std::string& text, int dim);

// Window grammar: like a finite box, `<lo..hi>x<lo..hi>x...`.
Window parse_window(const std::string& text, int dim);

// Boundary vertex sets of the box B([-l,l]^{d-1} x [0,t]):
//   Top            T(l,t):  level == t
//   Frame          F(l,t):  |x_i| == l for some i < d-1
//   TopOrthant     T^u(l,t): subset of T with 0 <= x_i*u_i <= l, i < d-1
//   FrameOrthant   F^v_{(d-1)+}(l,t): x_{d-2} == l and 0 <= x_i*v_i <= l, i < d-2
// Orthant masks are read MSB-first like sign steps (bit set => +1).
enum class BoundaryKind { Top, Frame, TopOrthant, FrameOrthant };

std::vector<Point> boundary_set(BoundaryKind kind, int dim, int l, int t,
                                uint32_t orthant_mask = 0);

// Seed block D* = B([-r,r]^{d-1} x 0).
std::vector<Point> seed_block(int dim, int r);

std::vector<Point> translate(const std::vector<Point>& pts, const Point& y);

std::string point_to_string(const Point& p);
Point parse_point(const std::string& text, int dim);

}  // namespace bbp

#include "bbperc/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace bbp {

namespace {

void check_dim(int d) {
  if (d < kMinDim || d > kMaxDim)
    throw std::invalid_argument("dimension must be in [" +
                                std::to_string(kMinDim) + "," +
                                std::to_string(kMaxDim) + "], got " +
                                std::to_string(d));
}

void check_same_dim(const Point& a, const Point& b) {
  if (a.dim != b.dim) throw std::invalid_argument("dimension mismatch");
}

}  // namespace

bool lex_less(const Point& a, const Point& b) {
  check_same_dim(a, b);
  for (int i = 0; i < a.dim; ++i) {
    if (a.x[i] != b.x[i]) return a.x[i] < b.x[i];
  }
  return false;
}

Point add(const Point& a, const Point& b) {
  check_same_dim(a, b);
  Point r = a;
  for (int i = 0; i < a.dim; ++i) r.x[i] += b.x[i];
  return r;
}

Point sub(const Point& a, const Point& b) {
  check_same_dim(a, b);
  Point r = a;
  for (int i = 0; i < a.dim; ++i) r.x[i] -= b.x[i];
  return r;
}

Point negate(const Point& a) {
  Point r = a;
  for (int i = 0; i < a.dim; ++i) r.x[i] = -r.x[i];
  return r;
}

bool is_vertex(const Point& p) {
  if (p.dim < kMinDim || p.dim > kMaxDim) return false;
  const int parity = p.x[0] & 1;
  for (int i = 1; i < p.dim; ++i) {
    if ((p.x[i] & 1) != parity) return false;
  }
  return true;
}

Point sign_step(uint32_t mask, int dim) {
  Point s = Point::zero(dim);
  for (int j = 0; j < dim; ++j) {
    s.x[j] = (mask >> (dim - 1 - j)) & 1u ? 1 : -1;
  }
  return s;
}

std::vector<Point> neighbors(const Point& v) {
  std::vector<Point> out;
  out.reserve(size_t{1} << v.dim);
  for (uint32_t m = 0; m < (1u << v.dim); ++m) {
    out.push_back(add(v, sign_step(m, v.dim)));
  }
  return out;
}

bool are_neighbors(const Point& a, const Point& b) {
  if (a.dim != b.dim) return false;
  for (int i = 0; i < a.dim; ++i) {
    if (std::abs(a.x[i] - b.x[i]) != 1) return false;
  }
  return true;
}

int64_t linf_distance(const Point& a, const Point& b) {
  check_same_dim(a, b);
  int64_t m = 0;
  for (int i = 0; i < a.dim; ++i) {
    m = std::max<int64_t>(m, std::abs(int64_t{a.x[i]} - b.x[i]));
  }
  return m;
}

bool Window::contains(const Point& p) const {
  if (p.dim != dim()) return false;
  for (int i = 0; i < p.dim; ++i) {
    if (p.x[i] < lo.x[i] || p.x[i] > hi.x[i]) return false;
  }
  return true;
}

int64_t Window::cell_count() const {
  int64_t n = 1;
  for (int i = 0; i < dim(); ++i) n *= int64_t{hi.x[i]} - lo.x[i] + 1;
  return n;
}

int64_t Window::index_of(const Point& p) const {
  int64_t idx = 0;
  for (int i = 0; i < dim(); ++i) {
    idx = idx * (int64_t{hi.x[i]} - lo.x[i] + 1) + (p.x[i] - lo.x[i]);
  }
  return idx;
}

Point Window::point_at(int64_t idx) const {
  Point p = Point::zero(dim());
  for (int i = dim() - 1; i >= 0; --i) {
    const int64_t span = int64_t{hi.x[i]} - lo.x[i] + 1;
    p.x[i] = static_cast<int32_t>(lo.x[i] + idx % span);
    idx /= span;
  }
  return p;
}

Window Window::translated(const Point& y) const {
  return Window{add(lo, y), add(hi, y)};
}

std::string Window::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < dim(); ++i) {
    if (i) os << 'x';
    os << lo.x[i] << ".." << hi.x[i];
  }
  return os.str();
}

Window make_window(const Point& lo, const Point& hi) {
  check_same_dim(lo, hi);
  check_dim(lo.dim);
  for (int i = 0; i < lo.dim; ++i) {
    if (lo.x[i] > hi.x[i])
      throw std::invalid_argument("window lo > hi on coordinate " +
                                  std::to_string(i + 1));
  }
  return Window{lo, hi};
}

std::vector<Point> window_vertices(const Window& w) {
  std::vector<Point> out;
  const int64_t n = w.cell_count();
  for (int64_t i = 0; i < n; ++i) {
    Point p = w.point_at(i);
    if (is_vertex(p)) out.push_back(p);
  }
  return out;
}

Region Region::full_space(int d) {
  check_dim(d);
  Region r;
  r.kind = Kind::FullSpace;
  r.dim = d;
  return r;
}

Region Region::half_space(int d) {
  check_dim(d);
  Region r;
  r.kind = Kind::HalfSpace;
  r.dim = d;
  return r;
}

Region Region::half_slab(int d, int l, int e) {
  check_dim(d);
  if (l < 1) throw std::invalid_argument("half-slab requires l >= 1");
  if (e < 2 || e > d)
    throw std::invalid_argument("half-slab requires 2 <= e <= d");
  Region r;
  r.kind = Kind::HalfSlab;
  r.dim = d;
  r.l = l;
  r.e = e;
  return r;
}

Region Region::slab(int d, int t) {
  check_dim(d);
  if (t < 1) throw std::invalid_argument("slab requires t >= 1");
  Region r;
  r.kind = Kind::Slab;
  r.dim = d;
  r.t = t;
  return r;
}

Region Region::box(int d, const std::array<int64_t, kMaxDim>& lo,
                   const std::array<int64_t, kMaxDim>& hi) {
  check_dim(d);
  for (int i = 0; i < d; ++i) {
    if (lo[i] > hi[i])
      throw std::invalid_argument("box lo > hi on coordinate " +
                                  std::to_string(i + 1));
  }
  Region r;
  r.kind = Kind::Box;
  r.dim = d;
  r.blo = lo;
  r.bhi = hi;
  return r;
}

Region Region::box(const Window& w) {
  std::array<int64_t, kMaxDim> lo{}, hi{};
  for (int i = 0; i < w.dim(); ++i) {
    lo[i] = w.lo.x[i];
    hi[i] = w.hi.x[i];
  }
  return box(w.dim(), lo, hi);
}

bool Region::contains(const Point& v) const {
  if (v.dim != dim || !is_vertex(v)) return false;
  return bounds_contain(v);
}

bool Region::bounds_contain(const Point& v) const {
  switch (kind) {
    case Kind::FullSpace:
      return true;
    case Kind::HalfSpace:
      return v.level() >= 0;
    case Kind::Slab:
      return v.level() >= 0 && v.level() <= t;
    case Kind::HalfSlab: {
      if (v.level() < 0) return false;
      for (int i = 0; i < dim - e; ++i) {
        if (v.x[i] < -l || v.x[i] > l) return false;
      }
      return true;
    }
    case Kind::Box: {
      for (int i = 0; i < dim; ++i) {
        if (blo[i] != -kUnbounded && v.x[i] < blo[i]) return false;
        if (bhi[i] != kUnbounded && v.x[i] > bhi[i]) return false;
      }
      return true;
    }
  }
  return false;
}

Region Region::translated(const Point& y) const {
  if (kind != Kind::Box)
    throw std::invalid_argument("only box regions translate");
  Region r = *this;
  for (int i = 0; i < dim; ++i) {
    if (r.blo[i] != -kUnbounded) r.blo[i] += y.x[i];
    if (r.bhi[i] != kUnbounded) r.bhi[i] += y.x[i];
  }
  return r;
}

std::string Region::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::FullSpace:
      return "V";
    case Kind::HalfSpace:
      return "H";
    case Kind::Slab:
      os << "slab:" << t;
      return os.str();
    case Kind::HalfSlab:
      os << "halfslab:" << l << "," << e;
      return os.str();
    case Kind::Box: {
      os << "box:";
      for (int i = 0; i < dim; ++i) {
        if (i) os << 'x';
        if (blo[i] == -kUnbounded)
          os << "-inf";
        else
          os << blo[i];
        os << "..";
        if (bhi[i] == kUnbounded)
          os << "inf";
        else
          os << bhi[i];
      }
      return os.str();
    }
  }
  return "";
}

namespace {

int64_t parse_bound(const std::string& s) {
  if (s == "inf") return kUnbounded;
  if (s == "-inf") return -kUnbounded;
  size_t pos = 0;
  long long v = std::stoll(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad bound '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t p = s.find(sep, start);
    if (p == std::string::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, p - start));
    start = p + 1;
  }
}

void parse_intervals(const std::string& text, int dim,
                     std::array<int64_t, kMaxDim>& lo,
                     std::array<int64_t, kMaxDim>& hi) {
  auto parts = split(text, 'x');
  if (static_cast<int>(parts.size()) != dim)
    throw std::invalid_argument("expected " + std::to_string(dim) +
                                " intervals, got " +
                                std::to_string(parts.size()));
  for (int i = 0; i < dim; ++i) {
    size_t p = parts[i].find("..");
    if (p == std::string::npos)
      throw std::invalid_argument("interval '" + parts[i] +
                                  "' missing '..' separator");
    lo[i] = parse_bound(parts[i].substr(0, p));
    hi[i] = parse_bound(parts[i].substr(p + 2));
    if (lo[i] > hi[i])
      throw std::invalid_argument("interval '" + parts[i] + "' has lo > hi");
  }
}

}  // namespace

Region parse_region(const std::string& text, int dim) {
  check_dim(dim);
  try {
    if (text == "H") return Region::half_space(dim);
    if (text == "V") return Region::full_space(dim);
    if (text.rfind("slab:", 0) == 0)
      return Region::slab(dim, std::stoi(text.substr(5)));
    if (text.rfind("halfslab:", 0) == 0) {
      auto parts = split(text.substr(9), ',');
      if (parts.size() != 2)
        throw std::invalid_argument("halfslab needs l,e");
      return Region::half_slab(dim, std::stoi(parts[0]), std::stoi(parts[1]));
    }
    if (text.rfind("box:", 0) == 0) {
      std::array<int64_t, kMaxDim> lo{}, hi{};
      parse_intervals(text.substr(4), dim, lo, hi);
      return Region::box(dim, lo, hi);
    }
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad region '" + text + "'");
  }
  throw std::invalid_argument("bad region '" + text + "'");
}

Window parse_window(const std::string& text, int dim) {
  check_dim(dim);
  std::array<int64_t, kMaxDim> lo{}, hi{};
  try {
    parse_intervals(text, dim, lo, hi);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad window '" + text + "'");
  }
  Point plo = Point::zero(dim), phi = Point::zero(dim);
  for (int i = 0; i < dim; ++i) {
    if (lo[i] == -kUnbounded || hi[i] == kUnbounded)
      throw std::invalid_argument("window must be finite");
    if (lo[i] < INT32_MIN || hi[i] > INT32_MAX)
      throw std::invalid_argument("window bound out of range");
    plo.x[i] = static_cast<int32_t>(lo[i]);
    phi.x[i] = static_cast<int32_t>(hi[i]);
  }
  return make_window(plo, phi);
}

std::vector<Point> boundary_set(BoundaryKind kind, int dim, int l, int t,
                                uint32_t orthant_mask) {
  check_dim(dim);
  if (l < 1) throw std::invalid_argument("boundary set requires l >= 1");
  if (t < 0) throw std::invalid_argument("boundary set requires t >= 0");

  Point lo = Point::zero(dim), hi = Point::zero(dim);
  for (int i = 0; i < dim - 1; ++i) {
    lo.x[i] = -l;
    hi.x[i] = l;
  }
  lo.x[dim - 1] = 0;
  hi.x[dim - 1] = t;
  const Window box{lo, hi};

  auto orthant_sign = [&](int i, int nbits) {
    return (orthant_mask >> (nbits - 1 - i)) & 1u ? 1 : -1;
  };

  std::vector<Point> out;
  for (const Point& v : window_vertices(box)) {
    bool keep = false;
    switch (kind) {
      case BoundaryKind::Top:
        keep = v.level() == t;
        break;
      case BoundaryKind::Frame: {
        for (int i = 0; i < dim - 1 && !keep; ++i)
          keep = std::abs(v.x[i]) == l;
        break;
      }
      case BoundaryKind::TopOrthant: {
        keep = v.level() == t;
        for (int i = 0; i < dim - 1 && keep; ++i) {
          const int64_t s = int64_t{v.x[i]} * orthant_sign(i, dim - 1);
          keep = s >= 0 && s <= l;
        }
        break;
      }
      case BoundaryKind::FrameOrthant: {
        keep = v.x[dim - 2] == l;
        for (int i = 0; i < dim - 2 && keep; ++i) {
          const int64_t s = int64_t{v.x[i]} * orthant_sign(i, dim - 2);
          keep = s >= 0 && s <= l;
        }
        break;
      }
    }
    if (keep) out.push_back(v);
  }
  return out;
}

std::vector<Point> seed_block(int dim, int r) {
  check_dim(dim);
  if (r < 0) throw std::invalid_argument("seed block requires r >= 0");
  Point lo = Point::zero(dim), hi = Point::zero(dim);
  for (int i = 0; i < dim - 1; ++i) {
    lo.x[i] = -r;
    hi.x[i] = r;
  }
  return window_vertices(Window{lo, hi});
}

std::vector<Point> translate(const std::vector<Point>& pts, const Point& y) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const Point& p : pts) out.push_back(add(p, y));
  return out;
}

std::string point_to_string(const Point& p) {
  std::ostringstream os;
  for (int i = 0; i < p.dim; ++i) {
    if (i) os << ',';
    os << p.x[i];
  }
  return os.str();
}

Point parse_point(const std::string& text, int dim) {
  check_dim(dim);
  auto parts = split(text, ',');
  if (static_cast<int>(parts.size()) != dim)
    throw std::invalid_argument("expected " + std::to_string(dim) +
                                " coordinates in '" + text + "'");
  Point p = Point::zero(dim);
  for (int i = 0; i < dim; ++i) {
    try {
      size_t pos = 0;
      long long v = std::stoll(parts[i], &pos);
      if (pos != parts[i].size() || v < INT32_MIN || v > INT32_MAX)
        throw std::invalid_argument("");
      p.x[i] = static_cast<int32_t>(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad coordinate '" + parts[i] + "'");
    }
  }
  return p;
}

}  // namespace bbp

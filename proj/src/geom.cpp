#include "latgeom/geom.hpp"

#include <algorithm>
#include <numeric>

namespace latgeom {

namespace {

std::int64_t to_int64(const Integer& v) {
  if (!v.fits_slong_p()) throw Error(ErrorCode::InvalidInput, "coordinate out of 64-bit range: " + v.get_str());
  return v.get_si();
}

std::vector<Point> convex_hull(std::span<const Point> input) {
  std::vector<Point> pts(input.begin(), input.end());
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) throw Error(ErrorCode::Degenerate, "fewer than three distinct points");

  std::vector<Point> chain(2 * pts.size());
  std::size_t k = 0;
  auto turn = [&](const Point& o, const Point& a, const Point& b) { return cross(a - o, b - o).sign(); };
  for (const Point& p : pts) {
    while (k >= 2 && turn(chain[k - 2], chain[k - 1], p) <= 0) --k;
    chain[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && turn(chain[k - 2], chain[k - 1], pts[i]) <= 0) --k;
    chain[k++] = pts[i];
  }
  chain.resize(k - 1);
  if (chain.size() < 3) throw Error(ErrorCode::Degenerate, "points are collinear");
  return chain;
}

Scalar dot_int(const Point& p, std::int64_t u1, std::int64_t u2) {
  return p.x * Scalar(static_cast<long>(u1)) + p.y * Scalar(static_cast<long>(u2));
}

}  // namespace

bool lex_less(const Point& p, const Point& q) {
  int c = compare(p.x, q.x);
  if (c != 0) return c < 0;
  return compare(p.y, q.y) < 0;
}

bool is_lattice_point(const Point& p) { return p.x.is_integer() && p.y.is_integer(); }

std::string to_string(const Point& p) { return "(" + p.x.to_string() + ", " + p.y.to_string() + ")"; }

Direction::Direction(std::int64_t u1, std::int64_t u2) {
  if (u1 == 0 && u2 == 0) throw Error(ErrorCode::InvalidInput, "zero direction");
  std::int64_t g = std::gcd(u1, u2);
  u1 /= g;
  u2 /= g;
  if (u1 < 0 || (u1 == 0 && u2 < 0)) {
    u1 = -u1;
    u2 = -u2;
  }
  u1_ = u1;
  u2_ = u2;
}

Polygon::Polygon(std::span<const Point> points) : vertices_(convex_hull(points)) {}

Polygon hull(std::span<const Point> points) { return Polygon(points); }

Point IntMatrix2::apply(const Point& p) const {
  return {dot_int(p, a11, a12), dot_int(p, a21, a22)};
}

IntMatrix2 IntMatrix2::inverse() const {
  std::int64_t d = det();
  if (d != 1 && d != -1) throw Error(ErrorCode::NotUnimodular, "matrix is not unimodular");
  return {a22 * d, -a12 * d, -a21 * d, a11 * d};
}

IntMatrix2 operator*(const IntMatrix2& m, const IntMatrix2& n) {
  return {m.a11 * n.a11 + m.a12 * n.a21, m.a11 * n.a12 + m.a12 * n.a22,
          m.a21 * n.a11 + m.a22 * n.a21, m.a21 * n.a12 + m.a22 * n.a22};
}

Scalar area(const Polygon& k) {
  Scalar twice;
  for (std::size_t i = 0; i < k.size(); ++i) twice += cross(k.vertex(i), k.vertex(i + 1));
  return twice / Scalar(2);
}

Scalar support(const Polygon& k, const Point& u) {
  Scalar best = dot(u, k.vertex(0));
  for (std::size_t i = 1; i < k.size(); ++i) {
    Scalar v = dot(u, k.vertex(i));
    if (best < v) best = std::move(v);
  }
  return best;
}

Scalar width_function(const Polygon& k, const Point& u) {
  Scalar hi = dot(u, k.vertex(0));
  Scalar lo = hi;
  for (std::size_t i = 1; i < k.size(); ++i) {
    Scalar v = dot(u, k.vertex(i));
    if (hi < v) hi = v;
    if (v < lo) lo = std::move(v);
  }
  return hi - lo;
}

Scalar width_function(const Polygon& k, const Direction& u) {
  Scalar hi = dot_int(k.vertex(0), u.u1(), u.u2());
  Scalar lo = hi;
  for (std::size_t i = 1; i < k.size(); ++i) {
    Scalar v = dot_int(k.vertex(i), u.u1(), u.u2());
    if (hi < v) hi = v;
    if (v < lo) lo = std::move(v);
  }
  return hi - lo;
}

Polygon difference_body(const Polygon& k) {
  std::vector<Point> diffs;
  diffs.reserve(k.size() * k.size());
  for (const Point& p : k.vertices())
    for (const Point& q : k.vertices())
      if (!(p == q)) diffs.push_back(p - q);
  return Polygon(diffs);
}

Polygon polar(const Polygon& k) {
  std::vector<Point> duals;
  duals.reserve(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    Point e = k.edge(i);
    Point normal{e.y, -e.x};
    Scalar offset = dot(normal, k.vertex(i));
    if (offset.sign() <= 0) throw Error(ErrorCode::OriginNotInterior, "origin is not an interior point");
    duals.push_back({normal.x / offset, normal.y / offset});
  }
  return Polygon(duals);
}

std::vector<LatticePoint> lattice_points(const Polygon& k, LatticeMode mode) {
  Scalar ymin = k.vertex(0).y, ymax = ymin;
  for (const Point& v : k.vertices()) {
    if (v.y < ymin) ymin = v.y;
    if (ymax < v.y) ymax = v.y;
  }
  std::vector<LatticePoint> out;
  std::int64_t row_lo = to_int64(ymin.ceil());
  std::int64_t row_hi = to_int64(ymax.floor());
  for (std::int64_t row = row_lo; row <= row_hi; ++row) {
    Scalar y(static_cast<long>(row));
    bool have = false;
    Scalar xl, xr;
    auto extend = [&](const Scalar& x) {
      if (!have) {
        xl = xr = x;
        have = true;
        return;
      }
      if (x < xl) xl = x;
      if (xr < x) xr = x;
    };
    for (std::size_t i = 0; i < k.size(); ++i) {
      const Point& a = k.vertex(i);
      const Point& b = k.vertex(i + 1);
      if (a.y == b.y) {
        if (a.y == y) {
          extend(a.x);
          extend(b.x);
        }
        continue;
      }
      const Scalar& lo = a.y < b.y ? a.y : b.y;
      const Scalar& hi = a.y < b.y ? b.y : a.y;
      if (y < lo || hi < y) continue;
      extend(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y));
    }
    if (!have) continue;
    bool inner_row = ymin < y && y < ymax;
    std::int64_t col_lo = to_int64(xl.ceil());
    std::int64_t col_hi = to_int64(xr.floor());
    for (std::int64_t col = col_lo; col <= col_hi; ++col) {
      bool interior = inner_row;
      if (interior) {
        Scalar x(static_cast<long>(col));
        interior = xl < x && x < xr;
      }
      if (mode == LatticeMode::All || (mode == LatticeMode::Interior) == interior) out.push_back({col, row});
    }
  }
  return out;
}

Polygon unimodular_apply(const Polygon& k, const IntMatrix2& m, const LatticePoint& t) {
  std::int64_t d = m.det();
  if (d != 1 && d != -1) throw Error(ErrorCode::NotUnimodular, "determinant " + std::to_string(d));
  std::vector<Point> image;
  image.reserve(k.size());
  Point shift = t.to_point();
  for (const Point& v : k.vertices()) image.push_back(m.apply(v) + shift);
  return Polygon(image);
}

Polygon translate(const Polygon& k, const Point& t) {
  std::vector<Point> image;
  image.reserve(k.size());
  for (const Point& v : k.vertices()) image.push_back(v + t);
  return Polygon(image);
}

Polygon scale(const Polygon& k, const Scalar& factor) {
  if (factor.sign() <= 0) throw Error(ErrorCode::InvalidInput, "scale factor must be positive");
  std::vector<Point> image;
  image.reserve(k.size());
  for (const Point& v : k.vertices()) image.push_back(factor * v);
  return Polygon(image);
}

Point vertex_centroid(const Polygon& k) {
  Point sum{};
  for (const Point& v : k.vertices()) sum = sum + v;
  Scalar n(static_cast<long>(k.size()));
  return {sum.x / n, sum.y / n};
}

bool is_centrally_symmetric(const Polygon& k) {
  if (k.size() % 2 != 0) return false;
  Point c = vertex_centroid(k);
  Point twice = Scalar(2) * c;
  // Canonical order makes the reflected vertex of vertex(i) equal vertex(i + n/2).
  std::size_t half = k.size() / 2;
  for (std::size_t i = 0; i < half; ++i)
    if (!(twice - k.vertex(i) == k.vertex(i + half))) return false;
  return true;
}

bool is_origin_symmetric(const Polygon& k) {
  if (!is_centrally_symmetric(k)) return false;
  Point c = vertex_centroid(k);
  return c.x.is_zero() && c.y.is_zero();
}

int locate(const Polygon& k, const Point& p) {
  int worst = 1;
  for (std::size_t i = 0; i < k.size(); ++i) {
    int s = cross(k.edge(i), p - k.vertex(i)).sign();
    if (s < 0) return -1;
    worst = std::min(worst, s);
  }
  return worst;
}

std::vector<LatticePoint> edge_lattice_points(const Polygon& k, std::size_t i) {
  const Point& a = k.vertex(i);
  Point e = k.edge(i);
  std::vector<LatticePoint> out;
  for (const LatticePoint& p : lattice_points(k, LatticeMode::Boundary))
    if (cross(e, p.to_point() - a).is_zero()) out.push_back(p);
  return out;
}

}  // namespace latgeom

#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oracle {

namespace {

Rational cross3(const RPoint& o, const RPoint& a, const RPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

long floor_of(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q.get_si();
}

long ceil_of(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q.get_si();
}

void bounding_box(const RPolygon& k, long& x0, long& x1, long& y0, long& y1) {
  Rational xmin = k[0].x, xmax = k[0].x, ymin = k[0].y, ymax = k[0].y;
  for (const RPoint& p : k) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  x0 = floor_of(xmin);
  x1 = ceil_of(xmax);
  y0 = floor_of(ymin);
  y1 = ceil_of(ymax);
}

// Edge line a*x + b*y = c with (a, b) the primitive outward integer normal.
struct Line {
  Integer a, b;
  Rational c;
};

Line edge_line(const RPoint& p, const RPoint& q) {
  Rational nx = q.y - p.y, ny = p.x - q.x;
  Integer den;
  mpz_lcm(den.get_mpz_t(), nx.get_den_mpz_t(), ny.get_den_mpz_t());
  Integer a = Rational(nx * den).get_num(), b = Rational(ny * den).get_num();
  Integer g = gcd(a, b);
  a /= g;
  b /= g;
  return {a, b, Rational(a) * p.x + Rational(b) * p.y};
}

RPoint meet(const Line& l, const Line& m) {
  Rational det = Rational(l.a * m.b - l.b * m.a);
  return {(l.c * Rational(m.b) - m.c * Rational(l.b)) / det, (Rational(l.a) * m.c - Rational(m.a) * l.c) / det};
}

}  // namespace

RPolygon to_rational(const latgeom::Polygon& k) {
  RPolygon out;
  for (const latgeom::Point& v : k.vertices()) out.push_back({v.x.rational(), v.y.rational()});
  return out;
}

latgeom::Polygon to_polygon(const RPolygon& k) {
  std::vector<latgeom::Point> pts;
  for (const RPoint& p : k) pts.push_back({latgeom::Scalar(p.x), latgeom::Scalar(p.y)});
  return latgeom::Polygon(pts);
}

Rational area(const RPolygon& k) {
  Rational twice = 0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    const RPoint& p = k[i];
    const RPoint& q = k[(i + 1) % k.size()];
    twice += (q.x - p.x) * (q.y + p.y);
  }
  Rational a = -twice / 2;
  return a < 0 ? Rational(-a) : a;
}

int side(const RPolygon& k, const Rational& x, const Rational& y) {
  RPoint p{x, y};
  bool on_edge = false;
  for (std::size_t i = 0; i < k.size(); ++i) {
    int s = sgn(cross3(k[i], k[(i + 1) % k.size()], p));
    if (s < 0) return -1;
    if (s == 0) on_edge = true;
  }
  return on_edge ? 0 : 1;
}

std::vector<std::pair<long, long>> interior_lattice_points(const RPolygon& k) {
  long x0, x1, y0, y1;
  bounding_box(k, x0, x1, y0, y1);
  std::vector<std::pair<long, long>> out;
  for (long x = x0; x <= x1; ++x)
    for (long y = y0; y <= y1; ++y)
      if (side(k, x, y) == 1) out.emplace_back(x, y);
  return out;
}

std::vector<std::pair<long, long>> boundary_lattice_points(const RPolygon& k) {
  long x0, x1, y0, y1;
  bounding_box(k, x0, x1, y0, y1);
  std::vector<std::pair<long, long>> out;
  for (long x = x0; x <= x1; ++x)
    for (long y = y0; y <= y1; ++y)
      if (side(k, x, y) == 0) out.emplace_back(x, y);
  return out;
}

Rational width_scan(const RPolygon& k, long radius) {
  bool have = false;
  Rational best;
  for (long u1 = -radius; u1 <= radius; ++u1) {
    for (long u2 = -radius; u2 <= radius; ++u2) {
      if (std::gcd(u1, u2) != 1) continue;
      Rational lo = u1 * k[0].x + u2 * k[0].y, hi = lo;
      for (const RPoint& p : k) {
        Rational v = u1 * p.x + u2 * p.y;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      if (!have || hi - lo < best) best = hi - lo;
      have = true;
    }
  }
  return best;
}

bool push_maximal(const RPolygon& k) {
  if (!interior_lattice_points(k).empty()) return false;
  std::size_t n = k.size();
  std::vector<Line> lines;
  for (std::size_t i = 0; i < n; ++i) lines.push_back(edge_line(k[i], k[(i + 1) % n]));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Line> pushed = lines;
    pushed[i].c += Rational(1, 64);
    RPolygon grown;
    for (std::size_t j = 0; j < n; ++j) grown.push_back(meet(pushed[(j + n - 1) % n], pushed[j]));
    if (interior_lattice_points(grown).empty()) return false;
  }
  return true;
}

RPolygon polar(const RPolygon& k) {
  RPolygon out;
  for (std::size_t i = 0; i < k.size(); ++i) {
    Line l = edge_line(k[i], k[(i + 1) % k.size()]);
    out.push_back({Rational(l.a) / l.c, Rational(l.b) / l.c});
  }
  return out;
}

latgeom::Polygon random_rational_polygon(std::uint64_t seed) {
  Gen g(seed);
  for (;;) {
    long n = g.integer(3, 7);
    std::vector<latgeom::Point> pts;
    for (long i = 0; i < n; ++i) pts.push_back({latgeom::Scalar(g.rational(50, 50)), latgeom::Scalar(g.rational(50, 50))});
    try {
      return latgeom::Polygon(pts);
    } catch (const latgeom::Error&) {
    }
  }
}

latgeom::Polygon random_symmetric_polygon(std::uint64_t seed, long max_num, long max_den) {
  Gen g(seed);
  for (;;) {
    long n = g.integer(2, 4);
    std::vector<latgeom::Point> pts;
    for (long i = 0; i < n; ++i) {
      latgeom::Point p{latgeom::Scalar(g.rational(max_num, max_den)), latgeom::Scalar(g.rational(max_num, max_den))};
      pts.push_back(p);
      pts.push_back(-p);
    }
    try {
      return latgeom::Polygon(pts);
    } catch (const latgeom::Error&) {
    }
  }
}

latgeom::Polygon random_integer_polygon(std::uint64_t seed) {
  Gen g(seed);
  for (;;) {
    long n = g.integer(3, 8);
    std::vector<latgeom::Point> pts;
    for (long i = 0; i < n; ++i) pts.push_back({latgeom::Scalar(g.integer(-5, 5)), latgeom::Scalar(g.integer(-5, 5))});
    try {
      return latgeom::Polygon(pts);
    } catch (const latgeom::Error&) {
    }
  }
}

latgeom::IntMatrix2 random_unimodular(std::uint64_t seed, int steps) {
  Gen g(seed * 7919 + 17);
  latgeom::IntMatrix2 m;
  for (int i = 0; i < steps; ++i) {
    long k = g.integer(-2, 2);
    latgeom::IntMatrix2 shear = g.integer(0, 1) ? latgeom::IntMatrix2{1, k, 0, 1} : latgeom::IntMatrix2{1, 0, k, 1};
    m = shear * m;
  }
  static const latgeom::IntMatrix2 flips[] = {{1, 0, 0, 1}, {0, 1, 1, 0}, {-1, 0, 0, 1}, {0, -1, 1, 0}};
  return flips[g.integer(0, 3)] * m;
}

}  // namespace oracle

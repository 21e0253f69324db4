#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "latgeom/exactnum.hpp"

namespace latgeom {

struct Point {
  Scalar x;
  Scalar y;

  friend bool operator==(const Point&, const Point&) = default;
  friend Point operator+(const Point& p, const Point& q) { return {p.x + q.x, p.y + q.y}; }
  friend Point operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
  friend Point operator*(const Scalar& s, const Point& p) { return {s * p.x, s * p.y}; }
  Point operator-() const { return {-x, -y}; }
};

inline Scalar dot(const Point& p, const Point& q) { return p.x * q.x + p.y * q.y; }
inline Scalar cross(const Point& p, const Point& q) { return p.x * q.y - p.y * q.x; }
/// Lexicographic order on (x, y), exact.
bool lex_less(const Point& p, const Point& q);
bool is_lattice_point(const Point& p);
std::string to_string(const Point& p);

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  Point to_point() const { return {Scalar(static_cast<long>(x)), Scalar(static_cast<long>(y))}; }
};

/// Nonzero integer direction, stored primitive and lexicographically positive.
class Direction {
 public:
  Direction(std::int64_t u1, std::int64_t u2);

  std::int64_t u1() const { return u1_; }
  std::int64_t u2() const { return u2_; }
  Point to_point() const { return {Scalar(static_cast<long>(u1_)), Scalar(static_cast<long>(u2_))}; }

  friend bool operator==(const Direction&, const Direction&) = default;
  friend auto operator<=>(const Direction&, const Direction&) = default;

 private:
  std::int64_t u1_;
  std::int64_t u2_;
};

/// Symbolic split {b <= a1*x + a2*y <= b + 1} with coprime (a1, a2).
struct Split {
  std::int64_t a1 = 0;
  std::int64_t a2 = 1;
  std::int64_t b = 0;

  friend bool operator==(const Split&, const Split&) = default;
};

/// Bounded, strictly convex polygon with counterclockwise vertices, starting
/// at the lexicographically smallest vertex. Two polygons are equal iff they
/// have the same vertex sequence.
class Polygon {
 public:
  /// Canonical convex hull of the given points; throws Degenerate when they
  /// do not span the plane.
  explicit Polygon(std::span<const Point> points);
  Polygon(std::initializer_list<Point> points) : Polygon(std::span<const Point>(points.begin(), points.size())) {}

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  /// Edge i runs from vertex(i) to vertex(i + 1).
  Point edge(std::size_t i) const { return vertex(i + 1) - vertex(i); }

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  std::vector<Point> vertices_;
};

Polygon hull(std::span<const Point> points);

struct IntMatrix2 {
  std::int64_t a11 = 1, a12 = 0;
  std::int64_t a21 = 0, a22 = 1;

  std::int64_t det() const { return a11 * a22 - a12 * a21; }
  Point apply(const Point& p) const;
  IntMatrix2 inverse() const;  // requires |det| = 1
  friend IntMatrix2 operator*(const IntMatrix2& m, const IntMatrix2& n);
  friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
};

Scalar area(const Polygon& k);
/// h(K, u) = max over K of u.x
Scalar support(const Polygon& k, const Point& u);
/// w(K, u) = h(K, u) + h(K, -u)
Scalar width_function(const Polygon& k, const Direction& u);
Scalar width_function(const Polygon& k, const Point& u);

Polygon difference_body(const Polygon& k);
/// K* = {u : h(K, u) <= 1}; throws OriginNotInterior.
Polygon polar(const Polygon& k);

enum class LatticeMode { All, Interior, Boundary };
std::vector<LatticePoint> lattice_points(const Polygon& k, LatticeMode mode);

/// x -> M x + t; throws NotUnimodular unless |det M| = 1.
Polygon unimodular_apply(const Polygon& k, const IntMatrix2& m, const LatticePoint& t = {});

Polygon translate(const Polygon& k, const Point& t);
Polygon scale(const Polygon& k, const Scalar& factor);
/// Average of the vertices; the center for centrally symmetric polygons.
Point vertex_centroid(const Polygon& k);
bool is_centrally_symmetric(const Polygon& k);
bool is_origin_symmetric(const Polygon& k);
/// Sign of the position of p relative to K: 1 interior, 0 boundary, -1 outside.
int locate(const Polygon& k, const Point& p);
/// Integer points on the closed edge from vertex(i) to vertex(i + 1).
std::vector<LatticePoint> edge_lattice_points(const Polygon& k, std::size_t i);

}  // namespace latgeom

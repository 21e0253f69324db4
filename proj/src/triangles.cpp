#include "latgeom/triangles.hpp"

#include <algorithm>

#include "latgeom/classify.hpp"
#include "latgeom/latwidth.hpp"

namespace latgeom {

namespace {

Point base_point(const LatticeTriangle& base, std::size_t i) { return base[i % 3].to_point(); }

}  // namespace

LatticeTriangle standard_base() { return {LatticePoint{0, 0}, LatticePoint{1, 0}, LatticePoint{0, 1}}; }

bool is_fundamental(const LatticeTriangle& base) {
  std::int64_t d = (base[1].x - base[0].x) * (base[2].y - base[0].y) - (base[1].y - base[0].y) * (base[2].x - base[0].x);
  return d == 1 || d == -1;
}

void TriangleParams::validate() const {
  for (const Scalar& xi : x)
    if (xi.sign() <= 0 || !(xi < Scalar(1)))
      throw Error(ErrorCode::ParamOutOfRange, "parameter " + xi.to_string() + " not in (0, 1)");
  if (!is_fundamental(base)) throw Error(ErrorCode::ParamOutOfRange, "base triangle is not a fundamental cell");
}

Scalar BaryMatrix::det() const {
  const auto& m = rows;
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

BaryMatrix operator*(const BaryMatrix& m, const BaryMatrix& n) {
  BaryMatrix out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      out.rows[i][j] = m.rows[i][0] * n.rows[0][j] + m.rows[i][1] * n.rows[1][j] + m.rows[i][2] * n.rows[2][j];
  return out;
}

std::array<Scalar, 3> bary_coords(const Point& p, const Point& q0, const Point& q1, const Point& q2) {
  Scalar total = cross(q1 - q0, q2 - q0);
  if (total.is_zero()) throw Error(ErrorCode::DegenerateFrame, "frame points are collinear");
  Scalar x0 = cross(q1 - p, q2 - p) / total;
  Scalar x1 = cross(q2 - p, q0 - p) / total;
  return {x0, x1, Scalar(1) - x0 - x1};
}

Scalar circumscription_determinant(const std::array<Scalar, 3>& x) {
  const Scalar one(1);
  return x[0] * x[1] * x[2] + (one - x[0]) * (one - x[1]) * (one - x[2]);
}

BaryMatrix circumscription_matrix(const std::array<Scalar, 3>& x) {
  const Scalar one(1), zero(0);
  return BaryMatrix{{{{zero, one - x[0], x[0]}, {x[1], zero, one - x[1]}, {one - x[2], x[2], zero}}}};
}

BaryMatrix vertex_bary_matrix(const std::array<Scalar, 3>& x) {
  Scalar f = circumscription_determinant(x);
  if (f.is_zero()) throw Error(ErrorCode::SingularParams, "circumscription matrix is singular");
  const Scalar one(1);
  const Scalar &x0 = x[0], &x1 = x[1], &x2 = x[2];
  BaryMatrix b{{{{-(one - x1) * x2, x0 * x2, (one - x0) * (one - x1)},
                 {(one - x1) * (one - x2), -(one - x2) * x0, x0 * x1},
                 {x1 * x2, (one - x0) * (one - x2), -(one - x0) * x1}}}};
  for (auto& row : b.rows)
    for (Scalar& v : row) v /= f;
  return b;
}

std::array<Point, 3> circumscribed_vertices(const TriangleParams& params) {
  params.validate();
  BaryMatrix b = vertex_bary_matrix(params.x);
  std::array<Point, 3> q;
  for (std::size_t j = 0; j < 3; ++j) {
    q[j] = Point{};
    for (std::size_t k = 0; k < 3; ++k) q[j] = q[j] + b.rows[j][k] * base_point(params.base, k);
  }
  return q;
}

Polygon circumscribed_triangle(const TriangleParams& params) {
  auto q = circumscribed_vertices(params);
  return Polygon(q);
}

Scalar tri_width_matrix(const BaryMatrix& b, const LatticeTriangle& base) {
  if (!is_fundamental(base)) throw Error(ErrorCode::ParamOutOfRange, "base triangle is not a fundamental cell");
  std::array<Point, 3> q;
  for (std::size_t j = 0; j < 3; ++j) {
    q[j] = Point{};
    for (std::size_t k = 0; k < 3; ++k) q[j] = q[j] + b.rows[j][k] * base_point(base, k);
  }
  Polygon triangle(q);
  Scalar w0 = min(width_function(triangle, Direction(1, 0)), width_function(triangle, Direction(0, 1)));

  bool have = false;
  Scalar best;
  for (const Direction& u : directions_within(triangle, w0)) {
    std::array<Scalar, 3> z;
    for (std::size_t i = 0; i < 3; ++i)
      z[i] = Scalar(static_cast<long>(base[i].x * u.u1() + base[i].y * u.u2()));
    std::array<Scalar, 3> bz;
    for (std::size_t i = 0; i < 3; ++i) bz[i] = b.rows[i][0] * z[0] + b.rows[i][1] * z[1] + b.rows[i][2] * z[2];
    Scalar norm = max(max((bz[1] - bz[0]).abs(), (bz[2] - bz[1]).abs()), (bz[0] - bz[2]).abs());
    if (!have || norm < best) best = norm;
    have = true;
  }
  return best;
}

Scalar tri_width_circumscribed(const TriangleParams& params) {
  params.validate();
  const auto& x = params.x;
  const Scalar one(1);
  Scalar f = circumscription_determinant(x);
  switch (freecond_check(params)) {
    case FreeCondResult::CondA: return min(min(x[0], x[1]), x[2]) / f;
    case FreeCondResult::CondB: return min(min(one - x[0], one - x[1]), one - x[2]) / f;
    case FreeCondResult::Neither: break;
  }
  Polygon triangle = circumscribed_triangle(params);
  Scalar w0 = min(width_function(triangle, Direction(1, 0)), width_function(triangle, Direction(0, 1)));
  bool have = false;
  Scalar best;
  for (const Direction& u : directions_within(triangle, w0)) {
    std::array<long, 3> z;
    for (std::size_t i = 0; i < 3; ++i) z[i] = params.base[i].x * u.u1() + params.base[i].y * u.u2();
    std::array<Scalar, 3> y{Scalar(z[2] - z[1]), Scalar(z[0] - z[2]), Scalar(z[1] - z[0])};
    Scalar worst;
    for (std::size_t i = 0; i < 3; ++i) {
      std::size_t j = (i + 1) % 3;
      Scalar term = (x[i] * y[i] + (one - x[j]) * y[j]).abs();
      if (i == 0 || worst < term) worst = term;
    }
    if (!have || worst < best) best = worst;
    have = true;
  }
  return best / f;
}

Scalar tri_area_circumscribed(const TriangleParams& params) {
  params.validate();
  return Scalar(1) / (Scalar(2) * circumscription_determinant(params.x));
}

TriangleParams hurkens_params(const LatticeTriangle& base) {
  Scalar inv_sqrt3 = Scalar::quadratic(0, Rational(1, 3), 3);
  return TriangleParams{{inv_sqrt3, inv_sqrt3, inv_sqrt3}, base};
}

Polygon hurkens_triangle(const LatticeTriangle& base) { return circumscribed_triangle(hurkens_params(base)); }

}  // namespace latgeom

#pragma once

#include <array>

#include "latgeom/geom.hpp"

namespace latgeom {

/// Three lattice points spanning a fundamental cell (|det(p1 - p0, p2 - p0)| = 1).
using LatticeTriangle = std::array<LatticePoint, 3>;

LatticeTriangle standard_base();
bool is_fundamental(const LatticeTriangle& base);

/// Triangle Q = conv{q0, q1, q2} circumscribed about the base cell so that
/// p_i = (1 - x_i) q_{i+1} + x_i q_{i+2}, indices mod 3.
struct TriangleParams {
  std::array<Scalar, 3> x;
  LatticeTriangle base = standard_base();

  /// Checks 0 < x_i < 1 and that the base is fundamental (ParamOutOfRange otherwise).
  void validate() const;
};

/// Rows are barycentric coordinates; every row sums to 1.
struct BaryMatrix {
  std::array<std::array<Scalar, 3>, 3> rows;

  Scalar det() const;
  friend BaryMatrix operator*(const BaryMatrix& m, const BaryMatrix& n);
  friend bool operator==(const BaryMatrix&, const BaryMatrix&) = default;
};

/// Barycentric coordinates of p with respect to (q0, q1, q2); throws DegenerateFrame.
std::array<Scalar, 3> bary_coords(const Point& p, const Point& q0, const Point& q1, const Point& q2);

/// x0 x1 x2 + (1 - x0)(1 - x1)(1 - x2), the determinant of the circumscription matrix.
Scalar circumscription_determinant(const std::array<Scalar, 3>& x);

/// Barycentric coordinates of the base points with respect to Q (rows p_i).
BaryMatrix circumscription_matrix(const std::array<Scalar, 3>& x);
/// Inverse of circumscription_matrix: coordinates of the q_j with respect to the base.
BaryMatrix vertex_bary_matrix(const std::array<Scalar, 3>& x);

/// Vertices (q0, q1, q2) in parameter order.
std::array<Point, 3> circumscribed_vertices(const TriangleParams& params);
Polygon circumscribed_triangle(const TriangleParams& params);

/// Lattice width of the triangle with vertex matrix B over the base:
/// min |D B z|_inf over non-constant integer z, D the cyclic difference matrix.
Scalar tri_width_matrix(const BaryMatrix& b, const LatticeTriangle& base);

/// Lattice width of the circumscribed triangle via its parameters. Uses the
/// closed form min(x)/f under CondA, min(1 - x)/f under CondB, and the general
/// min-max over y with y0 + y1 + y2 = 0 otherwise.
Scalar tri_width_circumscribed(const TriangleParams& params);

/// 1 / (2 f(x)).
Scalar tri_area_circumscribed(const TriangleParams& params);

/// Lattice-free triangle of lattice width 1 + 2/sqrt(3) around the base cell.
Polygon hurkens_triangle(const LatticeTriangle& base = standard_base());
TriangleParams hurkens_params(const LatticeTriangle& base = standard_base());

}  // namespace latgeom

#include "latgeom/classify.hpp"

#include <algorithm>

#include "latgeom/latwidth.hpp"
#include "latgeom/triangles.hpp"

namespace latgeom {

std::string_view to_string(MaximalClass c) {
  switch (c) {
    case MaximalClass::NotLatticeFree: return "NotLatticeFree";
    case MaximalClass::LatticeFreeNotMaximal: return "LatticeFreeNotMaximal";
    case MaximalClass::Type1Triangle: return "Type1Triangle";
    case MaximalClass::Type2Triangle: return "Type2Triangle";
    case MaximalClass::Type3Triangle: return "Type3Triangle";
    case MaximalClass::MaximalQuadrilateral: return "MaximalQuadrilateral";
  }
  return "Unknown";
}

std::string_view to_string(FreeCondResult r) {
  switch (r) {
    case FreeCondResult::CondA: return "CondA";
    case FreeCondResult::CondB: return "CondB";
    case FreeCondResult::Neither: return "Neither";
  }
  return "Unknown";
}

bool is_lattice_free(const Polygon& k) { return lattice_points(k, LatticeMode::Interior).empty(); }

EdgeLatticeCounts edge_lattice_counts(const Polygon& k) {
  EdgeLatticeCounts counts{std::vector<std::size_t>(k.size(), 0), std::vector<std::size_t>(k.size(), 0)};
  for (const LatticePoint& lp : lattice_points(k, LatticeMode::Boundary)) {
    Point p = lp.to_point();
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (!cross(k.edge(i), p - k.vertex(i)).is_zero()) continue;
      ++counts.closed[i];
      if (!(p == k.vertex(i)) && !(p == k.vertex(i + 1))) ++counts.relative_interior[i];
    }
  }
  return counts;
}

MaximalClass classify_maximal(const Polygon& k) {
  if (!is_lattice_free(k)) return MaximalClass::NotLatticeFree;
  EdgeLatticeCounts counts = edge_lattice_counts(k);
  bool maximal = std::all_of(counts.relative_interior.begin(), counts.relative_interior.end(),
                             [](std::size_t n) { return n >= 1; });
  if (!maximal) return MaximalClass::LatticeFreeNotMaximal;

  auto exactly_one_each = std::all_of(counts.relative_interior.begin(), counts.relative_interior.end(),
                                      [](std::size_t n) { return n == 1; });
  if (k.size() == 4) {
    if (!exactly_one_each)
      throw Error(ErrorCode::NotTriangleOrQuad, "quadrilateral with several integer points on an edge");
    return MaximalClass::MaximalQuadrilateral;
  }
  if (k.size() != 3)
    throw Error(ErrorCode::NotTriangleOrQuad, std::to_string(k.size()) + " edges with an integer point on each");

  bool integer_vertices = std::all_of(k.vertices().begin(), k.vertices().end(), is_lattice_point);
  if (integer_vertices) {
    if (!exactly_one_each) throw Error(ErrorCode::NotTriangleOrQuad, "integer triangle with a crowded edge");
    return MaximalClass::Type1Triangle;
  }
  std::size_t boundary = lattice_points(k, LatticeMode::Boundary).size();
  if (boundary == 3 && exactly_one_each) return MaximalClass::Type3Triangle;
  // Vertex i is incident to edges i - 1 and i; the opposite edge is i + 1.
  for (std::size_t i = 0; i < 3; ++i) {
    if (is_lattice_point(k.vertex(i))) continue;
    if (counts.relative_interior[(i + 2) % 3] == 1 && counts.relative_interior[i] == 1 &&
        counts.closed[(i + 1) % 3] >= 2)
      return MaximalClass::Type2Triangle;
  }
  throw Error(ErrorCode::NotTriangleOrQuad, "maximal triangle matches no known lattice-point pattern");
}

std::optional<Split> is_split_containing(const Polygon& k) {
  LatticeWidth lw = lattice_width(k);
  if (Scalar(1) < lw.w) return std::nullopt;
  std::vector<Direction> order = lw.minimizers;
  for (const Direction& u : directions_within(k, Scalar(1)))
    if (std::find(order.begin(), order.end(), u) == order.end()) order.push_back(u);
  for (const Direction& u : order) {
    Point up = u.to_point();
    Scalar lo = -support(k, -up);
    Scalar hi = support(k, up);
    Integer b = lo.floor();
    if (!(Scalar(Rational(b + 1)) < hi)) {
      if (!b.fits_slong_p()) throw Error(ErrorCode::InvalidInput, "split offset out of range");
      return Split{u.u1(), u.u2(), b.get_si()};
    }
  }
  return std::nullopt;
}

FreeCondResult freecond_check(const Scalar& x0, const Scalar& x1, const Scalar& x2) {
  const Scalar one(1);
  std::array<Scalar, 3> sums{x0 + x1, x0 + x2, x1 + x2};
  if (std::all_of(sums.begin(), sums.end(), [&](const Scalar& s) { return one < s; })) return FreeCondResult::CondA;
  if (std::all_of(sums.begin(), sums.end(), [&](const Scalar& s) { return s < one; })) return FreeCondResult::CondB;
  return FreeCondResult::Neither;
}

FreeCondResult freecond_check(const TriangleParams& params) {
  return freecond_check(params.x[0], params.x[1], params.x[2]);
}

}  // namespace latgeom

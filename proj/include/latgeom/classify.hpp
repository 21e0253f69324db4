#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "latgeom/geom.hpp"

namespace latgeom {

struct TriangleParams;

enum class MaximalClass {
  NotLatticeFree,
  LatticeFreeNotMaximal,
  Type1Triangle,
  Type2Triangle,
  Type3Triangle,
  MaximalQuadrilateral,
};

std::string_view to_string(MaximalClass c);

enum class FreeCondResult { CondA, CondB, Neither };

std::string_view to_string(FreeCondResult r);

bool is_lattice_free(const Polygon& k);

/// Integer points on each edge of K, split into relative interior and total.
struct EdgeLatticeCounts {
  std::vector<std::size_t> relative_interior;
  std::vector<std::size_t> closed;
};

EdgeLatticeCounts edge_lattice_counts(const Polygon& k);

/// A bounded lattice-free polygon is maximal iff the relative interior of every
/// edge holds an integer point. Maximal ones are sorted by their boundary
/// lattice-point pattern. Throws NotTriangleOrQuad if a polygon with that
/// pattern is neither a triangle nor a quadrilateral of the expected kind.
MaximalClass classify_maximal(const Polygon& k);

/// Some split containing K, if one exists, scanning lattice-width minimizers first.
std::optional<Split> is_split_containing(const Polygon& k);

FreeCondResult freecond_check(const TriangleParams& params);
FreeCondResult freecond_check(const Scalar& x0, const Scalar& x1, const Scalar& x2);

}  // namespace latgeom

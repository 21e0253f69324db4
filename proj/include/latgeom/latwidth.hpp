#pragma once

#include <vector>

#include "latgeom/geom.hpp"

namespace latgeom {

struct LatticeWidth {
  Scalar w;
  /// Every primitive direction attaining w, one per +/- pair, sorted.
  std::vector<Direction> minimizers;
};

/// Lattice width min{w(K, u) : u in Z^2 \ {0}}.
///
/// With W0 = min(w(K, e1), w(K, e2)), every direction u with w(K, u) <= W0
/// lies in the polygon W0 * (DK)*, so its nonzero lattice points are a
/// complete candidate set.
LatticeWidth lattice_width(const Polygon& k);

/// Directions u != 0 with w(K, u) <= bound: the lattice points of bound * (DK)*.
std::vector<Direction> directions_within(const Polygon& k, const Scalar& bound);

/// Radius B such that every u with w(K, u) <= W0 has |u|_inf <= B. Uses the
/// largest axis-parallel square centred at the vertex centroid inside K.
std::int64_t certified_search_radius(const Polygon& k);

/// Minimum of w(K, u) over primitive u with |u|_inf <= radius, by exhaustive
/// scan. Throws RadiusTooSmall if radius < certified_search_radius(K).
Scalar lattice_width_bruteforce(const Polygon& k, std::int64_t radius);

}  // namespace latgeom

#pragma once

// Independent reference implementations used to cross-check the library.
// Everything here works on plain rationals with naive loops and shares no
// code with the algorithms under test.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "latgeom/geom.hpp"

namespace oracle {

using latgeom::Integer;
using latgeom::Rational;

struct RPoint {
  Rational x;
  Rational y;
};

using RPolygon = std::vector<RPoint>;  // counterclockwise

RPolygon to_rational(const latgeom::Polygon& k);
latgeom::Polygon to_polygon(const RPolygon& k);

/// Twice-signed area by the trapezoid rule, halved.
Rational area(const RPolygon& k);

/// Sign of the position of (x, y): 1 strictly inside, 0 on the boundary, -1 outside.
int side(const RPolygon& k, const Rational& x, const Rational& y);

/// Lattice points in the bounding box, classified by `side`.
std::vector<std::pair<long, long>> interior_lattice_points(const RPolygon& k);
std::vector<std::pair<long, long>> boundary_lattice_points(const RPolygon& k);

/// min over primitive u with |u|_inf <= radius of max u.v - min u.v.
Rational width_scan(const RPolygon& k, long radius);

/// Maximality by perturbation: K is maximal lattice-free iff K is lattice-free
/// and pushing any single edge outward by 1/64 (primitive integer normal)
/// creates an interior lattice point. Exact when all coordinates lie in (1/8)Z.
bool push_maximal(const RPolygon& k);

/// Polar body of an origin-symmetric polygon via edge lines: vertex n/c for
/// each edge line n.x = c.
RPolygon polar(const RPolygon& k);

/// Deterministic generators built on std::mt19937_64 raw output.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed ^ 0xA5A5A5A5DEADBEEFULL) {}
  long integer(long lo, long hi) { return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Rational rational(long max_num, long max_den) {
    Rational r(integer(-max_num, max_num), integer(1, max_den));
    r.canonicalize();
    return r;
  }

 private:
  std::mt19937_64 engine_;
};

/// Random hull of 3..7 points with numerators and denominators up to 50.
latgeom::Polygon random_rational_polygon(std::uint64_t seed);
/// Random origin-symmetric hull of +-p_i, 2..4 generators, small coordinates.
latgeom::Polygon random_symmetric_polygon(std::uint64_t seed, long max_num = 6, long max_den = 4);
/// Random polygon with integer vertices in [-5, 5]^2.
latgeom::Polygon random_integer_polygon(std::uint64_t seed);
/// Product of `steps` random shears with entries in [-2, 2], times a random signed permutation.
latgeom::IntMatrix2 random_unimodular(std::uint64_t seed, int steps = 3);

}  // namespace oracle

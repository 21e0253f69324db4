#pragma once

#include <cstddef>

#include "latgeom/geom.hpp"

namespace latgeom {

/// First covering minimum, exactly 1 / lattice width.
Scalar mu1(const Polygon& k);

/// ||x||_K = min{t >= 0 : x in tK} = h(K*, x) for origin-symmetric K.
Scalar minkowski_norm(const Polygon& k, const Point& x);

/// K_alpha = conv{+-(1, alpha), +-(0, 1)} for 0 <= alpha < 1.
Polygon diamond(const Scalar& alpha);
/// mu2(K_alpha) = max{1 + alpha, 2 - alpha} / 2.
Scalar mu2_diamond(const Scalar& alpha);
/// A point x maximizing min_z ||x - z||_{K_alpha}.
Point diamond_deep_point(const Scalar& alpha);

struct Mu2Interval {
  Rational lo;
  Rational hi;
  /// Grid point whose distance to Z^2 equals lo.
  Point witness;
  std::size_t cells = 0;
};

/// Certified enclosure of mu2(K) = max_x min_z ||x - z||_K with hi - lo <= eps.
///
/// Branch and bound over the unit square: every cell gets the exact value at
/// its centre plus the Lipschitz slack max_{v in K*} |v|_1 times its half side.
/// Evaluation runs in scaled 128-bit integers, so every bound is exact.
/// K must be rational and origin-symmetric (NotSymmetric / IrrationalInput).
Mu2Interval mu2_approx(const Polygon& k, const Rational& eps, std::size_t max_cells = 4'000'000);

/// True iff the translates P + z, z in Z^2, tile the plane: area 1 and no two
/// translates share interior points.
bool tiles_by_integer_translates(const Polygon& p);

/// 1/2 conv{+-(-alpha - 1, 1), +-(-alpha + 1, 1)}.
Polygon canonical_tiling_parallelogram(const Scalar& alpha);

struct ParallelogramForm {
  IntMatrix2 m;
  /// Normalized into [0, 1/2]; alpha and 1 - alpha give equivalent parallelograms.
  Scalar alpha;
};

/// Linear unimodular M with M(P) = canonical_tiling_parallelogram(alpha).
ParallelogramForm parallelogram_normal_form(const Polygon& p);

}  // namespace latgeom

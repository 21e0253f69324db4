#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latgeom/classify.hpp"
#include "latgeom/geom.hpp"
#include "latgeom/triangles.hpp"

namespace latgeom {

/// 1 + 2/sqrt(3), the largest lattice width of a lattice-free body.
Scalar max_lattice_width();

/// Largest area of a lattice-free body of lattice width w; nullopt stands for
/// "unbounded" (w <= 1). Throws WidthOutOfRange beyond 1 + 2/sqrt(3) and
/// IrrationalInput when the bound would need a nested radical.
std::optional<Scalar> area_upper_general(const Scalar& w);
/// (3/8) w^2.
Scalar area_lower_general(const Scalar& w);

struct AreaRange {
  std::optional<Scalar> upper;  // nullopt: unbounded
  Scalar lower;
};

/// Area range of centrally symmetric lattice-free bodies of width 0 < w <= 2.
AreaRange area_bounds_symmetric(const Scalar& w);

/// Area range in terms of the covering minima, with 0 < mu1 <= mu2 and
/// mu2 <= (1 + 2/sqrt(3)) mu1 (or 2 mu1 when symmetric). Throws RatioOutOfRange.
AreaRange corollary_bounds_mu(const Scalar& mu1, const Scalar& mu2, bool symmetric);

enum class ExtremalKind { GeneralMaxQuad, GeneralMaxTriangle, GeneralMin, SymMaxCross, SymMin, Hurkens };

std::string_view to_string(ExtremalKind kind);
/// Parses the names printed by to_string, ignoring case; throws InvalidInput.
ExtremalKind parse_extremal_kind(std::string_view name);

struct ExtremalParams {
  Scalar w;
  /// Crossing position for GeneralMaxQuad.
  Scalar s;
  /// Diamond shear for SymMin.
  Scalar alpha;
  /// Fundamental cell for Hurkens.
  LatticeTriangle base = standard_base();
};

/// Body attaining equality in the inequality named by target_inequality(kind).
/// Throws ParamOutOfRange for parameters outside the kind's range.
Polygon construct_extremal(ExtremalKind kind, const ExtremalParams& params);
std::string_view target_inequality(ExtremalKind kind);

/// Structural shapes that characterize equality.
enum class EqualityShape {
  CrossingSegments,     // hull of segments of lattice lengths w and w/(w-1) that meet
  EqualParameterTriangle,  // triangle with p_i = lambda q_{i+1} + (1 - lambda) q_{i+2} integral
  StandardTriangle,     // translate of (w/2) conv{(1,0),(0,1),(-1,-1)}
  UnitDiamond,          // conv{+-(1,0), +-(0,1)} + (1/2, 1/2)
  CrossingDiagonals,    // conv{+-(w/2,0), +-(0, w/(2(w-1)))} + (1/2, 1/2)
  DiamondFamily,        // translate of (w/2) K_alpha
};

std::string_view to_string(EqualityShape shape);

struct Certification {
  EqualityShape shape;
  /// lambda for EqualParameterTriangle, alpha for DiamondFamily.
  std::optional<Scalar> parameter;
  /// Human-readable witness (segments, matrix, ...).
  std::string witness;
};

struct InequalityCheck {
  std::string name;
  /// Whether the inequality's width range contains w (and symmetry holds for the symmetric family).
  bool applicable = false;
  /// Upper bounds cap A (or w); lower bounds floor A.
  bool upper = true;
  /// nullopt for an unbounded or non-representable bound; see bound_approx.
  std::optional<Scalar> bound;
  double bound_approx = 0;
  bool satisfied = true;
  bool tight = false;
  /// bound - value for upper bounds, value - bound for lower bounds.
  std::optional<Scalar> slack;
  double slack_approx = 0;
  std::optional<Certification> certification;
};

struct BoundsReport {
  Scalar w;
  Scalar area;
  bool lattice_free = false;
  /// nullopt when the polygon does not fit the classification.
  std::optional<MaximalClass> maximal_class;
  bool symmetric = false;
  std::vector<InequalityCheck> inequalities;
  /// First certification among the tight inequalities.
  std::optional<Certification> equality_case;

  bool all_satisfied() const;
  const InequalityCheck& find(std::string_view name) const;
};

/// Names of all checked inequalities, general family first.
const std::vector<std::string>& inequality_names();

/// Evaluates every inequality for K and certifies each tight one. Bounds only
/// apply to lattice-free K; for other polygons every entry is inapplicable.
BoundsReport verify_bounds(const Polygon& k);

/// Structural certificate for equality in `which`. Returns nullopt when the
/// inequality is not tight for K and throws CertificationFailed when it is
/// tight but K has none of the characterizing shapes.
std::optional<Certification> equality_case_certify(const Polygon& k, std::string_view which);

enum class FuzzProfile { General, Symmetric, Triangle3 };

std::string_view to_string(FuzzProfile profile);
FuzzProfile parse_fuzz_profile(std::string_view name);

/// Deterministic lattice-free polygon: a random unimodular image of a maximal
/// lattice-free representative, with vertices pulled toward the centroid.
Polygon random_lattice_free(std::uint64_t seed, FuzzProfile profile);

struct FuzzFailure {
  std::uint64_t seed;
  std::string message;
};

struct FuzzSummary {
  std::size_t polygons = 0;
  std::size_t checks = 0;
  std::size_t tight = 0;
  std::vector<FuzzFailure> failures;  // sorted by seed
};

/// Runs verify_bounds on seeds [first, first + count) over `threads` workers.
FuzzSummary run_fuzz(std::uint64_t first, std::size_t count, FuzzProfile profile, unsigned threads = 0);

}  // namespace latgeom

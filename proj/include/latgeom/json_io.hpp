#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "latgeom/bounds.hpp"
#include "latgeom/geom.hpp"
#include "latgeom/triangles.hpp"

namespace latgeom {

using Json = nlohmann::json;

/// Rationals are strings "p/q" (or "p"); quadratics are {"a": "p/q", "b": "r/s", "d": n}.
Json scalar_to_json(const Scalar& s);
/// Also accepts JSON integers and decimal strings.
Scalar scalar_from_json(const Json& j);

/// {"vertices": [[x, y], ...]}
Json polygon_to_json(const Polygon& k);
Polygon polygon_from_json(const Json& j);

/// {"x": [x0, x1, x2], "base": [[px, py], ...]}; the base defaults to the standard cell.
Json params_to_json(const TriangleParams& params);
TriangleParams params_from_json(const Json& j);

Json report_to_json(const BoundsReport& report);

/// Reads and parses a JSON file; throws InvalidInput on I/O or syntax errors.
Json read_json_file(const std::string& path);

}  // namespace latgeom

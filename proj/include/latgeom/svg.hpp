#pragma once

#include <string>

#include "latgeom/geom.hpp"

namespace latgeom {

struct SvgStyle {
  double unit = 40.0;  // pixels per lattice unit
  std::string fill = "#c8c8c8";
  std::string stroke = "#000000";
};

/// SVG 1.1 drawing of K shaded over the integer grid, framed by the bounding
/// box of K widened by one lattice unit on every side.
std::string render_svg(const Polygon& k, const SvgStyle& style = {});

}  // namespace latgeom

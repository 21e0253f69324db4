#include "latgeom/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace latgeom {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Polygon& k, const SvgStyle& style) {
  double xmin = k.vertex(0).x.to_double(), xmax = xmin;
  double ymin = k.vertex(0).y.to_double(), ymax = ymin;
  for (const Point& v : k.vertices()) {
    xmin = std::min(xmin, v.x.to_double());
    xmax = std::max(xmax, v.x.to_double());
    ymin = std::min(ymin, v.y.to_double());
    ymax = std::max(ymax, v.y.to_double());
  }
  long gx0 = static_cast<long>(std::floor(xmin)) - 1, gx1 = static_cast<long>(std::ceil(xmax)) + 1;
  long gy0 = static_cast<long>(std::floor(ymin)) - 1, gy1 = static_cast<long>(std::ceil(ymax)) + 1;
  const double u = style.unit;
  double width = static_cast<double>(gx1 - gx0) * u, height = static_cast<double>(gy1 - gy0) * u;
  // Lattice coordinates to pixels, y axis pointing up.
  auto px = [&](double x) { return (x - static_cast<double>(gx0)) * u; };
  auto py = [&](double y) { return (static_cast<double>(gy1) - y) * u; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
     << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
  os << "  <g stroke=\"#e0e0e0\" stroke-width=\"1\">\n";
  for (long x = gx0; x <= gx1; ++x)
    os << "    <line x1=\"" << num(px(x)) << "\" y1=\"0\" x2=\"" << num(px(x)) << "\" y2=\"" << num(height)
       << "\"/>\n";
  for (long y = gy0; y <= gy1; ++y)
    os << "    <line x1=\"0\" y1=\"" << num(py(y)) << "\" x2=\"" << num(width) << "\" y2=\"" << num(py(y))
       << "\"/>\n";
  os << "  </g>\n";

  os << "  <polygon points=\"";
  for (std::size_t i = 0; i < k.size(); ++i)
    os << (i ? " " : "") << num(px(k.vertex(i).x.to_double())) << ',' << num(py(k.vertex(i).y.to_double()));
  os << "\" fill=\"" << style.fill << "\" stroke=\"" << style.stroke << "\" stroke-width=\"1.5\"/>\n";

  os << "  <g fill=\"#000000\">\n";
  for (long x = gx0; x <= gx1; ++x)
    for (long y = gy0; y <= gy1; ++y)
      os << "    <circle class=\"lattice-point\" cx=\"" << num(px(x)) << "\" cy=\"" << num(py(y))
         << "\" r=\"2.5\"/>\n";
  os << "  </g>\n</svg>\n";
  return os.str();
}

}  // namespace latgeom

#include "latgeom/json_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>

namespace latgeom {

Json scalar_to_json(const Scalar& s) {
  if (s.is_rational()) return to_string(s.a());
  return Json{{"a", to_string(s.a())}, {"b", to_string(s.b())}, {"d", s.d()}};
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
  if (j.is_number_integer()) return Scalar(Rational(Integer(std::to_string(j.get<std::int64_t>()))));
  if (j.is_object()) {
    if (!j.contains("a") || !j.contains("b") || !j.contains("d"))
      throw Error(ErrorCode::InvalidInput, "quadratic number needs fields a, b, d");
    Rational a = scalar_from_json(j.at("a")).rational();
    Rational b = scalar_from_json(j.at("b")).rational();
    if (!j.at("d").is_number_integer()) throw Error(ErrorCode::InvalidInput, "radicand must be an integer");
    std::int64_t d = j.at("d").get<std::int64_t>();
    if (d < 0) throw Error(ErrorCode::InvalidInput, "radicand must be nonnegative");
    return Scalar::quadratic(a, b, Integer(std::to_string(d)));
  }
  throw Error(ErrorCode::InvalidInput, "expected a number string, an integer or a quadratic object, got " + j.dump());
}

Json polygon_to_json(const Polygon& k) {
  Json vertices = Json::array();
  for (const Point& v : k.vertices()) vertices.push_back(Json::array({scalar_to_json(v.x), scalar_to_json(v.y)}));
  return Json{{"vertices", vertices}};
}

Polygon polygon_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.at("vertices").is_array())
    throw Error(ErrorCode::InvalidInput, "polygon needs a \"vertices\" array");
  std::vector<Point> pts;
  for (const Json& v : j.at("vertices")) {
    if (!v.is_array() || v.size() != 2) throw Error(ErrorCode::InvalidInput, "vertex must be a pair [x, y]");
    pts.push_back(Point{scalar_from_json(v[0]), scalar_from_json(v[1])});
  }
  return Polygon(pts);
}

Json params_to_json(const TriangleParams& params) {
  Json x = Json::array();
  for (const Scalar& xi : params.x) x.push_back(scalar_to_json(xi));
  Json base = Json::array();
  for (const LatticePoint& p : params.base) base.push_back(Json::array({p.x, p.y}));
  return Json{{"x", x}, {"base", base}};
}

TriangleParams params_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("x") || !j.at("x").is_array() || j.at("x").size() != 3)
    throw Error(ErrorCode::InvalidInput, "triangle parameters need \"x\": [x0, x1, x2]");
  TriangleParams params;
  for (std::size_t i = 0; i < 3; ++i) params.x[i] = scalar_from_json(j.at("x")[i]);
  if (j.contains("base")) {
    const Json& base = j.at("base");
    if (!base.is_array() || base.size() != 3) throw Error(ErrorCode::InvalidInput, "base needs three points");
    for (std::size_t i = 0; i < 3; ++i) {
      if (!base[i].is_array() || base[i].size() != 2 || !base[i][0].is_number_integer() ||
          !base[i][1].is_number_integer())
        throw Error(ErrorCode::InvalidInput, "base points must be integer pairs");
      params.base[i] = LatticePoint{base[i][0].get<std::int64_t>(), base[i][1].get<std::int64_t>()};
    }
  }
  return params;
}

namespace {

Json approx(double v) {
  if (std::isinf(v)) return "inf";
  return v;
}

}  // namespace

Json report_to_json(const BoundsReport& report) {
  Json out{{"w", scalar_to_json(report.w)},
           {"w_approx", report.w.to_double()},
           {"area", scalar_to_json(report.area)},
           {"area_approx", report.area.to_double()},
           {"lattice_free", report.lattice_free},
           {"class", report.maximal_class ? Json(std::string(to_string(*report.maximal_class))) : Json(nullptr)},
           {"symmetric", report.symmetric},
           {"all_satisfied", report.all_satisfied()}};
  Json list = Json::array();
  for (const InequalityCheck& c : report.inequalities) {
    Json item{{"name", c.name}, {"applicable", c.applicable}};
    if (c.applicable) {
      item["kind"] = c.upper ? "upper" : "lower";
      item["bound"] = c.bound ? scalar_to_json(*c.bound) : Json(nullptr);
      item["bound_approx"] = approx(c.bound_approx);
      item["satisfied"] = c.satisfied;
      item["tight"] = c.tight;
      item["slack"] = c.slack ? scalar_to_json(*c.slack) : Json(nullptr);
      item["slack_approx"] = approx(c.slack_approx);
      if (c.certification) {
        Json cert{{"shape", std::string(to_string(c.certification->shape))}, {"witness", c.certification->witness}};
        if (c.certification->parameter) cert["parameter"] = scalar_to_json(*c.certification->parameter);
        item["certification"] = cert;
      }
    }
    list.push_back(item);
  }
  out["inequalities"] = list;
  out["equality_case"] =
      report.equality_case ? Json(std::string(to_string(report.equality_case->shape))) : Json(nullptr);
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, "malformed JSON in '" + path + "': " + e.what());
  }
}

}  // namespace latgeom

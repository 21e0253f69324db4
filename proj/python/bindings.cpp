#include <string>
#include <vector>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "latgeom/bounds.hpp"
#include "latgeom/classify.hpp"
#include "latgeom/covering.hpp"
#include "latgeom/json_io.hpp"
#include "latgeom/latwidth.hpp"
#include "latgeom/svg.hpp"
#include "latgeom/triangles.hpp"

namespace py = pybind11;
using namespace latgeom;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Scalar parse_scalar(const std::string& text) { return scalar_from_json(Json(text)); }

TriangleParams make_params(const std::vector<Scalar>& x) {
  if (x.size() != 3) throw Error(ErrorCode::InvalidInput, "expected three parameters");
  TriangleParams p;
  for (std::size_t i = 0; i < 3; ++i) p.x[i] = x[i];
  return p;
}

std::vector<std::pair<Scalar, Scalar>> vertex_pairs(const Polygon& k) {
  std::vector<std::pair<Scalar, Scalar>> out;
  for (const Point& v : k.vertices()) out.emplace_back(v.x, v.y);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact lattice-width geometry of planar convex polygons";
  py::register_exception<Error>(m, "LatgeomError", PyExc_ValueError);

  py::class_<Scalar>(m, "Scalar", "Exact number a + b*sqrt(d) with rational a, b")
      .def(py::init<>())
      .def(py::init<long>())
      .def(py::init(&parse_scalar), py::arg("text"), "Parses \"p/q\", \"p\" or a decimal string")
      .def_static("sqrt", [](const Scalar& x) { return Scalar::sqrt(x.rational()); })
      .def_static("quadratic",
                  [](const Scalar& a, const Scalar& b, long d) { return Scalar::quadratic(a.rational(), b.rational(), d); })
      .def_property_readonly("is_rational", &Scalar::is_rational)
      .def("sign", &Scalar::sign)
      .def("to_json", [](const Scalar& s) { return to_python(scalar_to_json(s)); })
      .def("__float__", &Scalar::to_double)
      .def("__str__", &Scalar::to_string)
      .def("__repr__", [](const Scalar& s) { return "Scalar('" + s.to_string() + "')"; })
      .def("__hash__", [](const Scalar& s) { return py::hash(py::str(s.to_string())); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self);
  py::implicitly_convertible<py::int_, Scalar>();
  py::implicitly_convertible<py::str, Scalar>();

  py::class_<Polygon>(m, "Polygon", "Convex hull of finitely many points, stored counter-clockwise")
      .def(py::init([](const std::vector<std::pair<Scalar, Scalar>>& pts) {
             std::vector<Point> points;
             for (const auto& [x, y] : pts) points.push_back({x, y});
             return Polygon(points);
           }),
           py::arg("points"))
      .def_property_readonly("vertices", &vertex_pairs)
      .def("to_json", [](const Polygon& k) { return to_python(polygon_to_json(k)); })
      .def_static("from_json",
                  [](const py::object& obj) {
                    std::string text = py::str(py::module_::import("json").attr("dumps")(obj));
                    return polygon_from_json(Json::parse(text));
                  })
      .def("__len__", &Polygon::size)
      .def(py::self == py::self)
      .def("__repr__", [](const Polygon& k) { return "Polygon(" + polygon_to_json(k)["vertices"].dump() + ")"; });

  m.def("area", &area, py::arg("k"));
  m.def("is_lattice_free", &is_lattice_free, py::arg("k"));
  m.def(
      "lattice_width",
      [](const Polygon& k) {
        LatticeWidth lw = lattice_width(k);
        std::vector<std::pair<std::int64_t, std::int64_t>> dirs;
        for (const Direction& u : lw.minimizers) dirs.emplace_back(u.u1(), u.u2());
        return py::make_tuple(lw.w, dirs);
      },
      py::arg("k"), "Returns (w, minimizing directions)");
  m.def("max_lattice_width", &max_lattice_width);
  m.def(
      "classify_maximal", [](const Polygon& k) { return std::string(to_string(classify_maximal(k))); }, py::arg("k"));
  m.def("mu1", &mu1, py::arg("k"));
  m.def(
      "mu2_approx",
      [](const Polygon& k, const Scalar& eps) {
        Mu2Interval iv = mu2_approx(k, eps.rational());
        return py::make_tuple(Scalar(iv.lo), Scalar(iv.hi));
      },
      py::arg("k"), py::arg("eps") = Scalar(Rational(1, 1000)), "Returns (lo, hi) with hi - lo <= eps");

  m.def(
      "hurkens_triangle", [] { return hurkens_triangle(); });
  m.def(
      "circumscribed_triangle", [](const std::vector<Scalar>& x) { return circumscribed_triangle(make_params(x)); },
      py::arg("x"));
  m.def(
      "tri_width", [](const std::vector<Scalar>& x) { return tri_width_circumscribed(make_params(x)); }, py::arg("x"));
  m.def(
      "tri_area", [](const std::vector<Scalar>& x) { return tri_area_circumscribed(make_params(x)); }, py::arg("x"));

  m.def(
      "construct_extremal",
      [](const std::string& kind, const Scalar& w, const Scalar& s, const Scalar& alpha) {
        ExtremalParams p;
        p.w = w;
        p.s = s;
        p.alpha = alpha;
        return construct_extremal(parse_extremal_kind(kind), p);
      },
      py::arg("kind"), py::arg("w") = Scalar(0), py::arg("s") = Scalar(0), py::arg("alpha") = Scalar(0));
  m.def(
      "verify_bounds", [](const Polygon& k) { return to_python(report_to_json(verify_bounds(k))); }, py::arg("k"),
      "Report as a dict with keys such as \"w\", \"class\", \"inequalities\" and \"all_satisfied\"");
  m.def(
      "random_lattice_free",
      [](std::uint64_t seed, const std::string& profile) { return random_lattice_free(seed, parse_fuzz_profile(profile)); },
      py::arg("seed"), py::arg("profile") = "general");
  m.def(
      "run_fuzz",
      [](std::size_t count, const std::string& profile, std::uint64_t first) {
        FuzzSummary s = run_fuzz(first, count, parse_fuzz_profile(profile));
        py::list failures;
        for (const FuzzFailure& f : s.failures) failures.append(py::make_tuple(f.seed, f.message));
        py::dict out;
        out["polygons"] = s.polygons;
        out["checks"] = s.checks;
        out["tight"] = s.tight;
        out["failures"] = failures;
        return out;
      },
      py::arg("count"), py::arg("profile") = "general", py::arg("first") = 1);
  m.def(
      "render_svg", [](const Polygon& k) { return render_svg(k); }, py::arg("k"));
}

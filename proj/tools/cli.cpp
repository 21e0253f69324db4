#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <regex>

#include <CLI11/CLI11.hpp>

#include "latgeom/bounds.hpp"
#include "latgeom/classify.hpp"
#include "latgeom/covering.hpp"
#include "latgeom/json_io.hpp"
#include "latgeom/latwidth.hpp"
#include "latgeom/svg.hpp"
#include "latgeom/triangles.hpp"

namespace latgeom::cli {

namespace {

std::string approx(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.8g", v);
  return buf;
}

std::string show(const Scalar& s) { return s.to_string() + " ≈ " + approx(s.to_double()); }

std::string show(const Direction& u) { return "(" + std::to_string(u.u1()) + ", " + std::to_string(u.u2()) + ")"; }

/// "p/q", a decimal, "max" (= 1 + 2/sqrt(3)), "b*sqrt(d)" or "a+b*sqrt(d)".
Scalar parse_scalar(const std::string& text) {
  if (text == "max") return max_lattice_width();
  static const std::regex quadratic(R"(^\s*([^*]+?)\s*([+-])\s*([^*+]+?)\s*\*\s*sqrt\((\d+)\)\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, quadratic)) {
    Rational b = parse_rational(m[3].str());
    if (m[2] == "-") b = -b;
    return Scalar::quadratic(parse_rational(m[1].str()), b, Integer(m[4].str()));
  }
  static const std::regex pure(R"(^\s*([^*+]+?)\s*\*\s*sqrt\((\d+)\)\s*$)");
  if (std::regex_match(text, m, pure)) return Scalar::quadratic(0, parse_rational(m[1].str()), Integer(m[2].str()));
  return Scalar(parse_rational(text));
}

LatticeTriangle parse_base(const std::string& text) {
  std::vector<std::int64_t> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      values.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidInput, "base coordinates must be integers: '" + text + "'");
    }
  }
  if (values.size() != 6) throw Error(ErrorCode::InvalidInput, "base needs six comma-separated integers");
  return {LatticePoint{values[0], values[1]}, LatticePoint{values[2], values[3]}, LatticePoint{values[4], values[5]}};
}

Polygon load_polygon(const std::string& path) { return polygon_from_json(read_json_file(path)); }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::InvalidInput, "cannot write '" + path + "'");
  file << text;
}

int cmd_width(const std::string& path, std::ostream& out) {
  LatticeWidth lw = lattice_width(load_polygon(path));
  out << "w = " << show(lw.w) << '\n' << "minimizers:";
  for (const Direction& u : lw.minimizers) out << ' ' << show(u);
  out << '\n';
  return 0;
}

int cmd_area(const std::string& path, std::ostream& out) {
  out << "A = " << show(area(load_polygon(path))) << '\n';
  return 0;
}

int cmd_classify(const std::string& path, std::ostream& out) {
  Polygon k = load_polygon(path);
  out << to_string(classify_maximal(k)) << '\n';
  EdgeLatticeCounts counts = edge_lattice_counts(k);
  out << "edge lattice points (relative interior / closed):";
  for (std::size_t i = 0; i < k.size(); ++i) out << ' ' << counts.relative_interior[i] << '/' << counts.closed[i];
  out << '\n';
  if (auto split = is_split_containing(k))
    out << "contained in split " << split->b << " <= " << split->a1 << "*x + " << split->a2
        << "*y <= " << split->b + 1 << '\n';
  return 0;
}

int cmd_mu(const std::string& path, const std::string& eps_text, std::ostream& out) {
  Polygon k = load_polygon(path);
  out << "mu1 = " << show(mu1(k)) << '\n';
  if (!is_centrally_symmetric(k)) throw Error(ErrorCode::NotSymmetric, "mu2 is only computed for symmetric bodies");
  Polygon centered = translate(k, -vertex_centroid(k));
  Mu2Interval iv = mu2_approx(centered, parse_rational(eps_text));
  out << "mu2 in [" << to_string(iv.lo) << ", " << to_string(iv.hi) << "] ≈ [" << approx(iv.lo.get_d()) << ", "
      << approx(iv.hi.get_d()) << "]\n";
  return 0;
}

int cmd_construct(const std::string& kind_name, const std::string& w, const std::string& s, const std::string& alpha,
                  const std::string& base, const std::string& output, std::ostream& out) {
  ExtremalParams params{parse_scalar(w), parse_scalar(s), parse_scalar(alpha)};
  if (!base.empty()) params.base = parse_base(base);
  Polygon k = construct_extremal(parse_extremal_kind(kind_name), params);
  std::string text = polygon_to_json(k).dump(2) + "\n";
  if (output.empty()) {
    out << text;
  } else {
    write_text(output, text);
    out << "wrote " << output << '\n';
  }
  return 0;
}

int cmd_verify(const std::string& path, bool json, std::ostream& out) {
  BoundsReport r = verify_bounds(load_polygon(path));
  if (json) {
    out << report_to_json(r).dump(2) << '\n';
    return r.all_satisfied() ? 0 : 1;
  }
  out << "w = " << show(r.w) << '\n'
      << "A = " << show(r.area) << '\n'
      << "lattice-free: " << (r.lattice_free ? "yes" : "no") << '\n'
      << "class: " << (r.maximal_class ? std::string(to_string(*r.maximal_class)) : "unclassified") << '\n'
      << "symmetric: " << (r.symmetric ? "yes" : "no") << '\n';
  for (const InequalityCheck& c : r.inequalities) {
    out << "  " << c.name << ": ";
    if (!c.applicable) {
      out << "n/a\n";
      continue;
    }
    out << (c.satisfied ? "ok" : "VIOLATED") << ", " << (c.upper ? "upper" : "lower") << " bound "
        << (c.bound ? show(*c.bound) : approx(c.bound_approx)) << ", slack "
        << (c.slack ? show(*c.slack) : "≈ " + approx(c.slack_approx));
    if (c.tight) out << ", tight";
    if (c.certification) {
      out << ", certified " << to_string(c.certification->shape);
      if (c.certification->parameter) out << " (parameter " << show(*c.certification->parameter) << ")";
    }
    out << '\n';
  }
  return r.all_satisfied() ? 0 : 1;
}

int cmd_fuzz(std::size_t seeds, std::uint64_t first, const std::string& profile_name, unsigned threads,
             std::ostream& out) {
  FuzzProfile profile = parse_fuzz_profile(profile_name);
  FuzzSummary s = run_fuzz(first, seeds, profile, threads);
  out << "profile " << to_string(profile) << ": " << s.polygons << " polygons, " << s.checks << " checks, " << s.tight
      << " tight, " << s.failures.size() << " violations\n";
  for (const FuzzFailure& f : s.failures) out << "  seed " << f.seed << ": " << f.message << '\n';
  return s.failures.empty() ? 0 : 1;
}

int cmd_plot(const std::string& path, const std::string& output, std::ostream& out) {
  write_text(output, render_svg(load_polygon(path)));
  out << "wrote " << output << '\n';
  return 0;
}

int cmd_tri_width(const std::string& path, const std::vector<std::string>& xs, const std::string& base,
                  std::ostream& out) {
  TriangleParams params;
  if (!xs.empty()) {
    if (!path.empty()) throw Error(ErrorCode::InvalidInput, "give either a params file or --params, not both");
    if (xs.size() != 3) throw Error(ErrorCode::InvalidInput, "--params needs exactly three values");
    for (std::size_t i = 0; i < 3; ++i) params.x[i] = parse_scalar(xs[i]);
  } else if (!path.empty()) {
    params = params_from_json(read_json_file(path));
  } else {
    throw Error(ErrorCode::InvalidInput, "tri-width needs a params file or --params x0 x1 x2");
  }
  if (!base.empty()) params.base = parse_base(base);
  params.validate();
  Polygon q = circumscribed_triangle(params);
  out << "freecond: " << to_string(freecond_check(params)) << '\n'
      << "tri-width (parameters) = " << show(tri_width_circumscribed(params)) << '\n'
      << "tri-width (matrix) = " << show(tri_width_matrix(vertex_bary_matrix(params.x), params.base)) << '\n'
      << "lattice width = " << show(lattice_width(q).w) << '\n'
      << "area = " << show(tri_area_circumscribed(params)) << '\n'
      << "triangle = " << polygon_to_json(q).dump() << '\n';
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lattice geometry of planar convex bodies", "latgeom"};
  app.require_subcommand(1);

  std::string file, output, eps = "1/1000", kind, w = "0", s = "0", alpha = "0", base, profile = "general";
  bool json = false;
  std::size_t seeds = 100;
  std::uint64_t first = 1;
  unsigned threads = 0;

  auto* width = app.add_subcommand("width", "Lattice width and minimizing directions");
  width->add_option("polygon", file, "Polygon JSON file")->required();
  auto* area_cmd = app.add_subcommand("area", "Exact area");
  area_cmd->add_option("polygon", file, "Polygon JSON file")->required();
  auto* classify = app.add_subcommand("classify", "Maximal lattice-free class");
  classify->add_option("polygon", file, "Polygon JSON file")->required();
  auto* mu = app.add_subcommand("mu", "Covering minima");
  mu->add_option("polygon", file, "Polygon JSON file")->required();
  mu->add_option("--eps", eps, "Width of the mu2 enclosure (p/q)");
  auto* construct = app.add_subcommand("construct", "Build an extremal body");
  construct->add_option("kind", kind, "GeneralMaxQuad | GeneralMaxTriangle | GeneralMin | SymMaxCross | SymMin | Hurkens")
      ->required();
  construct->add_option("--w", w, "Lattice width (p/q, a+b*sqrt(d) or max)");
  construct->add_option("--s", s, "Crossing position for GeneralMaxQuad");
  construct->add_option("--alpha", alpha, "Shear for SymMin");
  construct->add_option("--base", base, "Fundamental cell x0,y0,x1,y1,x2,y2");
  construct->add_option("-o,--output", output, "Write the polygon JSON here");
  auto* verify = app.add_subcommand("verify", "Check every area/width inequality");
  verify->add_option("polygon", file, "Polygon JSON file")->required();
  verify->add_flag("--json", json, "Emit the report as JSON");
  auto* fuzz = app.add_subcommand("fuzz", "Check the inequalities on random lattice-free polygons");
  fuzz->add_option("--seeds", seeds, "Number of seeds");
  fuzz->add_option("--first", first, "First seed");
  fuzz->add_option("--profile", profile, "general | symmetric | triangle3");
  fuzz->add_option("--threads", threads, "Worker threads (0 = all cores)");
  auto* plot = app.add_subcommand("plot", "Draw the polygon over the integer grid");
  plot->add_option("polygon", file, "Polygon JSON file")->required();
  plot->add_option("-o,--output", output, "SVG file")->required();
  auto* tri = app.add_subcommand("tri-width", "Circumscribed-triangle formulas from parameters");
  std::vector<std::string> tri_x;
  tri->add_option("file", file, "Parameter JSON file {\"x\": [...], \"base\": [...]}");
  tri->add_option("--params", tri_x, "x0 x1 x2 (p/q, a+b*sqrt(d))")->expected(3);
  tri->add_option("--base", base, "Fundamental cell x0,y0,x1,y1,x2,y2");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return 2;
  }

  try {
    if (*width) return cmd_width(file, out);
    if (*area_cmd) return cmd_area(file, out);
    if (*classify) return cmd_classify(file, out);
    if (*mu) return cmd_mu(file, eps, out);
    if (*construct) return cmd_construct(kind, w, s, alpha, base, output, out);
    if (*verify) return cmd_verify(file, json, out);
    if (*fuzz) return cmd_fuzz(seeds, first, profile, threads, out);
    if (*plot) return cmd_plot(file, output, out);
    if (*tri) return cmd_tri_width(file, tri_x, base, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace latgeom::cli

#include "latgeom/bounds.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <limits>
#include <mutex>
#include <random>
#include <thread>

#include "latgeom/covering.hpp"
#include "latgeom/latwidth.hpp"

namespace latgeom {

namespace {

const Scalar kOne(1);
const Scalar kTwo(2);
const Scalar kHalf(Rational(1, 2));

std::int64_t to_int64(const Scalar& s) {
  const Integer& n = s.rational().get_num();
  if (!n.fits_slong_p()) throw Error(ErrorCode::InvalidInput, "integer out of 64-bit range");
  return n.get_si();
}

bool in_open_closed(const Scalar& v, const Scalar& lo, const Scalar& hi) { return lo < v && v <= hi; }

std::optional<Scalar> try_exact(auto&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::MixedRadicand || e.code() == ErrorCode::IrrationalInput) return std::nullopt;
    throw;
  }
}

// Complement n of a primitive integer vector a with det(a, n) = 1.
Point complement(const Point& a) {
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.x.rational().get_num_mpz_t(),
             a.y.rational().get_num_mpz_t());
  return {Scalar(Rational(-t)), Scalar(Rational(s))};
}

bool is_unit(const Scalar& s) { return s == kOne || s == -kOne; }

std::string segment_string(const Point& p, const Point& q) { return "[" + to_string(p) + ", " + to_string(q) + "]"; }

std::string matrix_string(const IntMatrix2& m) {
  return "[[" + std::to_string(m.a11) + ", " + std::to_string(m.a12) + "], [" + std::to_string(m.a21) + ", " +
         std::to_string(m.a22) + "]]";
}

// Splits are certified elsewhere; here only bounded equality shapes matter.
std::optional<Certification> certify_crossing_segments(const Polygon& k, const Scalar& w) {
  if (!in_open_closed(w, kOne, kTwo)) return std::nullopt;
  const Scalar ell = w / (w - kOne);
  const std::array<std::pair<Scalar, Scalar>, 2> lengths{{{w, ell}, {ell, w}}};

  if (k.size() == 4) {
    Point d1 = k.vertex(2) - k.vertex(0), d2 = k.vertex(3) - k.vertex(1);
    for (std::size_t choice = 0; choice < 2; ++choice) {
      const auto& [la, lb] = lengths[choice];
      Point a = (kOne / la) * d1, b = (kOne / lb) * d2;
      if (!is_lattice_point(a) || !is_lattice_point(b) || !is_unit(cross(a, b))) continue;
      std::string first = segment_string(k.vertex(0), k.vertex(2)), second = segment_string(k.vertex(1), k.vertex(3));
      if (choice == 1) std::swap(first, second);
      return Certification{EqualityShape::CrossingSegments, std::nullopt, "I1 = " + first + ", I2 = " + second};
    }
    return std::nullopt;
  }
  if (k.size() != 3) return std::nullopt;

  // One segment is an edge; the other runs from the opposite vertex to a point of that edge.
  for (std::size_t i = 0; i < 3; ++i) {
    const Point& start = k.vertex(i);
    const Point& apex = k.vertex(i + 2);
    Point e = k.edge(i);
    for (std::size_t choice = 0; choice < 2; ++choice) {
      const auto& [l1, l2] = lengths[choice];
      Point a = (kOne / l1) * e;
      if (!is_lattice_point(a)) continue;
      Point b0 = (kOne / l2) * (start - apex);
      if (!is_unit(cross(a, b0))) continue;
      Scalar c1 = cross(b0, complement(a));
      Scalar mu = Scalar(Rational(c1.ceil())) - c1;
      if (l1 / l2 < mu) continue;
      Point foot = start + (mu * l2 / l1) * e;
      std::string edge = segment_string(start, k.vertex(i + 1)), cevian = segment_string(apex, foot);
      if (choice == 1) std::swap(edge, cevian);
      return Certification{EqualityShape::CrossingSegments, std::nullopt, "I1 = " + edge + ", I2 = " + cevian};
    }
  }
  return std::nullopt;
}

std::optional<Certification> certify_equal_parameter_triangle(const Polygon& k, const Scalar& w) {
  if (k.size() != 3 || !(kTwo < w)) return std::nullopt;
  std::optional<Scalar> position;
  std::string points;
  for (std::size_t i = 0; i < 3; ++i) {
    const Point& from = k.vertex(i + 1);
    const Point& to = k.vertex(i + 2);
    std::vector<LatticePoint> inner;
    for (const LatticePoint& lp : edge_lattice_points(k, i + 1)) {
      Point p = lp.to_point();
      if (!(p == from) && !(p == to)) inner.push_back(lp);
    }
    if (inner.size() != 1) return std::nullopt;
    Point p = inner.front().to_point();
    Point e = to - from;
    Scalar t = dot(p - from, e) / dot(e, e);
    if (position && !(*position == t)) return std::nullopt;
    position = t;
    points += (i ? ", " : "") + to_string(p);
  }
  const Scalar three(3), six(6);
  for (const Scalar& lambda : {kOne - *position, *position}) {
    Scalar residual = three * w * lambda * lambda - (three * w + kOne) * lambda + w;
    if (residual.is_zero() && !((three * w + kOne) / (six * w) < lambda))
      return Certification{EqualityShape::EqualParameterTriangle, lambda, "edge points " + points};
  }
  return std::nullopt;
}

struct ScalarMatrix {
  Scalar m11, m12, m21, m22;
  Point apply(const Point& p) const { return {m11 * p.x + m12 * p.y, m21 * p.x + m22 * p.y}; }
};

std::optional<Certification> certify_standard_triangle(const Polygon& k, const Scalar& w) {
  if (k.size() != 3 || kTwo < w) return std::nullopt;
  const Polygon standard{Point{1, 0}, Point{0, 1}, Point{-1, -1}};
  Polygon scaled = scale(k, kTwo / w);
  Point e0 = scaled.edge(0), e1 = scaled.edge(1);
  Scalar det_e = cross(e0, e1);
  // Inverse of the column matrix [e0 e1].
  ScalarMatrix inverse{e1.y / det_e, -e1.x / det_e, -e0.y / det_e, e0.x / det_e};

  std::vector<Point> targets;
  for (std::size_t i = 0; i < 3; ++i) {
    targets.push_back(standard.edge(i));
    targets.push_back(-standard.edge(i));
  }
  for (const Point& g0 : targets) {
    for (const Point& g1 : targets) {
      if (cross(g0, g1).is_zero()) continue;
      ScalarMatrix m{g0.x * inverse.m11 + g1.x * inverse.m21, g0.x * inverse.m12 + g1.x * inverse.m22,
                     g0.y * inverse.m11 + g1.y * inverse.m21, g0.y * inverse.m12 + g1.y * inverse.m22};
      if (!m.m11.is_integer() || !m.m12.is_integer() || !m.m21.is_integer() || !m.m22.is_integer()) continue;
      IntMatrix2 im{to_int64(m.m11), to_int64(m.m12), to_int64(m.m21), to_int64(m.m22)};
      if (im.det() != 1 && im.det() != -1) continue;
      std::vector<Point> image;
      for (const Point& v : scaled.vertices()) image.push_back(im.apply(v));
      Polygon mapped(image);
      if (translate(mapped, standard.vertex(0) - mapped.vertex(0)) == standard)
        return Certification{EqualityShape::StandardTriangle, std::nullopt, "M = " + matrix_string(im)};
    }
  }
  return std::nullopt;
}

std::optional<Certification> certify_centered_cross(const Polygon& k, const Scalar& l1, const Scalar& l2,
                                                    EqualityShape shape) {
  if (k.size() != 4 || !is_centrally_symmetric(k)) return std::nullopt;
  Point c = vertex_centroid(k);
  Point u1 = k.vertex(0) - c, u2 = k.vertex(1) - c;
  for (const auto& [la, lb] : {std::pair{l1, l2}, std::pair{l2, l1}}) {
    Point a = (kTwo / la) * u1, b = (kTwo / lb) * u2;
    if (!is_lattice_point(a) || !is_lattice_point(b) || !is_unit(cross(a, b))) continue;
    if (!is_lattice_point(c - kHalf * (a + b))) continue;
    return Certification{shape, std::nullopt,
                         "center " + to_string(c) + ", half-diagonals " + to_string(u1) + ", " + to_string(u2)};
  }
  return std::nullopt;
}

std::optional<Certification> certify_diamond_family(const Polygon& k, const Scalar& w) {
  if (!is_centrally_symmetric(k) || kTwo < w) return std::nullopt;
  Point c = vertex_centroid(k);
  Polygon tile = scale(polar(difference_body(k)), w * kHalf);
  ParallelogramForm form;
  try {
    form = parallelogram_normal_form(tile);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotTilingParallelogram) return std::nullopt;
    throw;
  }
  if (max(kOne + form.alpha, kTwo - form.alpha) < w) return std::nullopt;
  IntMatrix2 transpose{form.m.a11, form.m.a21, form.m.a12, form.m.a22};
  Polygon model = scale(unimodular_apply(diamond(form.alpha), transpose), w * kHalf);
  if (!(translate(k, -c) == model)) return std::nullopt;
  return Certification{EqualityShape::DiamondFamily, form.alpha,
                       "M = " + matrix_string(transpose) + ", center " + to_string(c)};
}

std::optional<Certification> certify(const Polygon& k, std::string_view which, const Scalar& w) {
  if (which == "width_upper" || which == "area_upper_triangle") return certify_equal_parameter_triangle(k, w);
  if (which == "area_upper_split") return certify_crossing_segments(k, w);
  if (which == "area_lower") return certify_standard_triangle(k, w);
  if (which == "sym_width_upper") return certify_centered_cross(k, kTwo, kTwo, EqualityShape::UnitDiamond);
  if (which == "sym_area_upper") {
    if (!in_open_closed(w, kOne, kTwo)) return std::nullopt;
    return certify_centered_cross(k, w, w / (w - kOne), EqualityShape::CrossingDiagonals);
  }
  if (which == "sym_area_lower") return certify_diamond_family(k, w);
  return std::nullopt;
}

void set_exact(InequalityCheck& check, const Scalar& bound, const Scalar& value) {
  check.bound = bound;
  check.bound_approx = bound.to_double();
  check.satisfied = check.upper ? !(bound < value) : !(value < bound);
  check.tight = compare(bound, value) == 0;
  check.slack = try_exact([&] { return check.upper ? bound - value : value - bound; });
  check.slack_approx = check.upper ? bound.to_double() - value.to_double() : value.to_double() - bound.to_double();
  if (check.tight) check.slack_approx = 0;
}

void set_unbounded(InequalityCheck& check) {
  check.bound.reset();
  check.bound_approx = std::numeric_limits<double>::infinity();
  check.slack_approx = std::numeric_limits<double>::infinity();
}

// A <= 3w^2 / (3w + 1 - sqrt(r)) with r = 1 + 6w - 3w^2, decided without the nested radical.
void set_triangle_bound(InequalityCheck& check, const Scalar& w, const Scalar& a) {
  const Scalar three(3), six(6);
  Scalar r = kOne + six * w - three * w * w;
  std::optional<Scalar> bound = try_exact([&] { return *area_upper_general(w); });
  if (bound) {
    set_exact(check, *bound, a);
    return;
  }
  Scalar lhs = a * (three * w + kOne) - three * w * w;
  Scalar rhs_sq = a * a * r;
  check.satisfied = lhs.sign() <= 0 || !(rhs_sq < lhs * lhs);
  check.tight = lhs.sign() >= 0 && lhs * lhs == rhs_sq;
  double wd = w.to_double();
  check.bound_approx = 3 * wd * wd / (3 * wd + 1 - std::sqrt(std::max(0.0, r.to_double())));
  check.slack_approx = check.tight ? 0 : check.bound_approx - a.to_double();
}

InequalityCheck evaluate(std::string_view name, const Scalar& w, const Scalar& a, bool lattice_free, bool symmetric) {
  InequalityCheck check;
  check.name = std::string(name);
  const Scalar w0 = max_lattice_width();
  bool sym = lattice_free && symmetric;
  if (name == "width_upper") {
    check.applicable = lattice_free;
    if (check.applicable) set_exact(check, w0, w);
  } else if (name == "area_unbounded") {
    check.applicable = lattice_free && !(kOne < w);
    if (check.applicable) set_unbounded(check);
  } else if (name == "area_upper_split") {
    check.applicable = lattice_free && in_open_closed(w, kOne, kTwo);
    if (check.applicable) set_exact(check, w * w / (kTwo * (w - kOne)), a);
  } else if (name == "area_upper_triangle") {
    check.applicable = lattice_free && in_open_closed(w, kTwo, w0);
    if (check.applicable) set_triangle_bound(check, w, a);
  } else if (name == "area_lower") {
    check.applicable = lattice_free && !(w0 < w);
    check.upper = false;
    if (check.applicable) set_exact(check, area_lower_general(w), a);
  } else if (name == "sym_width_upper") {
    check.applicable = sym;
    if (check.applicable) set_exact(check, kTwo, w);
  } else if (name == "sym_area_unbounded") {
    check.applicable = sym && !(kOne < w);
    if (check.applicable) set_unbounded(check);
  } else if (name == "sym_area_upper") {
    check.applicable = sym && in_open_closed(w, kOne, kTwo);
    if (check.applicable) set_exact(check, w * w / (kTwo * (w - kOne)), a);
  } else if (name == "sym_area_lower") {
    check.applicable = sym && !(kTwo < w);
    check.upper = false;
    if (check.applicable) set_exact(check, w * w * kHalf, a);
  } else {
    throw Error(ErrorCode::InvalidInput, "unknown inequality '" + std::string(name) + "'");
  }
  return check;
}

struct Facts {
  Scalar w;
  Scalar area;
  bool lattice_free;
  bool symmetric;
};

Facts facts_of(const Polygon& k) {
  return {lattice_width(k).w, area(k), is_lattice_free(k), is_centrally_symmetric(k)};
}

std::optional<Certification> certify_or_throw(const Polygon& k, const InequalityCheck& check, const Scalar& w) {
  if (!check.applicable || !check.tight) return std::nullopt;
  std::optional<Certification> cert = certify(k, check.name, w);
  if (!cert)
    throw Error(ErrorCode::CertificationFailed,
                "equality in " + check.name + " without a characterizing shape for " + std::to_string(k.size()) + "-gon");
  return cert;
}

}  // namespace

Scalar max_lattice_width() { return Scalar::quadratic(1, Rational(2, 3), 3); }

std::optional<Scalar> area_upper_general(const Scalar& w) {
  if (w.sign() <= 0 || max_lattice_width() < w)
    throw Error(ErrorCode::WidthOutOfRange, "lattice width " + w.to_string() + " outside (0, 1 + 2/sqrt(3)]");
  if (!(kOne < w)) return std::nullopt;
  if (!(kTwo < w)) return w * w / (kTwo * (w - kOne));
  const Scalar three(3), six(6);
  Scalar r = kOne + six * w - three * w * w;
  if (!r.is_rational()) throw Error(ErrorCode::IrrationalInput, "bound needs a nested radical");
  return three * w * w / (three * w + kOne - Scalar::sqrt(r.rational()));
}

Scalar area_lower_general(const Scalar& w) {
  if (w.sign() <= 0) throw Error(ErrorCode::WidthOutOfRange, "lattice width must be positive");
  return Scalar(Rational(3, 8)) * w * w;
}

AreaRange area_bounds_symmetric(const Scalar& w) {
  if (w.sign() <= 0 || kTwo < w)
    throw Error(ErrorCode::WidthOutOfRange, "symmetric lattice width " + w.to_string() + " outside (0, 2]");
  AreaRange out{std::nullopt, w * w * kHalf};
  if (kOne < w) out.upper = w * w / (kTwo * (w - kOne));
  return out;
}

AreaRange corollary_bounds_mu(const Scalar& mu1, const Scalar& mu2, bool symmetric) {
  Scalar limit = symmetric ? kTwo : max_lattice_width();
  if (mu1.sign() <= 0 || mu2 < mu1 || compare(limit * mu1, mu2) < 0)
    throw Error(ErrorCode::RatioOutOfRange, "covering minima " + mu1.to_string() + ", " + mu2.to_string() +
                                                " violate 0 < mu1 <= mu2 <= c mu1");
  AreaRange out;
  out.lower = symmetric ? kOne / (kTwo * mu1 * mu1) : Scalar(3) / (Scalar(8) * mu1 * mu1);
  if (mu1 == mu2) return out;
  if (!(kTwo * mu1 < mu2)) {
    out.upper = kOne / (kTwo * mu1 * (mu2 - mu1));
    return out;
  }
  const Scalar three(3), six(6);
  Scalar r = mu1 * mu1 + six * mu1 * mu2 - three * mu2 * mu2;
  if (!r.is_rational()) throw Error(ErrorCode::IrrationalInput, "bound needs a nested radical");
  out.upper = three / (mu1 * (three * mu2 + mu1 - Scalar::sqrt(r.rational())));
  return out;
}

std::string_view to_string(ExtremalKind kind) {
  switch (kind) {
    case ExtremalKind::GeneralMaxQuad: return "GeneralMaxQuad";
    case ExtremalKind::GeneralMaxTriangle: return "GeneralMaxTriangle";
    case ExtremalKind::GeneralMin: return "GeneralMin";
    case ExtremalKind::SymMaxCross: return "SymMaxCross";
    case ExtremalKind::SymMin: return "SymMin";
    case ExtremalKind::Hurkens: return "Hurkens";
  }
  return "Unknown";
}

ExtremalKind parse_extremal_kind(std::string_view name) {
  for (ExtremalKind kind : {ExtremalKind::GeneralMaxQuad, ExtremalKind::GeneralMaxTriangle, ExtremalKind::GeneralMin,
                            ExtremalKind::SymMaxCross, ExtremalKind::SymMin, ExtremalKind::Hurkens})
    if (std::ranges::equal(to_string(kind), name, [](char a, char b) { return std::tolower(a) == std::tolower(b); }))
      return kind;
  throw Error(ErrorCode::InvalidInput, "unknown extremal kind '" + std::string(name) + "'");
}

std::string_view target_inequality(ExtremalKind kind) {
  switch (kind) {
    case ExtremalKind::GeneralMaxQuad: return "area_upper_split";
    case ExtremalKind::GeneralMaxTriangle: return "area_upper_triangle";
    case ExtremalKind::GeneralMin: return "area_lower";
    case ExtremalKind::SymMaxCross: return "sym_area_upper";
    case ExtremalKind::SymMin: return "sym_area_lower";
    case ExtremalKind::Hurkens: return "width_upper";
  }
  return "";
}

Polygon construct_extremal(ExtremalKind kind, const ExtremalParams& params) {
  const Scalar& w = params.w;
  auto out_of_range = [&](const std::string& what) {
    return Error(ErrorCode::ParamOutOfRange, std::string(to_string(kind)) + ": " + what);
  };
  switch (kind) {
    case ExtremalKind::GeneralMaxQuad: {
      const Scalar& s = params.s;
      if (!in_open_closed(w, kOne, kTwo)) throw out_of_range("w must lie in (1, 2]");
      if (s.sign() < 0 || kOne < s) throw out_of_range("s must lie in [0, 1]");
      Scalar wm = w - kOne;
      return Polygon{Point{-wm * s, s}, Point{kOne + wm * (kOne - s), s}, Point{s, -s / wm},
                     Point{s, kOne + (kOne - s) / wm}};
    }
    case ExtremalKind::GeneralMaxTriangle: {
      if (!in_open_closed(w, kTwo, max_lattice_width())) throw out_of_range("w must lie in (2, 1 + 2/sqrt(3)]");
      const Scalar three(3), six(6);
      Scalar r = kOne + six * w - three * w * w;
      if (!r.is_rational()) throw Error(ErrorCode::IrrationalInput, "parameter needs a nested radical");
      Scalar lambda = (three * w + kOne - Scalar::sqrt(r.rational())) / (six * w);
      return circumscribed_triangle(TriangleParams{{lambda, lambda, lambda}, params.base});
    }
    case ExtremalKind::GeneralMin: {
      if (w.sign() <= 0 || kTwo < w) throw out_of_range("w must lie in (0, 2]");
      Polygon base{Point{1, 0}, Point{0, 1}, Point{-1, -1}};
      return translate(scale(base, w * kHalf), Point{Rational(2, 3), Rational(1, 3)});
    }
    case ExtremalKind::SymMaxCross: {
      if (!in_open_closed(w, kOne, kTwo)) throw out_of_range("w must lie in (1, 2]");
      Scalar h = w * kHalf, v = w / (kTwo * (w - kOne));
      Point c{kHalf, kHalf};
      return Polygon{c + Point{h, 0}, c - Point{h, 0}, c + Point{0, v}, c - Point{0, v}};
    }
    case ExtremalKind::SymMin: {
      const Scalar& alpha = params.alpha;
      if (w.sign() <= 0 || kTwo < w) throw out_of_range("w must lie in (0, 2]");
      if (alpha.sign() < 0 || !(alpha < kOne)) throw out_of_range("alpha must lie in [0, 1)");
      if (max(kOne + alpha, kTwo - alpha) < w) throw out_of_range("needs max{1 + alpha, 2 - alpha} >= w");
      return translate(scale(diamond(alpha), w * kHalf), diamond_deep_point(alpha));
    }
    case ExtremalKind::Hurkens:
      if (!is_fundamental(params.base)) throw out_of_range("base triangle is not a fundamental cell");
      return hurkens_triangle(params.base);
  }
  throw Error(ErrorCode::InvalidInput, "unknown extremal kind");
}

std::string_view to_string(EqualityShape shape) {
  switch (shape) {
    case EqualityShape::CrossingSegments: return "CrossingSegments";
    case EqualityShape::EqualParameterTriangle: return "EqualParameterTriangle";
    case EqualityShape::StandardTriangle: return "StandardTriangle";
    case EqualityShape::UnitDiamond: return "UnitDiamond";
    case EqualityShape::CrossingDiagonals: return "CrossingDiagonals";
    case EqualityShape::DiamondFamily: return "DiamondFamily";
  }
  return "Unknown";
}

const std::vector<std::string>& inequality_names() {
  static const std::vector<std::string> names{"width_upper",     "area_unbounded",     "area_upper_split",
                                              "area_upper_triangle", "area_lower",   "sym_width_upper",
                                              "sym_area_unbounded",  "sym_area_upper", "sym_area_lower"};
  return names;
}

bool BoundsReport::all_satisfied() const {
  return std::all_of(inequalities.begin(), inequalities.end(),
                     [](const InequalityCheck& c) { return !c.applicable || c.satisfied; });
}

const InequalityCheck& BoundsReport::find(std::string_view name) const {
  for (const InequalityCheck& c : inequalities)
    if (c.name == name) return c;
  throw Error(ErrorCode::InvalidInput, "unknown inequality '" + std::string(name) + "'");
}

BoundsReport verify_bounds(const Polygon& k) {
  Facts f = facts_of(k);
  BoundsReport report;
  report.w = f.w;
  report.area = f.area;
  report.lattice_free = f.lattice_free;
  report.symmetric = f.symmetric;
  try {
    report.maximal_class = classify_maximal(k);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotTriangleOrQuad) throw;
  }
  for (const std::string& name : inequality_names()) {
    InequalityCheck check = evaluate(name, f.w, f.area, f.lattice_free, f.symmetric);
    check.certification = certify_or_throw(k, check, f.w);
    if (check.certification && !report.equality_case) report.equality_case = check.certification;
    report.inequalities.push_back(std::move(check));
  }
  return report;
}

std::optional<Certification> equality_case_certify(const Polygon& k, std::string_view which) {
  Facts f = facts_of(k);
  InequalityCheck check = evaluate(which, f.w, f.area, f.lattice_free, f.symmetric);
  return certify_or_throw(k, check, f.w);
}

std::string_view to_string(FuzzProfile profile) {
  switch (profile) {
    case FuzzProfile::General: return "general";
    case FuzzProfile::Symmetric: return "symmetric";
    case FuzzProfile::Triangle3: return "triangle3";
  }
  return "unknown";
}

FuzzProfile parse_fuzz_profile(std::string_view name) {
  for (FuzzProfile p : {FuzzProfile::General, FuzzProfile::Symmetric, FuzzProfile::Triangle3})
    if (to_string(p) == name) return p;
  throw Error(ErrorCode::InvalidInput, "unknown fuzz profile '" + std::string(name) + "'");
}

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed * 0x9E3779B97F4A7C15ULL + 0x632BE59BD9B4E019ULL) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin(std::int64_t one_in = 2) { return integer(0, one_in - 1) == 0; }

  /// Rational in [lo, hi] with denominator up to max_den.
  Rational closed(const Rational& lo, const Rational& hi, std::int64_t max_den) {
    std::int64_t den = integer(1, max_den);
    std::int64_t a = ceil_div(lo * den).get_si(), b = floor_div(hi * den).get_si();
    Rational r(integer(a, b), den);
    r.canonicalize();
    return r;
  }

  /// Rational in (lo, hi); the denominator grows until the interval holds one.
  Rational open(const Rational& lo, const Rational& hi, std::int64_t max_den) {
    for (std::int64_t den = integer(2, max_den);; ++den) {
      std::int64_t a = floor_div(lo * den).get_si() + 1, b = ceil_div(hi * den).get_si() - 1;
      if (a > b) continue;
      Rational r(integer(a, b), den);
      r.canonicalize();
      return r;
    }
  }

  Rational half_open(const Rational& lo, const Rational& hi, std::int64_t max_den) {
    for (std::int64_t den = integer(2, max_den);; ++den) {
      std::int64_t a = floor_div(lo * den).get_si() + 1, b = floor_div(hi * den).get_si();
      if (a > b) continue;
      Rational r(integer(a, b), den);
      r.canonicalize();
      return r;
    }
  }

 private:
  std::mt19937_64 engine_;
};

IntMatrix2 random_unimodular(Rng& rng) {
  IntMatrix2 m;
  std::int64_t steps = rng.integer(0, 3);
  for (std::int64_t i = 0; i < steps; ++i) {
    std::int64_t k = rng.integer(-2, 2);
    switch (rng.integer(0, 3)) {
      case 0: m = IntMatrix2{1, k, 0, 1} * m; break;
      case 1: m = IntMatrix2{1, 0, k, 1} * m; break;
      case 2: m = IntMatrix2{0, 1, 1, 0} * m; break;
      default: m = IntMatrix2{-1, 0, 0, 1} * m; break;
    }
  }
  return m;
}

Polygon place(const Polygon& k, Rng& rng) {
  LatticePoint t{rng.integer(-3, 3), rng.integer(-3, 3)};
  return unimodular_apply(k, random_unimodular(rng), t);
}

Polygon type2_triangle(Rng& rng) {
  Scalar v1(rng.open(0, 1, 8)), v2(Rational(1) + rng.half_open(0, 1, 8));
  Scalar drop = v2 - kOne;
  return Polygon{Point{v1, v2}, Point{-v1 / drop, 0}, Point{kOne + (kOne - v1) / drop, 0}};
}

Polygon type3_triangle(Rng& rng) {
  bool cond_a = rng.coin();
  std::array<Scalar, 3> x;
  for (Scalar& xi : x) xi = cond_a ? Scalar(rng.open(Rational(1, 2), 1, 8)) : Scalar(rng.open(0, Rational(1, 2), 8));
  return circumscribed_triangle(TriangleParams{x, standard_base()});
}

Polygon split_piece(Rng& rng) {
  Rational a = rng.closed(-3, 3, 4), b = rng.closed(-3, 3, 4), c = rng.closed(-3, 3, 4), d = rng.closed(-3, 3, 4);
  if (a == b) b += 1;
  return Polygon{Point{a, 0}, Point{b, 0}, Point{c, 1}, Point{d, 1}};
}

Polygon general_representative(Rng& rng) {
  switch (rng.integer(0, 6)) {
    case 0: return Polygon{Point{0, 0}, Point{2, 0}, Point{0, 2}};
    case 1: return type2_triangle(rng);
    case 2: {
      ExtremalParams p{Scalar(Rational(1) + rng.half_open(0, 1, 8)), Scalar(rng.closed(0, 1, 8)), Scalar(0)};
      return construct_extremal(ExtremalKind::GeneralMaxQuad, p);
    }
    case 3: {
      ExtremalParams p{Scalar(Rational(1) + rng.half_open(0, 1, 8)), Scalar(0), Scalar(0)};
      return construct_extremal(ExtremalKind::SymMaxCross, p);
    }
    case 4: return rng.coin(6) ? hurkens_triangle() : type3_triangle(rng);
    case 5: return split_piece(rng);
    default: {
      ExtremalParams p{Scalar(rng.half_open(0, 2, 8)), Scalar(0), Scalar(0)};
      return construct_extremal(ExtremalKind::GeneralMin, p);
    }
  }
}

Polygon symmetric_representative(Rng& rng) {
  switch (rng.integer(0, 3)) {
    case 0: {
      ExtremalParams p{Scalar(Rational(1) + rng.half_open(0, 1, 8)), Scalar(0), Scalar(0)};
      return construct_extremal(ExtremalKind::SymMaxCross, p);
    }
    case 1: {
      Rational alpha = rng.closed(0, Rational(7, 8), 8);
      Rational cap = std::min(Rational(2), std::max<Rational>(Rational(1) + alpha, Rational(2) - alpha));
      ExtremalParams p{Scalar(rng.half_open(0, cap, 8)), Scalar(0), Scalar(alpha)};
      return construct_extremal(ExtremalKind::SymMin, p);
    }
    case 2: return construct_extremal(ExtremalKind::SymMaxCross, ExtremalParams{kTwo, Scalar(0), Scalar(0)});
    default: {
      Point c{Scalar(rng.closed(-2, 2, 4)), kHalf};
      Scalar a(rng.closed(-2, 2, 4)), b(rng.closed(-2, 2, 4)), e(rng.closed(Rational(1, 2), 3, 4));
      if (a == b) b += kOne;
      std::vector<Point> pts{c + Point{a, kHalf}, c - Point{a, kHalf}, c + Point{b, -kHalf},
                             c - Point{b, -kHalf}, c + Point{e, 0},    c - Point{e, 0}};
      return Polygon(pts);
    }
  }
}

Polygon shrink(const Polygon& k, Rng& rng, bool symmetric) {
  Point c = vertex_centroid(k);
  std::size_t n = k.size();
  std::vector<Rational> factors(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (symmetric && i >= n / 2) {
      factors[i] = factors[i - n / 2];
    } else {
      factors[i] = rng.coin(4) ? Rational(1) : rng.closed(Rational(1, 2), 1, 16);
    }
  }
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(c + Scalar(factors[i]) * (k.vertex(i) - c));
  return Polygon(pts);
}

}  // namespace

Polygon random_lattice_free(std::uint64_t seed, FuzzProfile profile) {
  Rng rng(seed);
  Polygon rep = profile == FuzzProfile::General     ? general_representative(rng)
                : profile == FuzzProfile::Symmetric ? symmetric_representative(rng)
                                                    : type3_triangle(rng);
  Polygon out = shrink(place(rep, rng), rng, profile == FuzzProfile::Symmetric);
  if (!is_lattice_free(out))
    throw Error(ErrorCode::InvalidInput, "generator produced interior lattice points for seed " + std::to_string(seed));
  return out;
}

FuzzSummary run_fuzz(std::uint64_t first, std::size_t count, FuzzProfile profile, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  FuzzSummary summary;
  std::mutex lock;

  auto work = [&](unsigned worker) {
    FuzzSummary local;
    for (std::size_t i = worker; i < count; i += threads) {
      std::uint64_t seed = first + i;
      ++local.polygons;
      try {
        BoundsReport report = verify_bounds(random_lattice_free(seed, profile));
        std::string violated;
        for (const InequalityCheck& c : report.inequalities) {
          if (!c.applicable) continue;
          ++local.checks;
          if (c.tight) ++local.tight;
          if (!c.satisfied) violated += (violated.empty() ? "" : ", ") + c.name;
        }
        if (!report.lattice_free) violated += (violated.empty() ? "" : ", ") + std::string("lattice_free");
        if (profile == FuzzProfile::Symmetric && !report.symmetric)
          violated += (violated.empty() ? "" : ", ") + std::string("symmetry");
        if (!violated.empty()) local.failures.push_back({seed, "violated: " + violated});
      } catch (const std::exception& e) {
        local.failures.push_back({seed, e.what()});
      }
    }
    std::lock_guard guard(lock);
    summary.polygons += local.polygons;
    summary.checks += local.checks;
    summary.tight += local.tight;
    summary.failures.insert(summary.failures.end(), local.failures.begin(), local.failures.end());
  };

  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
  work(0);
  for (std::thread& t : pool) t.join();
  std::sort(summary.failures.begin(), summary.failures.end(),
            [](const FuzzFailure& a, const FuzzFailure& b) { return a.seed < b.seed; });
  return summary;
}

}  // namespace latgeom

#include <gtest/gtest.h>

#include "builders.hpp"
#include "latgeom/classify.hpp"
#include "latgeom/latwidth.hpp"
#include "latgeom/triangles.hpp"
#include "oracles.hpp"

using namespace latgeom;
using testing_util::hurkens_width;
using testing_util::poly;
using testing_util::pt;
using testing_util::s;

namespace {

TriangleParams params(const Scalar& a, const Scalar& b, const Scalar& c, LatticeTriangle base = standard_base()) {
  TriangleParams p;
  p.x = {a, b, c};
  p.base = base;
  return p;
}

Scalar inv_root3() { return Scalar(1) / Scalar::sqrt(3); }

LatticeTriangle random_base(std::uint64_t seed) {
  IntMatrix2 m = oracle::random_unimodular(seed, 2);
  oracle::Gen g(seed + 99);
  LatticePoint t{g.integer(-4, 4), g.integer(-4, 4)};
  LatticeTriangle base;
  for (std::size_t i = 0; i < 3; ++i) {
    Point img = m.apply(standard_base()[i].to_point());
    base[i] = {img.x.floor().get_si() + t.x, img.y.floor().get_si() + t.y};
  }
  return base;
}

TriangleParams random_params(std::uint64_t seed) {
  oracle::Gen g(seed);
  TriangleParams p;
  for (auto& xi : p.x) {
    long den = g.integer(2, 15);
    xi = Scalar(Rational(g.integer(1, den - 1), den));
  }
  p.base = random_base(seed);
  return p;
}

BaryMatrix bary_of(const Polygon& q, const LatticeTriangle& base) {
  BaryMatrix b;
  for (std::size_t j = 0; j < 3; ++j) {
    auto row = bary_coords(q.vertex(j), base[0].to_point(), base[1].to_point(), base[2].to_point());
    for (std::size_t k = 0; k < 3; ++k) b.rows[j][k] = row[k];
  }
  return b;
}

}  // namespace

TEST(BaryCoords, Examples) {
  Point q0 = pt("0", "0"), q1 = pt("3", "1"), q2 = pt("1", "5");
  Point centroid = Scalar(Rational(1, 3)) * (q0 + q1 + q2);
  auto c = bary_coords(centroid, q0, q1, q2);
  EXPECT_EQ(c, (std::array<Scalar, 3>{s("1/3"), s("1/3"), s("1/3")}));
  EXPECT_EQ(bary_coords(q0, q0, q1, q2), (std::array<Scalar, 3>{Scalar(1), Scalar(0), Scalar(0)}));
  try {
    (void)bary_coords(q0, q0, q1, pt("6", "2"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateFrame);
  }
}

TEST(BaryCoords, SignsMatchSideTest) {
  Point q0 = pt("0", "0"), q1 = pt("4", "0"), q2 = pt("0", "4");
  auto outside = bary_coords(pt("5", "1"), q0, q1, q2);
  EXPECT_LT(outside[0], Scalar(0));
  EXPECT_GT(outside[1], Scalar(0));
  EXPECT_GT(outside[2], Scalar(0));
}

TEST(BaryCoords, AreaIsDeterminantTimesFrameArea) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Polygon frame = oracle::random_rational_polygon(seed);
    Polygon tri = oracle::random_rational_polygon(seed + 1000);
    if (frame.size() < 3 || tri.size() < 3) continue;
    const Point& q0 = frame.vertex(0);
    const Point& q1 = frame.vertex(1);
    const Point& q2 = frame.vertex(2);
    BaryMatrix x;
    for (std::size_t i = 0; i < 3; ++i) x.rows[i] = bary_coords(tri.vertex(i), q0, q1, q2);
    for (std::size_t i = 0; i < 3; ++i) ASSERT_EQ(x.rows[i][0] + x.rows[i][1] + x.rows[i][2], Scalar(1));
    Polygon p{tri.vertex(0), tri.vertex(1), tri.vertex(2)};
    Polygon q{q0, q1, q2};
    Rational shoelace = oracle::area(oracle::to_rational(p));
    ASSERT_EQ(Scalar(shoelace), x.det().abs() * area(q)) << seed;
  }
}

TEST(CircumscribedTriangle, MedialConstruction) {
  TriangleParams half = params(s("1/2"), s("1/2"), s("1/2"));
  auto q = circumscribed_vertices(half);
  for (std::size_t i = 0; i < 3; ++i) {
    Point p = half.base[i].to_point();
    EXPECT_EQ(p, Scalar(Rational(1, 2)) * (q[(i + 1) % 3] + q[(i + 2) % 3]));
  }
  EXPECT_EQ(circumscribed_triangle(half), poly({{"1", "1"}, {"-1", "1"}, {"1", "-1"}}));
  EXPECT_EQ(area(circumscribed_triangle(half)), Scalar(2));
}

TEST(CircumscribedTriangle, HurkensParameters) {
  Scalar x = inv_root3();
  EXPECT_EQ(circumscribed_triangle(params(x, x, x)), hurkens_triangle());
}

TEST(CircumscribedTriangle, RoundTripBarycentric) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    TriangleParams p = random_params(seed);
    auto q = circumscribed_vertices(p);
    BaryMatrix x = circumscription_matrix(p.x);
    for (std::size_t i = 0; i < 3; ++i) {
      auto row = bary_coords(p.base[i].to_point(), q[0], q[1], q[2]);
      ASSERT_EQ(row, x.rows[i]) << seed;
      Point expect = (Scalar(1) - p.x[i]) * q[(i + 1) % 3] + p.x[i] * q[(i + 2) % 3];
      ASSERT_EQ(expect, p.base[i].to_point());
    }
    BaryMatrix identity;
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) identity.rows[r][c] = Scalar(r == c ? 1 : 0);
    ASSERT_EQ(x * vertex_bary_matrix(p.x), identity);
  }
}

TEST(CircumscribedTriangle, ValidatesParameters) {
  try {
    params(Scalar(0), s("1/2"), s("1/2")).validate();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParamOutOfRange);
  }
  TriangleParams bad = params(s("1/2"), s("1/2"), s("1/2"), {LatticePoint{0, 0}, {2, 0}, {0, 1}});
  EXPECT_THROW(bad.validate(), Error);
}

TEST(TriWidthMatrix, Examples) {
  LatticeTriangle base{LatticePoint{1, 0}, {0, 1}, {1, 1}};
  Polygon q = poly({{"0", "0"}, {"2", "0"}, {"0", "2"}});
  EXPECT_EQ(tri_width_matrix(bary_of(q, base), base), Scalar(2));
  BaryMatrix identity;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) identity.rows[r][c] = Scalar(r == c ? 1 : 0);
  EXPECT_EQ(tri_width_matrix(identity, standard_base()), Scalar(1));
  Scalar x = inv_root3();
  EXPECT_EQ(tri_width_matrix(vertex_bary_matrix({x, x, x}), standard_base()), hurkens_width());
}

TEST(TriWidthCircumscribed, Examples) {
  Scalar x = inv_root3();
  EXPECT_EQ(tri_width_circumscribed(params(x, x, x)), hurkens_width());
  TriangleParams fifths = params(s("3/5"), s("3/5"), s("3/5"));
  EXPECT_EQ(tri_width_circumscribed(fifths), s("15/7"));
  EXPECT_EQ(lattice_width(circumscribed_triangle(fifths)).w, s("15/7"));
}

TEST(TriAreaCircumscribed, Examples) {
  EXPECT_EQ(tri_area_circumscribed(params(s("1/2"), s("1/2"), s("1/2"))), Scalar(2));
  Scalar x = inv_root3();
  Scalar a = tri_area_circumscribed(params(x, x, x));
  EXPECT_EQ(a, area(hurkens_triangle()));
  EXPECT_EQ(a, Scalar::quadratic(1, Rational(1, 2), 3));
  EXPECT_NEAR(a.to_double(), 1.8660254037844386, 1e-15);
}

TEST(HurkensTriangle, Properties) {
  Polygon h = hurkens_triangle();
  EXPECT_EQ(lattice_width(h).w, hurkens_width());
  EXPECT_EQ(area(h), Scalar::quadratic(1, Rational(1, 2), 3));
  EXPECT_EQ(classify_maximal(h), MaximalClass::Type3Triangle);
  EXPECT_TRUE(lattice_points(h, LatticeMode::Interior).empty());
}

TEST(HurkensTriangle, EquivariantUnderBaseChange) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    LatticeTriangle base = random_base(seed);
    LatticePoint e1{base[1].x - base[0].x, base[1].y - base[0].y};
    LatticePoint e2{base[2].x - base[0].x, base[2].y - base[0].y};
    IntMatrix2 m{e1.x, e2.x, e1.y, e2.y};
    ASSERT_EQ(hurkens_triangle(base), unimodular_apply(hurkens_triangle(), m, base[0])) << seed;
    ASSERT_EQ(lattice_width(hurkens_triangle(base)).w, hurkens_width());
  }
}

TEST(TrianglesProperties, MatrixFormulaMatchesLatticeWidth) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    // Random triangle around a random fundamental cell, read off through its barycentric matrix.
    TriangleParams p = random_params(seed);
    oracle::Gen g(seed + 5);
    Polygon exact = circumscribed_triangle(p);
    std::vector<Point> pts;
    for (const Point& v : exact.vertices())
      pts.push_back(v + Point{Scalar(Rational(g.integer(-3, 3), 7)), Scalar(Rational(g.integer(-3, 3), 5))});
    Polygon q = [&] {
      try {
        Polygon t(pts);
        return t.size() == 3 ? t : exact;
      } catch (const Error&) {
        return exact;
      }
    }();
    ASSERT_EQ(tri_width_matrix(bary_of(q, p.base), p.base), lattice_width(q).w) << seed;
  }
}

TEST(TrianglesProperties, ThreeWidthFormulasAgree) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    TriangleParams p = random_params(seed);
    Polygon q = circumscribed_triangle(p);
    Scalar w = lattice_width(q).w;
    ASSERT_EQ(tri_width_circumscribed(p), w) << seed;
    ASSERT_EQ(tri_width_matrix(vertex_bary_matrix(p.x), p.base), w) << seed;
    ASSERT_EQ(tri_area_circumscribed(p), area(q)) << seed;
    ASSERT_EQ(tri_area_circumscribed(p), Scalar(oracle::area(oracle::to_rational(q))));
  }
}

TEST(TrianglesProperties, ReflectionSymmetry) {
  int free_cases = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    TriangleParams p = random_params(seed);
    TriangleParams r = p;
    for (auto& xi : r.x) xi = Scalar(1) - xi;
    ASSERT_EQ(circumscription_determinant(p.x), circumscription_determinant(r.x));
    // Swapping q1 and q2 is unimodular and sends x to (1 - x0, 1 - x2, 1 - x1).
    TriangleParams swapped = p;
    swapped.x = {r.x[0], r.x[2], r.x[1]};
    ASSERT_EQ(tri_width_circumscribed(p), tri_width_circumscribed(swapped)) << seed;
    ASSERT_EQ(tri_area_circumscribed(p), tri_area_circumscribed(swapped)) << seed;
    if (freecond_check(p) != FreeCondResult::Neither) {
      ASSERT_EQ(tri_width_circumscribed(p), tri_width_circumscribed(r)) << seed;
      ++free_cases;
    }
  }
  EXPECT_GT(free_cases, 0);
}

TEST(TriWidthCircumscribed, PlainReflectionNeedsFreeCond) {
  // Outside both conditions x -> 1 - x alone is not a lattice symmetry.
  TriangleParams p;
  p.x = {s("1/2"), s("1/3"), s("3/4")};
  TriangleParams r = p;
  for (auto& xi : r.x) xi = Scalar(1) - xi;
  EXPECT_EQ(tri_width_circumscribed(p), s("12/5"));
  EXPECT_EQ(tri_width_circumscribed(r), s("8/5"));
  EXPECT_EQ(lattice_width(circumscribed_triangle(r)).w, s("8/5"));
}

TEST(TrianglesProperties, CondAGridStaysBelowHurkensWidth) {
  const Scalar bound = hurkens_width();
  int checked = 0;
  for (long i = 1; i < 200; ++i) {
    for (long j = 1; j < 200; ++j) {
      Scalar x0(Rational(i, 200)), x1(Rational(j, 200)), x2(Rational(i + j, 400));
      if (freecond_check(x0, x1, x2) != FreeCondResult::CondA) continue;
      ++checked;
      ASSERT_LT(tri_width_circumscribed(params(x0, x1, x2)), bound) << i << "," << j;
    }
  }
  EXPECT_GT(checked, 5000);
}

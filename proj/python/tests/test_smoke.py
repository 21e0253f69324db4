import math

import pytest

import latgeom
from latgeom import Polygon, Scalar


def test_scalar_arithmetic_is_exact():
    third = Scalar("1/3")
    assert third + Scalar("2/3") == Scalar(1)
    root = Scalar.sqrt("3")
    assert (Scalar(1) + root) * (Scalar(1) - root) == Scalar(-2)
    assert str(Scalar(1) / root) == "(1/3)√3"
    assert math.isclose(float(root), math.sqrt(3), rel_tol=1e-15)


def test_mixed_radicands_raise():
    with pytest.raises(latgeom.LatgeomError, match="MixedRadicand"):
        Scalar.sqrt("2") + Scalar.sqrt("3")


def test_hurkens_width_and_area():
    h = latgeom.hurkens_triangle()
    w, dirs = latgeom.lattice_width(h)
    assert str(w) == "1 + (2/3)√3"
    assert w == latgeom.max_lattice_width()
    assert len(dirs) == 3
    assert latgeom.area(h) == Scalar(1) + Scalar.sqrt("3") / Scalar(2)
    assert latgeom.classify_maximal(h) == "Type3Triangle"


def test_polygon_construction_and_json():
    k = Polygon([("0", "0"), ("2", "0"), ("0", "2"), ("1/2", "1/2")])
    assert len(k) == 3
    assert latgeom.area(k) == Scalar(2)
    assert latgeom.is_lattice_free(k)
    assert latgeom.classify_maximal(k) == "Type1Triangle"
    assert Polygon.from_json(k.to_json()) == k
    with pytest.raises(latgeom.LatgeomError, match="Degenerate"):
        Polygon([(0, 0), (1, 1), (2, 2)])


def test_covering_minima_of_unit_diamond():
    diamond = Polygon([(1, 0), (0, 1), (-1, 0), (0, -1)])
    assert latgeom.mu1(diamond) == Scalar("1/2")
    lo, hi = latgeom.mu2_approx(diamond, "1/100")
    assert lo <= Scalar(1) <= hi
    assert hi - lo <= Scalar("1/100")


def test_triangle_parameters():
    assert latgeom.tri_width(["3/5", "3/5", "3/5"]) == Scalar("15/7")
    assert latgeom.tri_area(["1/2", "1/2", "1/2"]) == Scalar(2)
    t = latgeom.circumscribed_triangle(["1/2", "1/2", "1/2"])
    assert set(t.vertices) == {(Scalar(1), Scalar(1)), (Scalar(-1), Scalar(1)), (Scalar(1), Scalar(-1))}


def test_extremal_construction_is_tight():
    k = latgeom.construct_extremal("SymMaxCross", w="3/2")
    report = latgeom.verify_bounds(k)
    assert report["all_satisfied"]
    assert report["class"] == "MaximalQuadrilateral"
    with pytest.raises(latgeom.LatgeomError, match="ParamOutOfRange"):
        latgeom.construct_extremal("GeneralMin", w="21/10")


def test_fuzz_and_svg():
    summary = latgeom.run_fuzz(20, "symmetric")
    assert summary["polygons"] == 20
    assert summary["failures"] == []
    svg = latgeom.render_svg(latgeom.random_lattice_free(3))
    assert svg.startswith("<") and "</svg>" in svg

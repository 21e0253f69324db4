"""Exact lattice-width geometry of planar convex bodies."""

from latgeom._core import (
    LatgeomError,
    Polygon,
    Scalar,
    area,
    circumscribed_triangle,
    classify_maximal,
    construct_extremal,
    hurkens_triangle,
    is_lattice_free,
    lattice_width,
    max_lattice_width,
    mu1,
    mu2_approx,
    random_lattice_free,
    render_svg,
    run_fuzz,
    tri_area,
    tri_width,
    verify_bounds,
)

__all__ = [
    "LatgeomError",
    "Polygon",
    "Scalar",
    "area",
    "circumscribed_triangle",
    "classify_maximal",
    "construct_extremal",
    "hurkens_triangle",
    "is_lattice_free",
    "lattice_width",
    "max_lattice_width",
    "mu1",
    "mu2_approx",
    "random_lattice_free",
    "render_svg",
    "run_fuzz",
    "tri_area",
    "tri_width",
    "verify_bounds",
]

"""Exact rational toolkit for multiple lattice tilings of the plane by
centrally symmetric convex polygons."""

from .arrangement import MultiplicityReport, multiplicity_at, overlapping_translates, verify_k_fold
from .bolle import BolleReport, check_bolle, half_lattice_points_on_segment
from .errors import TilekitError
from .families import (
    Classification,
    Family,
    FamilyInstance,
    case_lattices,
    classify,
    decagon_from_vertex,
    alternating_sum_vanishes,
    hexagon,
    octagon_type1,
    octagon_type2,
    parallelogram,
)
from .geometry import AffineMap, CSPolygon, Vec, apply_affine, point_location, shoelace_area, validate_polygon
from .lattice import Lattice, TranslateSet, member, reduce_mod
from .local_structure import check_vertex_counts, edge_support_bound, edge_support_counts, vertex_star, wheels_at
from .render import RenderSpec, render_svg

__version__ = "0.1.0"

__all__ = [
    "AffineMap",
    "BolleReport",
    "CSPolygon",
    "Classification",
    "Family",
    "FamilyInstance",
    "Lattice",
    "MultiplicityReport",
    "RenderSpec",
    "TilekitError",
    "TranslateSet",
    "Vec",
    "apply_affine",
    "case_lattices",
    "check_bolle",
    "check_vertex_counts",
    "classify",
    "decagon_from_vertex",
    "edge_support_bound",
    "edge_support_counts",
    "alternating_sum_vanishes",
    "half_lattice_points_on_segment",
    "hexagon",
    "member",
    "multiplicity_at",
    "octagon_type1",
    "octagon_type2",
    "overlapping_translates",
    "parallelogram",
    "point_location",
    "reduce_mod",
    "render_svg",
    "shoelace_area",
    "validate_polygon",
    "verify_k_fold",
    "vertex_star",
    "wheels_at",
]

"""The convex polygons that admit five-fold translative tilings.

Up to linear maps these are parallelograms, centrally symmetric hexagons,
two one-parameter octagon families and a decagon family parametrised by one
vertex in the quadrilateral ``W``.  Every generator checks its own output
with the Bolle oracle before returning it.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .bolle import check_bolle
from .errors import (
    ChainDoesNotClose,
    DegenerateEdges,
    NotStrictlyConvex,
    ParameterOutOfRange,
    SelfCheckFailed,
    VertexNotInW,
    WrongGonality,
)
from .geometry import (
    AffineMap,
    CSPolygon,
    Q,
    Vec,
    cross,
    format_rational,
    orient,
    polygon_from_half,
    validate_polygon,
)
from .lattice import Lattice


class Family(str, enum.Enum):
    PARALLELOGRAM = "parallelogram"
    HEXAGON = "hexagon"
    OCTAGON_I = "octagon1"
    OCTAGON_II = "octagon2"
    DECAGON = "decagon"


Parameter = Union[None, Fraction, Vec]


def _param_json(p: Parameter):
    if p is None:
        return None
    if isinstance(p, Vec):
        return p.to_json()
    return format_rational(p)


@dataclass(frozen=True)
class FamilyInstance:
    family: Family
    parameter: Parameter
    polygon: CSPolygon
    lattice: Lattice
    expected_k: int

    def to_json(self) -> dict:
        return {
            "family": self.family.value,
            "parameter": _param_json(self.parameter),
            "polygon": self.polygon.to_json(),
            "lattice": self.lattice.to_json(),
            "expected_k": self.expected_k,
        }


def _self_checked(inst: FamilyInstance) -> FamilyInstance:
    report = check_bolle(inst.polygon, inst.lattice)
    if report.multiplicity != inst.expected_k:
        raise SelfCheckFailed(
            f"{inst.family.value}: Bolle multiplicity {report.multiplicity}"
            f" (area/det = {report.area_ratio}) != expected {inst.expected_k}"
        )
    return inst


# ---------------------------------------------------------------------------
# Generators


def parallelogram(e1: Vec, e2: Vec) -> FamilyInstance:
    """Centred parallelogram with edge vectors e1, e2, tiling by <e1, e2>."""
    if cross(e1, e2) == 0:
        raise DegenerateEdges(f"edge vectors {e1} and {e2} are parallel")
    half = [(-e1 - e2) / 2, (e1 - e2) / 2]
    P = polygon_from_half(half)
    return _self_checked(FamilyInstance(Family.PARALLELOGRAM, None, P, Lattice(e1, e2), 1))


def hexagon(v1: Vec, v2: Vec, v3: Vec) -> FamilyInstance:
    P = polygon_from_half([v1, v2, v3])
    L = Lattice(P.a_vector(1), P.a_vector(2))
    return _self_checked(FamilyInstance(Family.HEXAGON, v3, P, L, 1))


ALPHA_MAX = Fraction(2, 3)


def octagon_type1_vertices(alpha: Fraction) -> List[Vec]:
    return [
        Vec(Fraction(3, 2) - 5 * alpha / 4, -2),
        Vec(Fraction(-1, 2) - 5 * alpha / 4, -2),
        Vec(alpha / 4 - Fraction(3, 2), 0),
        Vec(alpha / 4 - Fraction(3, 2), 1),
    ]


def octagon_type1(alpha) -> FamilyInstance:
    """First octagon family, 0 < alpha < 2/3, with lattice <(2,0), (1+alpha/2, 1)>."""
    alpha = Q(alpha)
    if not 0 < alpha < ALPHA_MAX:
        raise ParameterOutOfRange(f"alpha must lie in (0, 2/3), got {alpha}")
    P = polygon_from_half(octagon_type1_vertices(alpha))
    L = Lattice(Vec(2, 0), Vec(1 + alpha / 2, 1))
    return _self_checked(FamilyInstance(Family.OCTAGON_I, alpha, P, L, 5))


def octagon_type2_vertices(beta: Fraction) -> List[Vec]:
    return [Vec(2 - beta, -3), Vec(-beta, -3), Vec(-2, -1), Vec(-2, 1)]


def octagon_type2(beta, lattice_height=2) -> FamilyInstance:
    """Second octagon family, 0 < beta <= 1.

    The lattice is <(2,0), (1+beta/2, lattice_height)>.  Height 2 is the one
    that gives multiplicity 5 (area 20, det 4); height 1 gives area/det = 10
    and is rejected by the self-check.
    """
    beta = Q(beta)
    if not 0 < beta <= 1:
        raise ParameterOutOfRange(f"beta must lie in (0, 1], got {beta}")
    P = polygon_from_half(octagon_type2_vertices(beta))
    L = Lattice(Vec(2, 0), Vec(1 + beta / 2, Q(lattice_height)))
    return _self_checked(FamilyInstance(Family.OCTAGON_II, beta, P, L, 5))


# Decagon, at the scale where the edge midpoints are integral.
DECAGON_MIDPOINTS: Tuple[Vec, ...] = (Vec(0, 2), Vec(2, 2), Vec(3, 1), Vec(3, 0), Vec(2, -1))
W_QUAD: Tuple[Vec, ...] = (Vec(-1, 2), Vec(-1, Fraction(3, 2)), Vec(Fraction(-4, 3), Fraction(4, 3)), Vec(Fraction(-3, 2), Fraction(3, 2)))


def in_W(p: Vec) -> bool:
    """Strict interior test for the quadrilateral W."""
    turns = {orient(W_QUAD[i], W_QUAD[(i + 1) % 4], p) for i in range(4)}
    return len(turns) == 1 and 0 not in turns


def decagon_vertices(v1: Vec) -> List[Vec]:
    """Reflect v1 successively through the ten canonical edge midpoints."""
    mids = list(DECAGON_MIDPOINTS) + [-u for u in DECAGON_MIDPOINTS]
    vs = [v1]
    for u in mids:
        vs.append(u * 2 - vs[-1])
    if vs[10] != v1:
        raise ChainDoesNotClose(f"reflection chain ends at {vs[10]}, not {v1}")
    return vs[:10]


def decagon_from_vertex(v1: Vec) -> FamilyInstance:
    """Decagon with the canonical midpoints and vertex v1 (strictly inside W).

    The lattice is <a3, a2 + a5> = <(6,2), (8,2)>.
    """
    if not in_W(v1):
        raise VertexNotInW(f"{v1} is not an interior point of W")
    vs = decagon_vertices(v1)
    try:
        P = validate_polygon(vs)
    except NotStrictlyConvex as exc:  # pragma: no cover - excluded by the W test
        raise ChainDoesNotClose(str(exc)) from exc
    a = [P.a_vector(i) for i in range(1, 6)]
    L = Lattice(a[2], a[1] + a[4])
    return _self_checked(FamilyInstance(Family.DECAGON, v1, P, L, 5))


# ---------------------------------------------------------------------------
# Decagon midpoint vectors and case lattices


def midpoint_vectors(P: CSPolygon) -> List[Vec]:
    """a_i = u_i - u_{i+5} for a decagon."""
    if P.n != 10:
        raise WrongGonality(f"expected a decagon, got a {P.n}-gon")
    return [P.a_vector(i) for i in range(1, 6)]


def alternating_sum_vanishes(P: CSPolygon) -> bool:
    """a1 - a2 + a3 - a4 + a5 == 0 (holds for every centred decagon)."""
    a = midpoint_vectors(P)
    s = a[0] - a[1] + a[2] - a[3] + a[4]
    return s.is_zero()


CASE_NAMES = ("i", "ii", "iii", "iv", "v")


@dataclass(frozen=True)
class CaseLattice:
    case: str
    basis: Tuple[Vec, Vec]
    degenerate: bool
    bolle_k: Optional[int]
    area_ratio: Optional[Fraction] = None

    @property
    def integer_multiplicity(self) -> bool:
        return self.area_ratio is not None and self.area_ratio.denominator == 1

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "basis": [b.to_json() for b in self.basis],
            "degenerate": self.degenerate,
            "area_ratio": None if self.area_ratio is None else format_rational(self.area_ratio),
            "bolle_k": self.bolle_k,
        }


def case_bases(a: List[Vec]) -> List[Tuple[Vec, Vec]]:
    a1, a2, a3, a4, a5 = a
    return [(a1, a3 - a4), (a3, a2 + a5), (a4, a1 - a2), (a3, a1 + a5), (a5, a2 - a4)]


def case_lattices(P: CSPolygon) -> List[CaseLattice]:
    """The five candidate lattices spanned by combinations of the a_i."""
    out = []
    for name, (b1, b2) in zip(CASE_NAMES, case_bases(midpoint_vectors(P))):
        if cross(b1, b2) == 0:
            out.append(CaseLattice(name, (b1, b2), True, None))
            continue
        report = check_bolle(P, Lattice(b1, b2))
        out.append(CaseLattice(name, (b1, b2), False, report.multiplicity, report.area_ratio))
    return out


# ---------------------------------------------------------------------------
# Classification


@dataclass(frozen=True)
class Classification:
    family: Optional[Family]
    parameter: Parameter = None
    transform: Optional[AffineMap] = None
    relabeling: Optional[Tuple[int, bool]] = None  # (shift, reflected)
    reason: str = ""

    @property
    def five_fold(self) -> bool:
        return self.family is not None

    def canonical(self) -> FamilyInstance:
        return canonical_instance(self.family, self.parameter)

    def to_json(self) -> dict:
        if self.family is None:
            return {"five_fold": False, "reason": self.reason}
        return {
            "five_fold": True,
            "family": self.family.value,
            "parameter": _param_json(self.parameter),
            "transform": self.transform.to_json(),
            "relabeling": {"shift": self.relabeling[0], "reflected": self.relabeling[1]},
        }


SQUARE_HALF = (Vec(1, 1), Vec(-1, 1))
HEX_FRAME = (Vec(1, 0), Vec(0, 1))


def canonical_instance(family: Family, parameter: Parameter) -> FamilyInstance:
    if family is Family.PARALLELOGRAM:
        return parallelogram(Vec(2, 0), Vec(0, 2))
    if family is Family.HEXAGON:
        return hexagon(HEX_FRAME[0], HEX_FRAME[1], parameter)
    if family is Family.OCTAGON_I:
        return octagon_type1(parameter)
    if family is Family.OCTAGON_II:
        return octagon_type2(parameter)
    return decagon_from_vertex(parameter)


def _labelings(n: int):
    for reflect in (False, True):
        for shift in range(n):
            yield shift, reflect


def _diag_fit(src: List[Vec], dst: List[Vec]) -> Optional[AffineMap]:
    """diag(sx, sy) with diag * src[i] == dst[i] for all i, if one exists."""
    sx = sy = None
    for p, q in zip(src, dst):
        if p.x == 0:
            if q.x != 0:
                return None
        elif sx is None:
            sx = q.x / p.x
        if p.y == 0:
            if q.y != 0:
                return None
        elif sy is None:
            sy = q.y / p.y
    if not sx or not sy:
        return None
    D = AffineMap.linear(sx, 0, 0, sy)
    if all(D(p) == q for p, q in zip(src, dst)):
        return D
    return None


def _octagon_parameter(x, y) -> List[Tuple[Family, Fraction]]:
    """Family/parameter candidates from coordinates normalised so G1 is horizontal
    and G3 vertical.  x[i], y[i] are 1-based (index 0 unused)."""
    out = []
    if (
        y[5] - y[4] == y[4] - y[3]
        and y[3] - y[2] == 2 * (y[4] - y[3])
        and x[6] - x[5] == 2 * (x[7] - x[6]) + 3 * (x[5] - x[4])
        and x[6] != x[5]
    ):
        alpha = 2 * (x[5] - x[4]) / (x[6] - x[5])
        if 0 < alpha < ALPHA_MAX:
            out.append((Family.OCTAGON_I, alpha))
    if (
        y[3] == y[8]
        and y[5] - y[4] == y[4] - y[3]
        and x[8] - x[3] == 2 * (x[1] - x[2])
        and x[1] != x[2]
    ):
        beta = 2 * x[6] / (x[1] - x[2])
        if 0 < beta <= 1:
            out.append((Family.OCTAGON_II, beta))
    return out


def _classify_octagon(P: CSPolygon) -> Optional[Classification]:
    for shift, reflect in _labelings(8):
        R = P.relabel(shift, reflect)
        q = R.vertices
        g1, g3 = q[1] - q[0], q[3] - q[2]
        if cross(g1, g3) == 0:
            continue
        N = AffineMap.from_columns(g1, g3).inverse()
        moved = [N(v) for v in q]
        x = [None] + [v.x for v in moved]
        y = [None] + [v.y for v in moved]
        for family, param in _octagon_parameter(x, y):
            canon = canonical_instance(family, param).polygon.vertices
            D = _diag_fit(moved, list(canon))
            if D is not None:
                return Classification(family, param, D.compose(N), (shift, reflect))
    return None


def _classify_decagon(P: CSPolygon) -> Optional[Classification]:
    c = DECAGON_MIDPOINTS
    for shift, reflect in _labelings(10):
        R = P.relabel(shift, reflect)
        u = [R.midpoint(i) for i in range(1, 6)]
        if cross(u[0], u[1]) == 0:
            continue
        T = AffineMap.sending(u[0], u[1], c[0], c[1])
        if all(T(u[i]) == c[i] for i in (2, 3, 4)):
            v1 = T(R.vertices[0])
            if not in_W(v1):
                continue
            return Classification(Family.DECAGON, v1, T, (shift, reflect))
    return None


def classify(P: CSPolygon) -> Classification:
    """Identify which five-fold family (if any) P belongs to, up to linear maps."""
    m = P.m
    if m == 2:
        T = AffineMap.sending(P.vertices[0], P.vertices[1], *SQUARE_HALF)
        return Classification(Family.PARALLELOGRAM, None, T, (0, False))
    if m == 3:
        T = AffineMap.sending(P.vertices[0], P.vertices[1], *HEX_FRAME)
        return Classification(Family.HEXAGON, T(P.vertices[2]), T, (0, False))
    if m >= 6:
        return Classification(
            None, reason="2m-gon with m >= 6: minimal tiling multiplicity is at least 6 (Lemma 3)"
        )
    found = _classify_octagon(P) if m == 4 else _classify_decagon(P)
    if found is not None:
        return found
    if m == 4:
        return Classification(None, reason="no relabelling satisfies either octagon family's conditions")
    return Classification(None, reason="no relabelling maps the edge midpoints onto the canonical decagon midpoints")

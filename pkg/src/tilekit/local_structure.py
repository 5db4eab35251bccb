"""Local structure of P + X at the vertices of the tiling.

At a vertex v every translate with v on its boundary contributes an inner
angle, bounded by two half-lines from v.  Chaining angles whose half-lines
coincide produces closed "adjacent wheels"; their total winding ``phi`` plus
the number of translates holding v in their interior equals the tiling
multiplicity k.  Windings are exact integers: an angle is charged one turn
when its half-open counterclockwise sweep contains the fixed direction (1, 0).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from .arrangement import overlapping_translates
from .errors import NotAVertexOfTiling, WheelMatchingFailed, WindingDecompositionViolation
from .geometry import CSPolygon, Vec, _vec, cross, point_location
from .lattice import Box, TranslateSet, member, reduce_mod

REFERENCE = Vec(1, 0)


def ray(d: Vec) -> Vec:
    """Canonical representative of the half-line direction of d (L1-normalised)."""
    s = abs(d.x) + abs(d.y)
    return _vec(d.x / s, d.y / s)


@dataclass(frozen=True)
class Angle:
    """Inner angle of P + translate at v, swept counterclockwise from ``start`` to ``end``."""

    translate: Vec
    start: Vec
    end: Vec
    vertex: Optional[int]  # vertex label of P at v, or None if v is inside an edge
    edge: Optional[int]

    def crosses_reference(self) -> bool:
        r = REFERENCE
        if self.start == r:
            return True
        return cross(self.start, r) > 0 and cross(r, self.end) > 0


@dataclass
class VertexStar:
    vertex: Vec
    on_boundary: List[Vec]
    in_interior_count: int
    edge_through_count: int
    angles: List[Angle] = field(default_factory=list, repr=False)

    def to_json(self) -> dict:
        return {
            "vertex": self.vertex.to_json(),
            "on_boundary": [t.to_json() for t in self.on_boundary],
            "interior_count": self.in_interior_count,
            "ell": self.edge_through_count,
        }


def is_tiling_vertex(P: CSPolygon, X: TranslateSet, v: Vec) -> bool:
    L = X.lattice
    return any(member(L, v - w - o) for o in X.offsets for w in P.vertices)


def _angle(P: CSPolygon, t: Vec, loc) -> Angle:
    # Work in counterclockwise order so the interior is on the left of each edge.
    n = P.n
    ccw = P.orientation > 0
    if loc.vertex is not None:
        j = loc.vertex - 1
        here = P.vertices[j]
        nxt = P.vertices[(j + 1) % n] if ccw else P.vertices[(j - 1) % n]
        prv = P.vertices[(j - 1) % n] if ccw else P.vertices[(j + 1) % n]
        return Angle(t, ray(nxt - here), ray(prv - here), loc.vertex, None)
    a, b = P.edge(loc.edge)
    if not ccw:
        a, b = b, a
    d = ray(b - a)
    return Angle(t, d, -d, None, loc.edge)


def vertex_star(P: CSPolygon, X: TranslateSet, v: Vec, search_radius_hint=None) -> VertexStar:
    """Translates meeting v: those with v on the boundary, and the interior count.

    ``search_radius_hint`` is accepted for interface compatibility; the search
    box is derived exactly from the polygon's extent.
    """
    if not is_tiling_vertex(P, X, v):
        raise NotAVertexOfTiling(f"{v} is not a vertex of any translate")
    on_boundary: List[Vec] = []
    angles: List[Angle] = []
    inside = 0
    ell = 0
    for t in overlapping_translates(P, X, (v.x, v.y, v.x, v.y)):
        loc = point_location(P, t, v)
        if loc.interior:
            inside += 1
        elif loc.boundary:
            on_boundary.append(t)
            angles.append(_angle(P, t, loc))
            if loc.edge is not None:
                ell += 1
    return VertexStar(v, on_boundary, inside, ell, angles)


@dataclass
class Wheel:
    translates: List[Vec]
    winding: int

    def to_json(self) -> dict:
        return {"translates": [t.to_json() for t in self.translates], "winding": self.winding}


@dataclass
class WheelReport:
    vertex: Vec
    wheels: List[Wheel]
    phi: int
    kappa: int
    ell: int
    interior_count: int
    m: int

    @property
    def total(self) -> int:
        return self.phi + self.interior_count

    def to_json(self) -> dict:
        return {
            "vertex": self.vertex.to_json(),
            "wheels": [w.to_json() for w in self.wheels],
            "phi": self.phi,
            "kappa": self.kappa,
            "ell": self.ell,
            "interior_count": self.interior_count,
            "total": self.total,
        }


def _chain_wheels(angles: List[Angle]) -> List[List[Angle]]:
    """Split the angles into closed chains with end_i == start_{i+1}."""
    by_start: Dict[Vec, List[int]] = {}
    for i, a in enumerate(angles):
        by_start.setdefault(a.start, []).append(i)
    for lst in by_start.values():
        lst.reverse()  # pop() then yields the lowest index first
    used = [False] * len(angles)
    wheels = []
    for i in range(len(angles)):
        if used[i]:
            continue
        by_start[angles[i].start].remove(i)
        used[i] = True
        chain = [angles[i]]
        origin = angles[i].start
        cur = angles[i].end
        while cur != origin:
            bucket = by_start.get(cur)
            if not bucket:
                raise WheelMatchingFailed(f"no angle continues the half-line {cur}")
            j = bucket.pop()
            used[j] = True
            chain.append(angles[j])
            cur = angles[j].end
        wheels.append(chain)
    return wheels


def wheels_at(P: CSPolygon, X: TranslateSet, v: Vec, star: Optional[VertexStar] = None) -> WheelReport:
    """Adjacent wheels at v, their windings, and the (kappa, ell) decomposition."""
    if star is None:
        star = vertex_star(P, X, v)
    chains = _chain_wheels(star.angles)
    wheels = []
    for chain in chains:
        w = sum(a.crosses_reference() for a in chain)
        if w < 1:
            raise WheelMatchingFailed("closed chain with zero winding")
        wheels.append(Wheel([a.translate for a in chain], w))
    phi = sum(w.winding for w in wheels)
    m = P.m
    kappa = Fraction(2 * phi - star.edge_through_count, m - 1)
    if kappa.denominator != 1 or kappa < 1:
        raise WindingDecompositionViolation(
            f"phi={phi}, ell={star.edge_through_count}, m={m} gives kappa={kappa}"
        )
    return WheelReport(v, wheels, phi, int(kappa), star.edge_through_count, star.in_interior_count, m)


# ---------------------------------------------------------------------------
# Whole-period checks


def period_vertices(P: CSPolygon, X: TranslateSet, region: Optional[Box] = None) -> List[Vec]:
    """Distinct tiling vertices of one period, as reduced representatives.

    Without a region these are reduce_mod(v_i + o) over all vertices and offsets;
    with one, the vertices of translates inside it are reduced and deduplicated.
    """
    L = X.lattice
    if region is None:
        reps = {reduce_mod(L, w + o) for o in X.offsets for w in P.vertices}
    else:
        x0, y0, x1, y1 = region
        reps = set()
        for t in overlapping_translates(P, X, region):
            for w in P.vertices:
                p = w + t
                if x0 <= p.x <= x1 and y0 <= p.y <= y1:
                    reps.add(reduce_mod(L, p))
    return sorted(reps)


@dataclass
class VertexCountRow:
    vertex: Vec
    interior_count: int
    phi: int
    ell: int
    kappa: int

    @property
    def total(self) -> int:
        return self.interior_count + self.phi

    def to_json(self) -> dict:
        return {
            "vertex": self.vertex.to_json(),
            "interior_count": self.interior_count,
            "phi": self.phi,
            "ell": self.ell,
            "kappa": self.kappa,
            "total": self.total,
        }


@dataclass
class VertexCountReport:
    k: int
    rows: List[VertexCountRow]

    @property
    def passed(self) -> bool:
        return all(r.total == self.k for r in self.rows)

    def to_json(self) -> dict:
        return {"pass": self.passed, "k": self.k, "rows": [r.to_json() for r in self.rows]}


def check_vertex_counts(P: CSPolygon, X: TranslateSet, k: int, region: Optional[Box] = None) -> VertexCountReport:
    """Check interior_count(v) + phi(v) == k at every vertex of one period."""
    rows = []
    for v in period_vertices(P, X, region):
        w = wheels_at(P, X, v)
        rows.append(VertexCountRow(v, w.interior_count, w.phi, w.ell, w.kappa))
    return VertexCountReport(k, rows)


@dataclass
class EdgeSupport:
    vertex: Vec
    other_end: Vec
    count: int


def edge_support_counts(P: CSPolygon, X: TranslateSet, v: Vec, star: Optional[VertexStar] = None) -> List[EdgeSupport]:
    """For each translated edge ending at v, count distinct translates x with
    v on the boundary of P + x and the rest of the edge inside int(P + x)."""
    if star is None:
        star = vertex_star(P, X, v)
    others = {}
    for a in star.angles:
        if a.vertex is None:
            continue
        base = P.vertex(a.vertex) + a.translate
        for j in (a.vertex - 1, a.vertex + 1):
            w = P.vertex(j) + a.translate
            others[w] = base
    distinct = sorted(set(star.on_boundary))
    out = []
    for w in sorted(others):
        c = sum(1 for t in distinct if point_location(P, t, w).interior)
        out.append(EdgeSupport(v, w, c))
    return out


def edge_support_bound(m: int) -> int:
    return math.ceil(Fraction(m - 3, 2))

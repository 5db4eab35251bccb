"""Bolle's criterion for k-fold lattice tiles.

A centred convex polygon P is a k-fold lattice tile for L (for some k) iff
every edge G has a point of L/2 in its relative interior, and every edge
whose midpoint misses L/2 is itself a vector of L.  When it holds,
k = area(P) / det(L).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import DegenerateSegment
from .geometry import CSPolygon, Vec, format_rational, shoelace_area
from .lattice import Lattice, half_member, member


def ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _primitive(v: Tuple[Fraction, Fraction]) -> Tuple[Tuple[int, int], Fraction]:
    """Write a non-zero rational vector as lam * (g1, g2) with gcd(g1, g2) = 1, lam > 0."""
    den = math.lcm(v[0].denominator, v[1].denominator)
    n1, n2 = int(v[0] * den), int(v[1] * den)
    g = math.gcd(n1, n2)
    return (n1 // g, n2 // g), Fraction(g, den)


@dataclass(frozen=True)
class Progression:
    """Points start + j*step for j = 0..count-1, at segment parameters t0 + j*dt."""

    start: Optional[Vec]
    step: Optional[Vec]
    count: int
    t0: Fraction = Fraction(0)
    dt: Fraction = Fraction(0)

    def __len__(self) -> int:
        return self.count

    def points(self) -> List[Vec]:
        return [self.start + self.step * j for j in range(self.count)]

    def params(self) -> List[Fraction]:
        return [self.t0 + self.dt * j for j in range(self.count)]

    def first_interior(self) -> Optional[Vec]:
        """First point strictly between the segment endpoints."""
        for j in range(self.count):
            t = self.t0 + self.dt * j
            if 0 < t < 1:
                return self.start + self.step * j
        return None


EMPTY = Progression(None, None, 0)


def half_lattice_points_on_segment(L: Lattice, seg: Tuple[Vec, Vec]) -> Progression:
    """All points of L/2 on the closed segment, via one linear Diophantine equation.

    In doubled lattice coordinates the segment is W0 + t*D (0 <= t <= 1) and
    we want its integer points.  With D = lam*g, g primitive, integer points
    on the line satisfy g1*w2 - g2*w1 = c; that equation is solved by the
    extended Euclidean algorithm and the solution family is clipped to [0, 1].
    """
    a, b = seg
    if a == b:
        raise DegenerateSegment("segment endpoints coincide")
    za = L.coords(a)
    zd = L.coords(b - a)
    W0 = (2 * za[0], 2 * za[1])
    D = (2 * zd[0], 2 * zd[1])
    (g1, g2), lam = _primitive(D)
    c = g1 * W0[1] - g2 * W0[0]
    if c.denominator != 1:
        return EMPTY
    c = int(c)
    # -g2*x + g1*y = 1
    g, x, y = ext_gcd(-g2, g1)
    assert g == 1
    w1, w2 = c * x, c * y
    gg = g1 * g1 + g2 * g2
    s_star = ((w1 - W0[0]) * g1 + (w2 - W0[1]) * g2) / gg
    j_lo = math.ceil(-s_star)
    j_hi = math.floor(lam - s_star)
    if j_lo > j_hi:
        return EMPTY
    first = (w1 + j_lo * g1, w2 + j_lo * g2)
    start = L.point(Fraction(first[0], 2), Fraction(first[1], 2))
    step = L.point(Fraction(g1, 2), Fraction(g2, 2))
    return Progression(start, step, j_hi - j_lo + 1, (s_star + j_lo) / lam, 1 / lam)


@dataclass
class EdgeVerdict:
    edge: int
    interior_half_lattice_witness: Optional[Vec]
    midpoint_in_half_lattice: bool
    edge_is_lattice_vector: bool

    @property
    def verdict(self) -> bool:
        return self.interior_half_lattice_witness is not None and (
            self.midpoint_in_half_lattice or self.edge_is_lattice_vector
        )

    def to_json(self) -> dict:
        w = self.interior_half_lattice_witness
        return {
            "edge": self.edge,
            "interior_half_lattice_witness": None if w is None else w.to_json(),
            "midpoint_in_half_lattice": self.midpoint_in_half_lattice,
            "edge_is_lattice_vector": self.edge_is_lattice_vector,
            "verdict": self.verdict,
        }


@dataclass
class BolleReport:
    passed: bool
    per_edge: List[EdgeVerdict]
    area: Fraction
    det: Fraction
    multiplicity: Optional[int] = None
    diagnostic: str = ""
    conditions_hold: bool = field(default=False)

    @property
    def area_ratio(self) -> Fraction:
        return self.area / self.det

    def to_json(self) -> dict:
        return {
            "pass": self.passed,
            "multiplicity": self.multiplicity,
            "area": format_rational(self.area),
            "det": format_rational(self.det),
            "diagnostic": self.diagnostic,
            "per_edge": [e.to_json() for e in self.per_edge],
        }

    def to_text(self) -> str:
        lines = [f"bolle: {'PASS' if self.passed else 'FAIL'}"]
        for e in self.per_edge:
            w = e.interior_half_lattice_witness
            lines.append(
                f"  G{e.edge}: witness={'-' if w is None else f'({w.x}, {w.y})'}"
                f" mid_in_half={e.midpoint_in_half_lattice}"
                f" lattice_vector={e.edge_is_lattice_vector} -> {e.verdict}"
            )
        lines.append(f"  area/det = {self.area}/{self.det} = {self.area_ratio}")
        if self.multiplicity is not None:
            lines.append(f"  multiplicity k = {self.multiplicity}")
        if self.diagnostic:
            lines.append(f"  {self.diagnostic}")
        return "\n".join(lines)


def check_edge(P: CSPolygon, L: Lattice, i: int) -> EdgeVerdict:
    seg = P.edge(i)
    prog = half_lattice_points_on_segment(L, seg)
    return EdgeVerdict(
        edge=i,
        interior_half_lattice_witness=prog.first_interior(),
        midpoint_in_half_lattice=half_member(L, P.midpoint(i)),
        edge_is_lattice_vector=member(L, P.edge_vector(i)),
    )


def check_bolle(P: CSPolygon, L: Lattice) -> BolleReport:
    """Decide whether P is a multiple lattice tile for L, and with which k.

    Central symmetry is guaranteed by the CSPolygon type.  Bolle's conditions
    holding with a non-integral area/det is reported as a failure with a
    diagnostic rather than raised.
    """
    per_edge = [check_edge(P, L, i) for i in range(1, P.n + 1)]
    area = shoelace_area(P)
    det = L.det
    ok = all(e.verdict for e in per_edge)
    report = BolleReport(False, per_edge, area, det, conditions_hold=ok)
    if not ok:
        bad = [e.edge for e in per_edge if not e.verdict]
        report.diagnostic = "edge condition fails on " + ", ".join(f"G{i}" for i in bad)
        return report
    ratio = area / det
    if ratio.denominator != 1 or ratio <= 0:
        report.diagnostic = f"NonIntegerMultiplicity: area/det = {ratio}"
        return report
    report.passed = True
    report.multiplicity = int(ratio)
    return report

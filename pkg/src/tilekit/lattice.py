"""Planar lattices, half-lattices and multiset translate sets."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .errors import DegenerateLattice, EmptyRegion
from .geometry import Q, Vec, _vec, cross, dot

Box = Tuple[Fraction, Fraction, Fraction, Fraction]  # (xmin, ymin, xmax, ymax)


def make_box(x0, y0, x1, y1) -> Box:
    box = (Q(x0), Q(y0), Q(x1), Q(y1))
    if box[0] > box[2] or box[1] > box[3]:
        raise EmptyRegion(f"box {box} is empty")
    return box


def _floor(q: Fraction) -> int:
    return q.numerator // q.denominator


def _ceil(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


@dataclass(frozen=True)
class Lattice:
    b1: Vec
    b2: Vec

    def __post_init__(self):
        if cross(self.b1, self.b2) == 0:
            raise DegenerateLattice(f"basis {self.b1}, {self.b2} is linearly dependent")

    @classmethod
    def from_rows(cls, rows: Sequence) -> "Lattice":
        (x1, y1), (x2, y2) = rows
        return cls(Vec(x1, y1), Vec(x2, y2))

    @classmethod
    def integer(cls) -> "Lattice":
        return cls(Vec(1, 0), Vec(0, 1))

    @property
    def signed_det(self) -> Fraction:
        return cross(self.b1, self.b2)

    @property
    def det(self) -> Fraction:
        return abs(cross(self.b1, self.b2))

    def coords(self, p: Vec) -> Tuple[Fraction, Fraction]:
        """Solve p = z1*b1 + z2*b2 exactly."""
        d = self.signed_det
        return cross(p, self.b2) / d, cross(self.b1, p) / d

    def point(self, z1, z2) -> Vec:
        return _vec(z1 * self.b1.x + z2 * self.b2.x, z1 * self.b1.y + z2 * self.b2.y)

    def contains_point(self, p: Vec) -> bool:
        return member(self, p)

    def transformed(self, T) -> "Lattice":
        return Lattice(T.apply_linear(self.b1), T.apply_linear(self.b2))

    def corners(self) -> List[Vec]:
        """Corners of the basis parallelogram."""
        return [Vec(0, 0), self.b1, self.b1 + self.b2, self.b2]

    def fundamental_box(self) -> Box:
        """Bounding rectangle of the half-open fundamental parallelogram."""
        cs = self.corners()
        return (min(c.x for c in cs), min(c.y for c in cs), max(c.x for c in cs), max(c.y for c in cs))

    def same_lattice(self, other: "Lattice") -> bool:
        return (
            member(self, other.b1)
            and member(self, other.b2)
            and member(other, self.b1)
            and member(other, self.b2)
        )

    def to_json(self) -> dict:
        return {"basis": [self.b1.to_json(), self.b2.to_json()]}


def member(L: Lattice, p: Vec) -> bool:
    z1, z2 = L.coords(p)
    return z1.denominator == 1 and z2.denominator == 1


def half_member(L: Lattice, p: Vec) -> bool:
    """Is p in (1/2) L ?"""
    z1, z2 = L.coords(p)
    return (2 * z1).denominator == 1 and (2 * z2).denominator == 1


def reduce_mod(L: Lattice, p: Vec) -> Vec:
    """Representative of p + L in the half-open parallelogram [0,1)b1 + [0,1)b2."""
    z1, z2 = L.coords(p)
    return L.point(z1 - _floor(z1), z2 - _floor(z2))


def _z2_interval(z1: int, L: Lattice, box: Box):
    """Exact range of z2 with z1*b1 + z2*b2 inside the closed box, or None."""
    x0, y0, x1, y1 = box
    lo, hi = None, None
    for c, lo_b, hi_b, base in (
        (L.b2.x, x0, x1, z1 * L.b1.x),
        (L.b2.y, y0, y1, z1 * L.b1.y),
    ):
        if c == 0:
            if not lo_b <= base <= hi_b:
                return None
            continue
        a, b = (lo_b - base) / c, (hi_b - base) / c
        if a > b:
            a, b = b, a
        lo = a if lo is None else max(lo, a)
        hi = b if hi is None else min(hi, b)
    # c == 0 for both coordinates is impossible on a non-degenerate lattice
    return _ceil(lo), _floor(hi)


def points_in_box(L: Lattice, box: Box) -> List[Vec]:
    """Every lattice point in the closed box, sorted by (z1, z2)."""
    x0, y0, x1, y1 = box
    if x0 > x1 or y0 > y1:
        raise EmptyRegion(f"box {box} is empty")
    corners = [Vec(x0, y0), Vec(x1, y0), Vec(x1, y1), Vec(x0, y1)]
    z1s = [L.coords(c)[0] for c in corners]
    out = []
    for z1 in range(_ceil(min(z1s)), _floor(max(z1s)) + 1):
        rng = _z2_interval(z1, L, box)
        if rng is None:
            continue
        for z2 in range(rng[0], rng[1] + 1):
            out.append(L.point(z1, z2))
    return out


def gauss_reduce(L: Lattice) -> Lattice:
    """Lagrange-Gauss reduced basis of the same lattice."""
    u, v = L.b1, L.b2
    if dot(u, u) > dot(v, v):
        u, v = v, u
    while True:
        mu = dot(u, v) / dot(u, u)
        k = math.floor(mu + Fraction(1, 2))
        v = v - u * k
        if dot(v, v) >= dot(u, u):
            return Lattice(u, v)
        u, v = v, u


@dataclass(frozen=True)
class TranslateSet:
    """X as the multiset union of cosets ``lattice + o`` over ``offsets``.

    Repeated offsets are meaningful: each copy contributes its own layer.
    """

    lattice: Lattice
    offsets: Tuple[Vec, ...] = (Vec(0, 0),)

    def __post_init__(self):
        object.__setattr__(self, "offsets", tuple(self.offsets))
        if not self.offsets:
            raise ValueError("a translate set needs at least one offset")

    @classmethod
    def of_lattice(cls, L: Lattice) -> "TranslateSet":
        return cls(L, (Vec(0, 0),))

    def rebased(self, L: Lattice) -> "TranslateSet":
        return TranslateSet(L, self.offsets)

    def to_json(self) -> dict:
        return {
            "lattice": self.lattice.to_json(),
            "offsets": [o.to_json() for o in self.offsets],
        }


def lattice_from_json(data: dict) -> Lattice:
    return Lattice.from_rows(data["basis"])


def translates_from_json(data: dict) -> TranslateSet:
    """Accepts either a TranslateSet document or a bare lattice document."""
    if "basis" in data and "lattice" not in data:
        L = lattice_from_json(data)
    else:
        L = lattice_from_json(data["lattice"])
    offsets: Iterable = data.get("offsets", [["0", "0"]])
    return TranslateSet(L, tuple(Vec(x, y) for x, y in offsets))

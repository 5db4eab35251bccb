"""Exact rational plane geometry.

All coordinates are :class:`fractions.Fraction`.  Nothing in this module (or
anywhere downstream of it) touches floating point in a decision path.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple, Union

from .errors import (
    DegenerateSegment,
    NonCenteringTranslation,
    NotCentered,
    NotStrictlyConvex,
    SingularMap,
    TooFewVertices,
)

Rational = Union[int, Fraction, str]


def Q(value: Rational) -> Fraction:
    """Coerce ``value`` to a Fraction.  Strings use the ``"p/q"`` literal form."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass a Fraction or 'p/q' string")
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


def format_rational(value: Fraction) -> str:
    return str(Fraction(value))


class Vec:
    """Exact point / vector in the plane."""

    __slots__ = ("x", "y")

    def __init__(self, x: Rational, y: Rational):
        self.x = Q(x)
        self.y = Q(y)

    @classmethod
    def parse(cls, text: str) -> "Vec":
        """Parse ``"x,y"`` with rational literals, e.g. ``"7/8,-2"``."""
        parts = text.split(",")
        if len(parts) != 2:
            raise ValueError(f"expected 'x,y', got {text!r}")
        return cls(parts[0], parts[1])

    def __add__(self, other: "Vec") -> "Vec":
        return _vec(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vec") -> "Vec":
        return _vec(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Vec":
        return _vec(-self.x, -self.y)

    def __mul__(self, s: Rational) -> "Vec":
        s = Q(s)
        return _vec(self.x * s, self.y * s)

    __rmul__ = __mul__

    def __truediv__(self, s: Rational) -> "Vec":
        s = Q(s)
        return _vec(self.x / s, self.y / s)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Vec):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __hash__(self) -> int:
        return hash((self.x, self.y))

    def __lt__(self, other: "Vec") -> bool:
        return (self.x, self.y) < (other.x, other.y)

    def __iter__(self):
        yield self.x
        yield self.y

    def __repr__(self) -> str:
        return f"Vec({self.x}, {self.y})"

    def to_json(self) -> list:
        return [format_rational(self.x), format_rational(self.y)]

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0


def _vec(x: Fraction, y: Fraction) -> Vec:
    # skips coercion; callers guarantee Fraction components
    v = object.__new__(Vec)
    v.x = x
    v.y = y
    return v


Point = Vec
ORIGIN = Vec(0, 0)


def cross(a: Vec, b: Vec) -> Fraction:
    return a.x * b.y - a.y * b.x


def dot(a: Vec, b: Vec) -> Fraction:
    return a.x * b.x + a.y * b.y


def orient(a: Vec, b: Vec, c: Vec) -> int:
    """Sign of the turn a -> b -> c: +1 left (ccw), -1 right, 0 collinear."""
    d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    return (d > 0) - (d < 0)


def sign(value) -> int:
    return (value > 0) - (value < 0)


# ---------------------------------------------------------------------------
# Affine maps


@dataclass(frozen=True)
class AffineMap:
    """x -> linear @ x + translation, with ``linear = ((a, b), (c, d))``."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    translation: Vec = ORIGIN

    @classmethod
    def linear(cls, a, b, c, d) -> "AffineMap":
        return cls(Q(a), Q(b), Q(c), Q(d), ORIGIN)

    @classmethod
    def identity(cls) -> "AffineMap":
        return cls.linear(1, 0, 0, 1)

    @classmethod
    def from_columns(cls, col1: Vec, col2: Vec) -> "AffineMap":
        """Linear map sending (1,0) to ``col1`` and (0,1) to ``col2``."""
        return cls(col1.x, col2.x, col1.y, col2.y, ORIGIN)

    @classmethod
    def sending(cls, src1: Vec, src2: Vec, dst1: Vec, dst2: Vec) -> "AffineMap":
        """The unique linear map with src1 -> dst1 and src2 -> dst2."""
        s = cls.from_columns(src1, src2)
        return cls.from_columns(dst1, dst2).compose(s.inverse())

    @property
    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    @property
    def is_linear(self) -> bool:
        return self.translation.is_zero()

    def __call__(self, p: Vec) -> Vec:
        return Vec(
            self.a * p.x + self.b * p.y + self.translation.x,
            self.c * p.x + self.d * p.y + self.translation.y,
        )

    def apply_linear(self, v: Vec) -> Vec:
        return Vec(self.a * v.x + self.b * v.y, self.c * v.x + self.d * v.y)

    def compose(self, inner: "AffineMap") -> "AffineMap":
        """self after inner."""
        return AffineMap(
            self.a * inner.a + self.b * inner.c,
            self.a * inner.b + self.b * inner.d,
            self.c * inner.a + self.d * inner.c,
            self.c * inner.b + self.d * inner.d,
            self(inner.translation),
        )

    def inverse(self) -> "AffineMap":
        det = self.det
        if det == 0:
            raise SingularMap("map is not invertible")
        a, b, c, d = self.d / det, -self.b / det, -self.c / det, self.a / det
        lin = AffineMap(a, b, c, d, ORIGIN)
        return AffineMap(a, b, c, d, -lin.apply_linear(self.translation))

    def to_json(self) -> dict:
        return {
            "linear": [
                [format_rational(self.a), format_rational(self.b)],
                [format_rational(self.c), format_rational(self.d)],
            ],
            "translation": self.translation.to_json(),
        }


# ---------------------------------------------------------------------------
# Centrally symmetric polygons


class CSPolygon:
    """Strictly convex 2m-gon centred at the origin.

    ``vertices`` keeps the caller's order (clockwise or counterclockwise);
    ``orientation`` is +1 when that order is counterclockwise, -1 otherwise.
    Edge ``G_i`` joins ``v_i`` to ``v_{i+1}``; ids are 1-based like the
    vertex labels.
    """

    __slots__ = ("vertices", "orientation", "_bbox")

    def __init__(self, vertices: Tuple[Vec, ...], orientation: int):
        self.vertices = vertices
        self.orientation = orientation
        xs = [v.x for v in vertices]
        ys = [v.y for v in vertices]
        self._bbox = (min(xs), min(ys), max(xs), max(ys))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.vertices) // 2

    def vertex(self, i: int) -> Vec:
        """1-based, indices taken mod 2m."""
        return self.vertices[(i - 1) % self.n]

    def edge(self, i: int) -> Tuple[Vec, Vec]:
        return self.vertex(i), self.vertex(i + 1)

    def edges(self) -> list:
        return [self.edge(i) for i in range(1, self.n + 1)]

    def edge_vector(self, i: int) -> Vec:
        a, b = self.edge(i)
        return b - a

    def midpoint(self, i: int) -> Vec:
        a, b = self.edge(i)
        return (a + b) / 2

    def midpoints(self) -> list:
        return [self.midpoint(i) for i in range(1, self.n + 1)]

    def a_vector(self, i: int) -> Vec:
        """u_i - u_{i+m}, which is 2 u_i for a centred polygon."""
        return self.midpoint(i) - self.midpoint(i + self.m)

    def ccw_vertices(self) -> Tuple[Vec, ...]:
        return self.vertices if self.orientation > 0 else tuple(reversed(self.vertices))

    @property
    def bbox(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        """(xmin, ymin, xmax, ymax)."""
        return self._bbox

    def relabel(self, shift: int, reflect: bool = False) -> "CSPolygon":
        """Cyclic relabelling (and optional reversal) of the vertex list."""
        n = self.n
        if reflect:
            order = [self.vertices[(shift - i) % n] for i in range(n)]
            return CSPolygon(tuple(order), -self.orientation)
        order = [self.vertices[(shift + i) % n] for i in range(n)]
        return CSPolygon(tuple(order), self.orientation)

    def translated(self, t: Vec) -> Tuple[Vec, ...]:
        return tuple(v + t for v in self.vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CSPolygon):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        body = ", ".join(f"({v.x}, {v.y})" for v in self.vertices)
        return f"CSPolygon([{body}])"

    def to_json(self) -> dict:
        return {"vertices": [v.to_json() for v in self.vertices]}


def validate_polygon(vertices: Iterable) -> CSPolygon:
    """Check and wrap a vertex list as an origin-centred strictly convex 2m-gon.

    Accepts ``Vec`` objects or pairs of rational literals.  Raises
    ``TooFewVertices``, ``NotCentered`` or ``NotStrictlyConvex``.
    """
    vs = tuple(v if isinstance(v, Vec) else Vec(*v) for v in vertices)
    n = len(vs)
    if n < 4 or n % 2:
        raise TooFewVertices(f"need an even number >= 4 of vertices, got {n}")
    m = n // 2
    for i in range(m):
        if vs[i + m] != -vs[i]:
            raise NotCentered(f"v{i + m + 1} = {vs[i + m]} is not -v{i + 1} = {-vs[i]}")

    turn = orient(vs[0], vs[1], vs[2])
    if turn == 0:
        raise NotStrictlyConvex("v1, v2, v3 are collinear")
    for i in range(n):
        t = orient(vs[i], vs[(i + 1) % n], vs[(i + 2) % n])
        if t != turn:
            raise NotStrictlyConvex(
                f"turn at v{(i + 1) % n + 1} is {'collinear' if t == 0 else 'reflex'}"
            )
    # Convex turns alone admit star polygons; require v2..vm to sweep monotonically
    # through less than a half turn from v1 so the boundary winds exactly once.
    for i in range(1, m):
        if sign(cross(vs[0], vs[i])) != turn or sign(cross(vs[i - 1], vs[i])) != turn:
            raise NotStrictlyConvex("vertex list winds around the centre more than once")
    return CSPolygon(vs, turn)


def shoelace_area(P: CSPolygon) -> Fraction:
    vs = P.vertices
    n = len(vs)
    twice = sum(cross(vs[i], vs[(i + 1) % n]) for i in range(n))
    return abs(twice) / 2


# ---------------------------------------------------------------------------
# Point location


@dataclass(frozen=True)
class Location:
    kind: str  # "interior" | "boundary" | "exterior"
    edge: Optional[int] = None  # set when p is in the relative interior of edge G_edge
    vertex: Optional[int] = None  # set when p coincides with vertex v_vertex

    @property
    def interior(self) -> bool:
        return self.kind == "interior"

    @property
    def boundary(self) -> bool:
        return self.kind == "boundary"

    @property
    def exterior(self) -> bool:
        return self.kind == "exterior"


INTERIOR = Location("interior")
EXTERIOR = Location("exterior")


def point_location(P: CSPolygon, t: Vec, p: Vec) -> Location:
    """Classify ``p`` against the translate ``P + t``."""
    q = p - t
    s = P.orientation
    vs = P.vertices
    n = len(vs)
    on_edge = None
    for i in range(n):
        a = vs[i]
        b = vs[(i + 1) % n]
        c = s * ((b.x - a.x) * (q.y - a.y) - (b.y - a.y) * (q.x - a.x))
        if c < 0:
            return EXTERIOR
        if c == 0 and on_edge is None:
            on_edge = i
    if on_edge is None:
        return INTERIOR
    for j in range(n):
        if vs[j] == q:
            return Location("boundary", vertex=j + 1)
    return Location("boundary", edge=on_edge + 1)


# ---------------------------------------------------------------------------
# Segments


Segment = Tuple[Vec, Vec]


def intersect_segments(s1: Segment, s2: Segment):
    """Exact intersection of two closed segments.

    Returns ``None``, a ``Vec``, or a ``(Vec, Vec)`` pair for a collinear
    overlap of positive length.
    """
    p, p2 = s1
    q, q2 = s2
    if p == p2 or q == q2:
        raise DegenerateSegment("segment endpoints coincide")
    r = p2 - p
    s = q2 - q
    denom = cross(r, s)
    qp = q - p
    if denom == 0:
        if cross(qp, r) != 0:
            return None
        rr = dot(r, r)
        t0 = dot(qp, r) / rr
        t1 = t0 + dot(s, r) / rr
        lo, hi = max(min(t0, t1), Fraction(0)), min(max(t0, t1), Fraction(1))
        if lo > hi:
            return None
        if lo == hi:
            return p + r * lo
        return (p + r * lo, p + r * hi)
    t = cross(qp, s) / denom
    u = cross(qp, r) / denom
    if 0 <= t <= 1 and 0 <= u <= 1:
        return p + r * t
    return None


# ---------------------------------------------------------------------------
# Affine images


def apply_affine(T: AffineMap, P: CSPolygon) -> CSPolygon:
    """Vertex-wise image of ``P`` under an invertible linear map."""
    if T.det == 0:
        raise SingularMap("map is not invertible")
    if not T.is_linear:
        raise NonCenteringTranslation("a non-zero translation would move the centre off the origin")
    return CSPolygon(tuple(T(v) for v in P.vertices), P.orientation * sign(T.det))


def polygon_from_half(half: Sequence) -> CSPolygon:
    """Validate the polygon v_1..v_m, -v_1..-v_m."""
    vs = [v if isinstance(v, Vec) else Vec(*v) for v in half]
    return validate_polygon(vs + [-v for v in vs])


def convex_intersects_box(vertices: Sequence[Vec], box) -> bool:
    """Closed convex polygon vs closed axis-aligned box, by separating axes."""
    x0, y0, x1, y1 = box
    xs = [v.x for v in vertices]
    ys = [v.y for v in vertices]
    if max(xs) < x0 or min(xs) > x1 or max(ys) < y0 or min(ys) > y1:
        return False
    corners = ((x0, y0), (x1, y0), (x1, y1), (x0, y1))
    n = len(vertices)
    for i in range(n):
        a = vertices[i]
        b = vertices[(i + 1) % n]
        nx, ny = b.y - a.y, a.x - b.x
        poly_proj = [nx * v.x + ny * v.y for v in vertices]
        box_proj = [nx * cx + ny * cy for cx, cy in corners]
        if max(poly_proj) < min(box_proj) or min(poly_proj) > max(box_proj):
            return False
    return True

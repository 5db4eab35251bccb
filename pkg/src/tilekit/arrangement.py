"""Ground-truth k-fold verification by face sampling.

Why sampling faces suffices: the covering multiplicity of P + X is constant
on each open face of the arrangement formed by all translated edges, and it
is periodic under the lattice.  A rectangle containing a fundamental domain
meets (a translate of) every face, so if every face inside it has interior
count k, then every point of the plane lies in at most k open translates and,
by closedness, in at least k closed ones.  Slab decomposition guarantees one
sample per face: between consecutive breakpoint abscissae no two edges cross
and no edge ends, so each slab splits into trapezoids, each inside one face,
and every face (being open) meets some slab.
"""
from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

from .errors import EmptyRegion
from .geometry import CSPolygon, Vec, _vec, convex_intersects_box, format_rational, point_location, shoelace_area
from .lattice import Box, TranslateSet, gauss_reduce, points_in_box


def overlapping_translates(P: CSPolygon, X: TranslateSet, region: Box) -> List[Vec]:
    """Every t in X (with multiplicity) such that P + t meets the closed region.

    Candidates come from exact bounding-box arithmetic; each one is then
    confirmed with an exact separating-axis test, so the result is exact.
    """
    x0, y0, x1, y1 = region
    px0, py0, px1, py1 = P.bbox
    out = []
    for o in X.offsets:
        search = (x0 - px1 - o.x, y0 - py1 - o.y, x1 - px0 - o.x, y1 - py0 - o.y)
        found = []
        for lam in points_in_box(X.lattice, search):
            t = lam + o
            if convex_intersects_box(P.translated(t), region):
                found.append(t)
        out.extend(sorted(found))
    return out


@dataclass(frozen=True)
class Counts:
    interior_count: int
    boundary_count: int


def multiplicity_at(P: CSPolygon, X: TranslateSet, p: Vec) -> Counts:
    """How many translates hold p in their interior / on their boundary."""
    inside = on = 0
    for t in overlapping_translates(P, X, (p.x, p.y, p.x, p.y)):
        loc = point_location(P, t, p)
        if loc.interior:
            inside += 1
        elif loc.boundary:
            on += 1
    return Counts(inside, on)


# ---------------------------------------------------------------------------
# Slab sampling


def _check_region(region: Box) -> None:
    x0, y0, x1, y1 = region
    if not (x0 < x1 and y0 < y1):
        raise EmptyRegion(f"region {region} has empty interior")


def _intersection_xs(segs: List[Tuple[Fraction, Fraction, Fraction, Fraction]], x0, x1) -> set:
    """x-coordinates of proper crossing points between segments, restricted to (x0, x1)."""
    order = sorted(range(len(segs)), key=lambda i: min(segs[i][0], segs[i][2]))
    active: List[int] = []
    xs = set()
    for i in order:
        ax, ay, bx, by = segs[i]
        sxmin = min(ax, bx)
        symin, symax = min(ay, by), max(ay, by)
        active = [j for j in active if max(segs[j][0], segs[j][2]) >= sxmin]
        rx, ry = bx - ax, by - ay
        for j in active:
            cx, cy, dx, dy = segs[j]
            if max(cy, dy) < symin or min(cy, dy) > symax:
                continue
            sx, sy = dx - cx, dy - cy
            denom = rx * sy - ry * sx
            if denom == 0:
                continue  # parallel: overlaps only add existing endpoints
            qx, qy = cx - ax, cy - ay
            t = (qx * sy - qy * sx) / denom
            if not 0 <= t <= 1:
                continue
            u = (qx * ry - qy * rx) / denom
            if not 0 <= u <= 1:
                continue
            x = ax + t * rx
            if x0 < x < x1:
                xs.add(x)
        active.append(i)
    return xs


def _dedupe_segments(segments) -> List[Tuple[Fraction, Fraction, Fraction, Fraction]]:
    seen = set()
    out = []
    for a, b in segments:
        key = (a.x, a.y, b.x, b.y) if (a.x, a.y) <= (b.x, b.y) else (b.x, b.y, a.x, a.y)
        if key not in seen:
            seen.add(key)
            out.append(key)
    return out


def iter_slabs(segments, region: Box) -> Iterator[Tuple[Fraction, List[Fraction]]]:
    """Yield (x*, sample ys) for each open slab of the region, left to right."""
    _check_region(region)
    x0, y0, x1, y1 = region
    segs = _dedupe_segments(segments)
    breaks = {x0, x1}
    for ax, ay, bx, by in segs:
        if x0 < ax < x1:
            breaks.add(ax)
        if x0 < bx < x1:
            breaks.add(bx)
    breaks |= _intersection_xs(segs, x0, x1)
    breaks = sorted(breaks)

    # Non-vertical segments sorted by left end, swept left to right.
    spans = sorted((s for s in segs if s[0] != s[2]), key=lambda s: s[0])
    nxt = 0
    active: List[Tuple[Fraction, Fraction, Fraction, Fraction]] = []
    for left, right in zip(breaks, breaks[1:]):
        xs = (left + right) / 2
        while nxt < len(spans) and spans[nxt][0] < xs:
            active.append(spans[nxt])
            nxt += 1
        active = [s for s in active if s[2] > xs]
        ys = {y0, y1}
        for ax, ay, bx, by in active:
            y = ay + (by - ay) * (xs - ax) / (bx - ax)
            if y0 < y < y1:
                ys.add(y)
        ys = sorted(ys)
        yield xs, [(lo + hi) / 2 for lo, hi in zip(ys, ys[1:])]


def slab_sample_points(segments: Sequence[Tuple[Vec, Vec]], region: Box) -> List[Vec]:
    """One point strictly inside every face of the arrangement clipped to region.

    No returned point lies on any segment.
    """
    return [_vec(x, y) for x, ys in iter_slabs(segments, region) for y in ys]


# ---------------------------------------------------------------------------
# k-fold verification


@dataclass
class Sample:
    point: Vec
    interior_count: int

    def to_json(self) -> dict:
        return {"point": self.point.to_json(), "interior_count": self.interior_count}


@dataclass
class MultiplicityReport:
    k_expected: int
    area_ratio: Fraction
    samples: List[Sample]
    min_count: int
    max_count: int
    area_identity: bool
    passed: bool
    region: Box = field(default=None)
    translates: int = 0

    def to_json(self, include_samples: bool = True) -> dict:
        out = {
            "pass": self.passed,
            "k_expected": self.k_expected,
            "area_ratio": format_rational(self.area_ratio),
            "area_identity": self.area_identity,
            "min_count": self.min_count,
            "max_count": self.max_count,
            "num_samples": len(self.samples),
            "num_translates": self.translates,
            "region": [format_rational(c) for c in self.region],
        }
        if include_samples:
            out["samples"] = [s.to_json() for s in self.samples]
        return out


class _ColumnProfile:
    """Lower/upper boundary of a fixed convex polygon as functions of x."""

    def __init__(self, P: CSPolygon):
        self.xmin, _, self.xmax, _ = P.bbox
        self.edges = [
            (a.x, a.y, b.x, b.y) if a.x < b.x else (b.x, b.y, a.x, a.y)
            for a, b in P.edges()
            if a.x != b.x
        ]

    def extent(self, x: Fraction) -> Tuple[Fraction, Fraction]:
        # x is never a vertex abscissa here, so exactly two edges span it
        ys = [
            ay + (by - ay) * (x - ax) / (bx - ax)
            for ax, ay, bx, by in self.edges
            if ax < x < bx
        ]
        return min(ys), max(ys)


def verification_region(X: TranslateSet) -> Box:
    """Bounding box of a (Gauss-reduced) fundamental parallelogram of X's lattice."""
    return gauss_reduce(X.lattice).fundamental_box()


def verify_k_fold(P: CSPolygon, X: TranslateSet, k: int, region: Optional[Box] = None) -> MultiplicityReport:
    """Decide whether P + X is a k-fold tiling by sampling every arrangement face."""
    if region is None:
        region = verification_region(X)
    translates = overlapping_translates(P, X, region)
    segments = [(a + t, b + t) for t in translates for a, b in P.edges()]
    profile = _ColumnProfile(P)

    samples: List[Sample] = []
    for xs, ys in iter_slabs(segments, region):
        lows, highs = [], []
        for t in translates:
            rel = xs - t.x
            if profile.xmin < rel < profile.xmax:
                lo, hi = profile.extent(rel)
                lows.append(lo + t.y)
                highs.append(hi + t.y)
        lows.sort()
        highs.sort()
        for y in ys:
            a = bisect.bisect_left(lows, y)
            b = bisect.bisect_left(highs, y)
            # face samples never touch a boundary
            assert (a == len(lows) or lows[a] != y) and (b == len(highs) or highs[b] != y)
            samples.append(Sample(_vec(xs, y), a - b))

    counts = [s.interior_count for s in samples]
    lo, hi = min(counts), max(counts)
    ratio = shoelace_area(P) * len(X.offsets) / X.lattice.det
    identity = ratio == k
    return MultiplicityReport(
        k_expected=k,
        area_ratio=ratio,
        samples=samples,
        min_count=lo,
        max_count=hi,
        area_identity=identity,
        passed=lo == hi == k and identity,
        region=region,
        translates=len(translates),
    )

"""SVG figures of tilings.

Coordinates are written as decimals for the renderer, each polygon preceded
by a comment carrying its exact rational translate.  Nothing here feeds back
into a decision.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union
from xml.sax.saxutils import escape

from .arrangement import overlapping_translates
from .errors import EmptyWindow
from .geometry import CSPolygon, Vec, convex_intersects_box, format_rational
from .lattice import Box, TranslateSet, reduce_mod

MODES = ("outline", "shade", "multiplicity-shade")


@dataclass(frozen=True)
class RenderSpec:
    window: Box
    mode: str = "outline"
    stroke_width: float = 0.02
    fill_opacity: float = 0.15

    def __post_init__(self):
        x0, y0, x1, y1 = self.window
        if not (x0 < x1 and y0 < y1):
            raise EmptyWindow(
                "window [%s, %s] x [%s, %s] is empty" % tuple(format_rational(v) for v in (x0, x1, y0, y1))
            )
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")


def _fmt(q) -> str:
    return f"{float(q):.6g}"


def window_translates(P: CSPolygon, X: Union[TranslateSet, Sequence[Vec]], window: Box):
    if isinstance(X, TranslateSet):
        ts = overlapping_translates(P, X, window)
        return sorted(ts, key=lambda t: (reduce_mod(X.lattice, t), t))
    return sorted(t for t in X if convex_intersects_box(P.translated(t), window))


def render_svg(P: CSPolygon, X: Union[TranslateSet, Sequence[Vec]], spec: RenderSpec) -> str:
    """One <polygon> per translate meeting the window.

    In the shading modes every translate is filled at the same low opacity, so
    the stacking darkens a region in proportion to how many translates cover it.
    """
    x0, y0, x1, y1 = spec.window
    translates = window_translates(P, X, spec.window)
    w, h = x1 - x0, y1 - y0
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{_fmt(x0)} {_fmt(-y1)} {_fmt(w)} {_fmt(h)}"'
        f' width="{_fmt(400 * w / max(w, h))}" height="{_fmt(400 * h / max(w, h))}">',
        f"<!-- window [{format_rational(x0)}, {format_rational(x1)}] x [{format_rational(y0)}, {format_rational(y1)}];"
        f" {len(translates)} translates -->",
        '<g transform="scale(1,-1)">',
    ]
    if spec.mode != "outline":
        style = f'fill="black" fill-opacity="{spec.fill_opacity}" stroke="none"'
    else:
        style = f'fill="none" stroke="black" stroke-width="{spec.stroke_width}"'
    for t in translates:
        pts = " ".join(f"{_fmt(v.x)},{_fmt(v.y)}" for v in P.translated(t))
        out.append(f"<!-- translate ({escape(format_rational(t.x))}, {escape(format_rational(t.y))}) -->")
        out.append(f'<polygon class="translate" points="{pts}" {style}/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"

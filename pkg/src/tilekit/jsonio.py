"""JSON documents for polygons, lattices and translate sets.

Rationals are strings ``"p/q"`` (``q`` omitted when 1).  Parsing accepts
unreduced fractions; emission is always reduced with a positive denominator.
"""
from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Union

from .geometry import CSPolygon, Vec, validate_polygon
from .lattice import Lattice, TranslateSet, lattice_from_json, translates_from_json

PathLike = Union[str, Path]


def polygon_from_json(data: dict) -> CSPolygon:
    if "polygon" in data and "vertices" not in data:
        data = data["polygon"]
    return validate_polygon(Vec(x, y) for x, y in data["vertices"])


def read_json(path: PathLike) -> dict:
    with open(path) as fh:
        return json.load(fh)


def write_json(path: PathLike, data: dict) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(data) + "\n")


def load_polygon(path: PathLike) -> CSPolygon:
    return polygon_from_json(read_json(path))


def load_lattice(path: PathLike) -> Lattice:
    data = read_json(path)
    if "lattice" in data and "basis" not in data:
        data = data["lattice"]
    return lattice_from_json(data)


def load_translates(path: PathLike) -> TranslateSet:
    return translates_from_json(read_json(path))


_PAIR = re.compile(r'\[\s+("[^"]*"),\s+("[^"]*")\s+\]')


def dumps(data: dict) -> str:
    """Indented JSON with coordinate pairs kept on one line."""
    return _PAIR.sub(r"[\1, \2]", json.dumps(data, indent=2))


__all__ = [
    "polygon_from_json",
    "lattice_from_json",
    "translates_from_json",
    "load_polygon",
    "load_lattice",
    "load_translates",
    "read_json",
    "write_json",
    "dumps",
]

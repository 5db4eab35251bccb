"""Command-line front end.

Exit status: 0 on success or a passing verification, 1 when a verification
fails (the report is still printed), 2 on bad input.
"""
from __future__ import annotations

import argparse
import re
import sys
from typing import List, Optional

from . import families
from .arrangement import multiplicity_at, verify_k_fold
from .bolle import check_bolle
from .errors import TilekitError
from .geometry import Q, Vec
from .jsonio import dumps, load_lattice, load_polygon, load_translates
from .lattice import make_box
from .local_structure import check_vertex_counts, wheels_at
from .render import MODES, RenderSpec, render_svg


def _vec(text: str) -> Vec:
    try:
        return Vec.parse(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad point {text!r}: {exc}")


def _rational(text: str):
    try:
        return Q(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad rational {text!r}: {exc}")


def _box(text: str):
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("window must be 'x0,y0,x1,y1'")
    return make_box(*(_rational(p) for p in parts))


def _emit(args, data: dict, text: Optional[str] = None) -> None:
    if getattr(args, "report", "json") == "text" and text is not None:
        print(text)
    else:
        print(dumps(data))


def cmd_gen(args) -> int:
    fam = args.family
    if fam == "parallelogram":
        inst = families.parallelogram(args.e1, args.e2)
    elif fam == "hexagon":
        inst = families.hexagon(args.v1, args.v2, args.v3)
    elif fam == "octagon1":
        if args.alpha is None:
            raise TilekitError("--alpha is required for octagon1")
        inst = families.octagon_type1(args.alpha)
    elif fam == "octagon2":
        if args.beta is None:
            raise TilekitError("--beta is required for octagon2")
        inst = families.octagon_type2(args.beta)
    else:
        if args.vertex is None:
            raise TilekitError("--vertex is required for decagon")
        inst = families.decagon_from_vertex(args.vertex)
    data = inst.to_json()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(dumps(data) + "\n")
    else:
        print(dumps(data))
    return 0


def cmd_bolle(args) -> int:
    report = check_bolle(load_polygon(args.polygon), load_lattice(args.lattice))
    _emit(args, report.to_json(), report.to_text())
    return 0 if report.passed else 1


def cmd_verify(args) -> int:
    P = load_polygon(args.polygon)
    X = load_translates(args.translates)
    report = verify_k_fold(P, X, args.k)
    text = (
        f"verify k={args.k}: {'PASS' if report.passed else 'FAIL'}"
        f" (min={report.min_count}, max={report.max_count},"
        f" area ratio={report.area_ratio}, samples={len(report.samples)})"
    )
    _emit(args, report.to_json(include_samples=not args.no_samples), text)
    return 0 if report.passed else 1


def cmd_multiplicity(args) -> int:
    P = load_polygon(args.polygon)
    X = load_translates(args.translates)
    c = multiplicity_at(P, X, args.point)
    print(dumps({"point": args.point.to_json(), "interior_count": c.interior_count, "boundary_count": c.boundary_count}))
    return 0


def cmd_wheel(args) -> int:
    P = load_polygon(args.polygon)
    X = load_translates(args.translates)
    report = wheels_at(P, X, args.vertex)
    print(dumps(report.to_json()))
    return 0


def cmd_vertex_counts(args) -> int:
    P = load_polygon(args.polygon)
    X = load_translates(args.translates)
    report = check_vertex_counts(P, X, args.k)
    print(dumps(report.to_json()))
    return 0 if report.passed else 1


def cmd_classify(args) -> int:
    c = families.classify(load_polygon(args.polygon))
    print(dumps(c.to_json()))
    return 0 if c.five_fold else 1


def cmd_cases(args) -> int:
    rows = families.case_lattices(load_polygon(args.polygon))
    print(dumps({"cases": [r.to_json() for r in rows]}))
    return 0


def cmd_render(args) -> int:
    P = load_polygon(args.polygon)
    X = load_translates(args.translates)
    spec = RenderSpec(args.window, mode=args.mode)
    svg = render_svg(P, X, spec)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="tilekit",
        description="Exact construction, verification and classification of multiple lattice tilings by centrally symmetric polygons.",
        epilog="Polygon JSON: {\"vertices\": [[\"7/8\",\"-2\"], ...]}.  Lattice JSON: {\"basis\": [[..],[..]]}."
        "  Translate JSON: {\"lattice\": {...}, \"offsets\": [[..], ...]} (a bare lattice means offsets [[0,0]]).",
    )
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a family instance with its lattice")
    g.add_argument("--family", required=True, choices=[f.value for f in families.Family])
    g.add_argument("--alpha", type=_rational)
    g.add_argument("--beta", type=_rational)
    g.add_argument("--vertex", type=_vec, help="decagon vertex v1 inside W, e.g. \"-5/4,3/2\"")
    g.add_argument("--e1", type=_vec, default=Vec(1, 0))
    g.add_argument("--e2", type=_vec, default=Vec(0, 1))
    g.add_argument("--v1", type=_vec, default=Vec(1, 0))
    g.add_argument("--v2", type=_vec, default=Vec(0, 1))
    g.add_argument("--v3", type=_vec, default=Vec(-1, 1))
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    b = sub.add_parser("bolle", help="check Bolle's criterion for a polygon and lattice")
    b.add_argument("--polygon", required=True)
    b.add_argument("--lattice", required=True)
    b.add_argument("--report", choices=["json", "text"], default="json")
    b.set_defaults(func=cmd_bolle)

    v = sub.add_parser("verify", help="verify a k-fold tiling by face sampling")
    v.add_argument("--polygon", required=True)
    v.add_argument("--translates", required=True)
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--report", choices=["json", "text"], default="json")
    v.add_argument("--no-samples", action="store_true", help="omit the per-sample audit list")
    v.set_defaults(func=cmd_verify)

    mu = sub.add_parser("multiplicity", help="count translates containing a point")
    mu.add_argument("--polygon", required=True)
    mu.add_argument("--translates", required=True)
    mu.add_argument("--point", type=_vec, required=True)
    mu.set_defaults(func=cmd_multiplicity)

    w = sub.add_parser("wheel", help="adjacent wheels at a tiling vertex")
    w.add_argument("--polygon", required=True)
    w.add_argument("--translates", required=True)
    w.add_argument("--vertex", type=_vec, required=True)
    w.set_defaults(func=cmd_wheel)

    e = sub.add_parser("eq1", aliases=["vertex-counts"], help="per-vertex interior count + winding table over one period")
    e.add_argument("--polygon", required=True)
    e.add_argument("--translates", required=True)
    e.add_argument("--k", type=int, required=True)
    e.set_defaults(func=cmd_vertex_counts)

    c = sub.add_parser("classify", help="identify the five-fold family of a polygon")
    c.add_argument("--polygon", required=True)
    c.set_defaults(func=cmd_classify)

    cs = sub.add_parser("cases", help="the five candidate lattices of a decagon")
    cs.add_argument("--polygon", required=True)
    cs.set_defaults(func=cmd_cases)

    r = sub.add_parser("render", help="SVG figure of the translates meeting a window")
    r.add_argument("--polygon", required=True)
    r.add_argument("--translates", required=True)
    r.add_argument("--window", type=_box, required=True, help="x0,y0,x1,y1")
    r.add_argument("--mode", choices=MODES, default="outline")
    r.add_argument("--out")
    r.set_defaults(func=cmd_render)
    return p


_NEGATIVE = re.compile(r"^-[0-9./]")


def _glue_negative_values(argv: List[str]) -> List[str]:
    # argparse reads "--vertex -5/4,3/2" as two options; rewrite as --vertex=-5/4,3/2
    out: List[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok.startswith("--") and "=" not in tok and i + 1 < len(argv) and _NEGATIVE.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_negative_values(list(sys.argv[1:] if argv is None else argv)))
    try:
        return args.func(args)
    except (TilekitError, ValueError, KeyError, TypeError, ZeroDivisionError, OSError) as exc:
        print(f"tilekit {args.command}: error: {exc}", file=sys.stderr)
        return 2


def run(argv: Optional[List[str]] = None) -> int:
    """Like ``main`` but converts argparse's SystemExit into a return code."""
    try:
        return main(argv)
    except SystemExit as exc:
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: ``bezarc {fit,poly,bench,probe,error}``.

Every command writes one document (JSON by default, or CSV) to stdout.
JSON floats use Python's shortest round-trip repr, so re-parsing reproduces
every number bit for bit.  Failures produce a document with an ``error``
member and a nonzero exit status.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
import xml.etree.ElementTree as ET

import numpy as np

from . import __version__
from .errors import BezarcError, UnsupportedCaseError
from .fitter import fit, fit_prescribed_zeros
from .geometry import SUPPORTED_CASES, ArcSpec, BezierCurve
from .metrics import max_error
from .minimax import constrained_minimax
from .oracle import conjecture_probe

SCHEMA_VERSION = "1.0"
MAX_POLY_DEGREE = 8
SVG_RADIUS = 400.0

_PI_FORM = re.compile(r"^\s*(?:(?P<num>[0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?)\s*\*?\s*)?pi\s*(?:/\s*(?P<den>[0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?))?\s*$")

# zero patterns of competing quartic G1 approximants, as lists of all 8 zeros of p
_W1 = math.sqrt(2.0) - 1.0
_Z1 = math.sqrt(6.0 - 4.0 * math.sqrt(3.0) + 2.0 * math.sqrt(6.0) * math.sqrt(math.sqrt(3.0) - 1.0)) / 3.0
G1_QUARTIC_TABLE = (
    ("all-ends", (-1, -1, -1, -1, 1, 1, 1, 1), 3.50e-5),
    ("double-w1", (-1, -1, -_W1, -_W1, _W1, _W1, 1, 1), 4.75e-6),
    ("triple-ends-double-0", (-1, -1, -1, 0, 0, 1, 1, 1), 3.55e-6),
    ("quadruple-0", (-1, -1, 0, 0, 0, 0, 1, 1), 2.03e-6),
    ("half", (-1, -1, -0.5, 0, 0, 0.5, 1, 1), 1.11e-6),
    ("three-fifths", (-1, -1, -0.6, 0, 0, 0.6, 1, 1), 1.08e-6),
    ("z1", (-1, -1, -_Z1, 0, 0, _Z1, 1, 1), 7.60e-7),
    ("minimax", None, 6.34e-7),
)
BENCH_TABLES = ("g1-quartic",)


class CliError(BezarcError):
    """Bad command-line input that argparse cannot catch on its own."""


def parse_angle(text: str, degrees: bool = False) -> float:
    """Parse ``0.785``, ``pi/4``, ``3*pi/8`` or ``pi``; with ``degrees`` a plain number is in degrees."""
    m = _PI_FORM.match(text)
    if m:
        num = float(m.group("num")) if m.group("num") else 1.0
        den = float(m.group("den")) if m.group("den") else 1.0
        if den == 0.0:
            raise CliError(f"zero denominator in angle {text!r}")
        value = num * math.pi / den
    else:
        try:
            value = float(text)
        except ValueError:
            raise CliError(f"cannot parse angle {text!r}; use radians, pi/N, N*pi/M or --degrees") from None
        if degrees:
            value = math.radians(value)
    if not math.isfinite(value):
        raise CliError(f"angle {text!r} is not finite")
    return value


# -- payloads -------------------------------------------------------------------------------


def _floats(values) -> list[float]:
    return [float(v) for v in values]


def _fit_payload(res) -> dict:
    return {
        "case": list(res.case),
        "half_angle": res.arc.half_angle,
        "control_points": [_floats(p) for p in res.curve.control_points],
        "params": {k: float(v) for k, v in res.named_params.items()},
        "c_constant": float(res.c_constant),
        "max_abs_psi": float(res.max_abs_psi),
        "hausdorff": float(res.hausdorff),
        "branch_count": int(res.branch_count),
        "branches": [_floats(b) for b in res.branches],
        "minimax_zeros": _floats(res.minimax_poly.positive_zeros),
        "radial_valid": res.error_report.radial_valid,
    }


def cmd_fit(args) -> tuple[dict, list[dict]]:
    degree, smoothness = _case_args(args)
    arc = ArcSpec(args.half_angle_value)
    res = fit(degree, smoothness, arc, samples=args.samples)
    payload = _fit_payload(res)
    note = res.metadata.get("selection_note")
    if note:
        payload["selection_note"] = note
    if args.svg:
        write_svg(args.svg, res.curve, arc)
        payload["svg"] = args.svg
    row = {
        "degree": degree,
        "smoothness": smoothness,
        "half_angle": arc.half_angle,
        **{f"param_{k}": v for k, v in payload["params"].items()},
        "c_constant": payload["c_constant"],
        "max_abs_psi": payload["max_abs_psi"],
        "hausdorff": payload["hausdorff"],
        "branch_count": payload["branch_count"],
    }
    for i, (x, y) in enumerate(payload["control_points"]):
        row[f"b{i}_x"], row[f"b{i}_y"] = x, y
    return payload, [row]


def cmd_poly(args) -> tuple[dict, list[dict]]:
    n, k = _case_args(args, supported=False)
    if not 0 <= k < n <= MAX_POLY_DEGREE:
        raise UnsupportedCaseError(f"poly needs 0 <= smoothness < degree <= {MAX_POLY_DEGREE}, got ({n}, {k})")
    poly = constrained_minimax(n, k)
    alt = poly.alternation_points()
    payload = {
        "n": n,
        "k": k,
        "family": poly.family,
        "positive_zeros": _floats(poly.positive_zeros),
        "norm": poly.norm,
        "alternation_points": _floats(alt),
        "alternation_values": _floats(poly(alt)),
    }
    rows = [{"kind": "norm", "index": 0, "value": poly.norm, "family": poly.family}]
    rows += [{"kind": "zero", "index": i, "value": z, "family": poly.family} for i, z in enumerate(poly.positive_zeros)]
    rows += [{"kind": "alternation", "index": i, "value": float(a), "family": poly.family} for i, a in enumerate(alt)]
    return payload, rows


def bench_g1_quartic(arc: ArcSpec, samples: int = 10_000) -> list[dict]:
    rows = []
    for name, zeros, published in G1_QUARTIC_TABLE:
        if zeros is None:
            # same code path as `fit --degree 4 --smoothness 1`
            res = fit(4, 1, arc, samples=samples)
            pos = res.minimax_poly.positive_zeros
            zeros = (-1, -1, *(-z for z in reversed(pos)), *pos, 1, 1)
        else:
            res = fit_prescribed_zeros(4, 1, zeros, arc, samples=samples)
        rows.append(
            {
                "pattern": name,
                "zeros": _floats(zeros),
                "d": res.params[0],
                "xi": res.params[1],
                "hausdorff": res.hausdorff,
                "published": published,
                "relative_deviation": (res.hausdorff - published) / published,
            }
        )
    return rows


def cmd_bench(args) -> tuple[dict, list[dict]]:
    if args.table not in BENCH_TABLES:
        raise CliError(f"unknown table {args.table!r}; known: {', '.join(BENCH_TABLES)}")
    arc = ArcSpec(args.half_angle_value)
    rows = bench_g1_quartic(arc, samples=args.samples)
    payload = {"table": args.table, "half_angle": arc.half_angle, "rows": rows}
    flat = [{**r, "zeros": " ".join(repr(z) for z in r["zeros"])} for r in rows]
    return payload, flat


def cmd_probe(args) -> tuple[dict, list[dict]]:
    degree, smoothness = _case_args(args)
    arc = ArcSpec(args.half_angle_value)
    g = conjecture_probe(degree, smoothness, arc, resolution=args.resolution,
                         samples=args.samples, seed=args.seed)
    payload = {
        "case": [degree, smoothness],
        "half_angle": arc.half_angle,
        "agrees": g.agrees,
        "not_beaten": g.not_beaten,
        "relative_gap": g.relative_gap,
        "rel_tol": g.rel_tol,
        "grid_resolution": g.grid_resolution,
        "search_box": [_floats(b) for b in g.search_box],
        "grid_best_params": _floats(g.grid_best_params),
        "grid_best_max_abs_psi": g.grid_best_max_abs_psi,
        "best_params": _floats(g.best_params),
        "best_max_abs_psi": g.best_max_abs_psi,
        "fitted_params": _floats(g.fitted_params),
        "fitted_max_abs_psi": g.fitted_max_abs_psi,
        "evaluations": g.evaluations,
    }
    row = {k: v for k, v in payload.items() if not isinstance(v, list)}
    row["best_params"] = " ".join(repr(v) for v in payload["best_params"])
    row["fitted_params"] = " ".join(repr(v) for v in payload["fitted_params"])
    return payload, [row]


def load_curve(path: str) -> BezierCurve:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read control points from {path!r}: {exc}") from None
    if not isinstance(doc, dict) or "degree" not in doc or "control_points" not in doc:
        raise CliError('input must be {"degree": n, "control_points": [[x, y], ...]}')
    curve = BezierCurve(degree=int(doc["degree"]), control_points=tuple(map(tuple, doc["control_points"])))
    return curve


def cmd_error(args) -> tuple[dict, list[dict]]:
    curve = load_curve(args.input)
    arc = ArcSpec(args.half_angle_value) if args.half_angle is not None else None
    rep = max_error(curve, samples=args.samples, arc=arc)
    payload = {
        "degree": curve.degree,
        "max_abs_psi": rep.max_abs_psi,
        "max_psi_location": rep.max_psi_location,
        "hausdorff": rep.hausdorff,
        "hausdorff_location": rep.hausdorff_location,
        "samples": rep.num_samples,
        "extrema": [[t, v] for t, v in rep.extrema],
        "radial_valid": rep.radial_valid,
    }
    if args.svg:
        write_svg(args.svg, curve, arc)
        payload["svg"] = args.svg
    row = {k: v for k, v in payload.items() if k != "extrema"}
    return payload, [row]


# -- SVG ------------------------------------------------------------------------------------


def _sci(v: float) -> str:
    return f"{v:.2e}"


def svg_document(curve: BezierCurve, arc: ArcSpec | None, samples: int = 400) -> str:
    """Arc (dashed) and curve overlay above a plot of psi over [-1, 1]."""
    R = SVG_RADIUS
    t = np.linspace(-1.0, 1.0, samples)
    pts = curve(t)
    ys = pts[:, 1]
    top = R * max(1.05, float(np.max(np.abs(ys))) + 0.05)
    width = 2 * R + 100
    plot_h = 0.6 * R
    height = 2 * top + plot_h + 120
    svg = ET.Element("svg", xmlns="http://www.w3.org/2000/svg", width=f"{width:g}", height=f"{height:g}",
                     viewBox=f"0 0 {width:g} {height:g}")
    # unit circle origin at the left margin, x to the right, y up
    ox, oy = 50.0, top

    def to_svg(p):
        return ox + R * p[0], oy - R * p[1]

    def path_d(points):
        xy = [to_svg(p) for p in points]
        return "M " + " L ".join(f"{x:.4f} {y:.4f}" for x, y in xy)

    phi = arc.half_angle if arc is not None else float(np.arctan2(pts[-1, 1], pts[-1, 0]))
    s = np.linspace(-phi, phi, samples)
    ET.SubElement(svg, "path", d=path_d(np.column_stack([np.cos(s), np.sin(s)])), fill="none", stroke="black",
                  **{"stroke-dasharray": "6 4", "stroke-width": "1.5"})
    ET.SubElement(svg, "path", d=path_d(pts), fill="none", stroke="crimson", **{"stroke-width": "1"})

    # error subplot
    px0, px1 = 80.0, width - 30.0
    py0 = 2 * top + 40
    py1 = py0 + plot_h
    err = np.sum(pts * pts, axis=1) - 1.0
    scale = float(np.max(np.abs(err))) or 1.0
    mid = 0.5 * (py0 + py1)
    xs = px0 + (t + 1.0) / 2.0 * (px1 - px0)
    yv = mid - err / scale * (0.5 * plot_h)
    ET.SubElement(svg, "polyline", points=" ".join(f"{x:.4f},{y:.4f}" for x, y in zip(xs, yv)), fill="none",
                  stroke="navy", **{"stroke-width": "1"})
    ET.SubElement(svg, "line", x1=f"{px0}", y1=f"{mid}", x2=f"{px1}", y2=f"{mid}", stroke="gray")
    ET.SubElement(svg, "line", x1=f"{px0}", y1=f"{py0}", x2=f"{px0}", y2=f"{py1}", stroke="gray")
    for val, y in ((scale, py0), (0.0, mid), (-scale, py1)):
        label = ET.SubElement(svg, "text", x=f"{px0 - 6}", y=f"{y + 4}", **{"text-anchor": "end", "font-size": "11"})
        label.text = _sci(val)
    for val, x in ((-1, px0), (0, 0.5 * (px0 + px1)), (1, px1)):
        label = ET.SubElement(svg, "text", x=f"{x}", y=f"{py1 + 16}", **{"text-anchor": "middle", "font-size": "11"})
        label.text = str(val)
    caption = ET.SubElement(svg, "text", x=f"{px0}", y=f"{py0 - 8}", **{"font-size": "12"})
    caption.text = "psi(t) = |p(t)|^2 - 1"
    return ET.tostring(svg, encoding="unicode", xml_declaration=True)


def write_svg(path: str, curve: BezierCurve, arc: ArcSpec | None) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(svg_document(curve, arc))
    except OSError as exc:
        raise CliError(f"cannot write SVG to {path!r}: {exc}") from None


# -- plumbing -------------------------------------------------------------------------------


def _case_args(args, supported=True) -> tuple[int, int]:
    degree = args.degree if args.degree is not None else args.degree_pos
    smoothness = args.smoothness if args.smoothness is not None else args.smoothness_pos
    if degree is None or smoothness is None:
        raise CliError("--degree and --smoothness are required")
    if supported and (degree, smoothness) not in SUPPORTED_CASES:
        raise UnsupportedCaseError(f"unsupported case ({degree}, {smoothness}); supported: {list(SUPPORTED_CASES)}")
    return degree, smoothness


def _add_case(p, positional=True):
    if positional:
        p.add_argument("degree_pos", nargs="?", type=int, metavar="DEGREE")
        p.add_argument("smoothness_pos", nargs="?", type=int, metavar="SMOOTHNESS")
    p.add_argument("--degree", type=int)
    p.add_argument("--smoothness", type=int)


def _add_common(p, angle_required=True):
    p.add_argument("--half-angle", required=angle_required, help="radians, pi/N, N*pi/M (degrees with --degrees)")
    p.add_argument("--degrees", action="store_true", help="read a plain --half-angle number as degrees")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--samples", type=int, default=10_000)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bezarc", description="Optimal G^k Bezier approximation of circular arcs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fit", help="fit the optimal approximant of an arc")
    _add_case(p)
    _add_common(p)
    p.add_argument("--svg", metavar="PATH")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("poly", help="constrained minimax polynomial p*_{2n,k}")
    _add_case(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("bench", help="reproduce a comparison table")
    p.add_argument("table")
    _add_common(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("probe", help="brute-force grid check of the fitted optimum")
    _add_case(p)
    _add_common(p)
    p.add_argument("--resolution", type=int, default=101)
    p.add_argument("--seed", type=int, default=0)
    # grid points are scored with a coarser sampling than a single fit
    p.set_defaults(func=cmd_probe, samples=4096)

    p = sub.add_parser("error", help="error figures of a curve read from JSON")
    p.add_argument("input", help='JSON file {"degree": n, "control_points": [[x, y], ...]}')
    _add_common(p, angle_required=False)
    p.add_argument("--svg", metavar="PATH")
    p.set_defaults(func=cmd_error)
    return parser


def _echo(args) -> dict:
    skip = {"func", "degree_pos", "smoothness_pos", "half_angle_value"}
    out = {k: v for k, v in vars(args).items() if k not in skip}
    if out.get("degree") is None and getattr(args, "degree_pos", None) is not None:
        out["degree"] = args.degree_pos
    if out.get("smoothness") is None and getattr(args, "smoothness_pos", None) is not None:
        out["smoothness"] = args.smoothness_pos
    return out


def render(doc: dict, rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2, allow_nan=True) + "\n"
    buf = io.StringIO()
    if "error" in doc:
        rows = [{"command": doc["command"], **doc["error"]}]
    header: list[str] = []
    for r in rows:
        header += [k for k in r if k not in header]
    writer = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow({k: repr(v) if isinstance(v, float) else v for k, v in r.items()})
    return buf.getvalue()


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    doc = {"schema_version": SCHEMA_VERSION, "command": args.command, "inputs": None}
    rows: list[dict] = []
    status = 0
    try:
        if getattr(args, "half_angle", None) is not None:
            args.half_angle_value = parse_angle(args.half_angle, args.degrees)
        if getattr(args, "samples", 64) < 64:
            raise CliError(f"--samples must be >= 64, got {args.samples}")
        doc["inputs"] = _echo(args)
        if hasattr(args, "half_angle_value"):
            doc["inputs"]["half_angle_radians"] = args.half_angle_value
        doc["results"], rows = args.func(args)
    except BezarcError as exc:
        doc["inputs"] = doc["inputs"] or _echo(args)
        err = {"type": type(exc).__name__, "message": str(exc)}
        diag = getattr(exc, "diagnostics", None)
        if diag:
            err["diagnostics"] = json.loads(json.dumps(diag, default=repr))
        doc["error"] = err
        print(f"bezarc {args.command}: {exc}", file=sys.stderr)
        status = 1
    sys.stdout.write(render(doc, rows, args.format))
    return status


if __name__ == "__main__":
    sys.exit(main())

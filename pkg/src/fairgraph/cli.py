"""Command-line interface.

Exit codes: 0 ok, 2 parse error, 3 model-assumption violation, 4 cap or
size limit exceeded, 5 infeasible.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import formats as io
from .analysis import bounds_report, compute_invariants
from .errors import CapExceeded, InfeasibleError, ModelAssumptionError, SizeLimitError
from .fairness import Measure, fairness, sample
from .graph import VertexColoring
from .groups import exact_budgeted_matching
from .setsystems import DEFAULT_CAP, ProblemKind

EXIT_PARSE, EXIT_MODEL, EXIT_CAP, EXIT_INFEASIBLE = 2, 3, 4, 5


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise io.ParseError(f"cannot read {path}: {exc.strerror}") from None


def _emit(text: str, output: str | None, out):
    if output:
        Path(output).write_text(text)
    else:
        out.write(text)


def cmd_compute(args, out) -> int:
    g, _ = io.parse_graph(_read(args.graph))
    kind = ProblemKind(args.kind)
    constraints = io.parse_groups(_read(args.groups), g, kind) if args.groups else None
    res = fairness(g, kind, Measure(args.measure), method=args.method, constraints=constraints, cap=args.cap)
    out.write(f"p = {io.fraction_str(res.value)}\n")
    _emit(io.dumps(io.distribution_document(g, kind, res)), args.output, out)
    return 0


def cmd_bounds(args, out) -> int:
    g, _ = io.parse_graph(_read(args.graph))
    rep = bounds_report(g)
    doc = {
        "edge_fairness_lower": io.fraction_str(rep.edge_fairness_bounds[0]),
        "edge_fairness_upper": io.fraction_str(rep.edge_fairness_bounds[1]),
        "rawlsian_vertex_lower": io.fraction_str(rep.rawlsian_vertex_lower),
        "pu_positive": rep.pu_positive,
        "pu_dichotomy_lower": io.fraction_str(rep.pu_dichotomy_lower),
    }
    _emit(io.dumps(doc), args.output, out)
    return 0


def cmd_invariants(args, out) -> int:
    g, _ = io.parse_graph(_read(args.graph))
    inv = compute_invariants(g)
    doc = {
        "matching_number": inv.matching_number,
        "fractional_matching_number": io.fraction_str(inv.fractional_matching_number),
        "has_perfect_matching": inv.has_perfect_matching,
        "has_fractional_perfect_matching": inv.has_fractional_perfect_matching,
        "max_degree": inv.max_degree,
        "min_degree": inv.min_degree,
    }
    _emit(io.dumps(doc), args.output, out)
    return 0


def _parse_require(spec: str) -> dict[str, int]:
    req = {}
    for part in filter(None, spec.split(",")):
        name, sep, count = part.partition("=")
        if not sep or not count.strip().isdigit():
            raise io.ParseError(f"bad requirement {part!r}; expected color=count")
        req[name.strip()] = int(count)
    return req


def cmd_ebm(args, out) -> int:
    g, colors = io.parse_graph(_read(args.graph))
    if not colors or len(colors) != g.n:
        raise io.ParseError("exact-budgeted matching needs a color for every vertex")
    names = sorted(set(colors.values()))
    req = _parse_require(args.require)
    unknown = set(req) - set(names)
    if unknown:
        raise io.ParseError(f"unknown color {sorted(unknown)[0]!r}")
    pos = {name: i for i, name in enumerate(names)}
    coloring = VertexColoring(tuple(pos[colors[g.label(v)]] for v in g.vertices), len(names))
    sizes = coloring.sizes()
    r = [req.get(name, 0) for name in names]
    for name, ri, ni in zip(names, r, sizes):
        if ri > ni:
            raise io.ParseError(f"requirement {ri} for color {name!r} exceeds its {ni} vertices")
    w = [Fraction(1)] * g.n
    if args.weights:
        doc = io.load_json(_read(args.weights))
        if not isinstance(doc, dict):
            raise io.ParseError("weights document must map vertex labels to fractions")
        labels = {g.label(v): v for v in g.vertices}
        for lab, val in doc.items():
            if lab not in labels:
                raise io.ParseError(f"weight for unknown vertex {lab!r}")
            w[labels[lab]] = io.parse_fraction(val)
    res = exact_budgeted_matching(g, coloring, r, w)
    if res is None:
        out.write("INFEASIBLE\n")
        return EXIT_INFEASIBLE
    doc = {
        "matching": sorted(sorted([g.label(u), g.label(v)]) for u, v in res.matching),
        "weight": io.fraction_str(res.weight),
    }
    _emit(io.dumps(doc), args.output, out)
    return 0


def cmd_sample(args, out) -> int:
    _, dist = io.parse_distribution(_read(args.distribution))
    lines = [io.format_member(m) + "\n" for m in sample(dist, args.seed, args.count)]
    _emit("".join(lines), args.output, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fairgraph", description="Fair distributions over graph solutions.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="uniform fairness or Rawlsian justice with a certificate distribution")
    c.add_argument("graph")
    c.add_argument("--kind", required=True, choices=[k.value for k in ProblemKind])
    c.add_argument("--measure", required=True, choices=[m.value for m in Measure])
    c.add_argument("--method", default="auto", choices=["auto", "colgen", "exact"])
    c.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap for --method exact")
    c.add_argument("--groups", help="group constraint document")
    c.add_argument("--output", "-o")
    c.set_defaults(func=cmd_compute)

    b = sub.add_parser("bounds", help="closed-form fairness bounds")
    b.add_argument("graph")
    b.add_argument("--output", "-o")
    b.set_defaults(func=cmd_bounds)

    i = sub.add_parser("invariants", help="matching number and fractional matching data")
    i.add_argument("graph")
    i.add_argument("--output", "-o")
    i.set_defaults(func=cmd_invariants)

    e = sub.add_parser("ebm", help="exact-budgeted matching on a colored graph")
    e.add_argument("graph")
    e.add_argument("--require", required=True, help="color=count,... (unlisted colors require 0)")
    e.add_argument("--weights", help="JSON map vertex label -> weight (default 1)")
    e.add_argument("--output", "-o")
    e.set_defaults(func=cmd_ebm)

    s = sub.add_parser("sample", help="draw solutions from a distribution document")
    s.add_argument("distribution")
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--count", type=int, default=1)
    s.add_argument("--output", "-o")
    s.set_defaults(func=cmd_sample)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except io.ParseError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE
    except ModelAssumptionError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_MODEL
    except (CapExceeded, SizeLimitError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_CAP
    except InfeasibleError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INFEASIBLE


if __name__ == "__main__":
    sys.exit(main())

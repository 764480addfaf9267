"""JSON document formats for graphs, group constraints and distributions.

All rationals are written as exact fraction strings (``"4/5"``, ``"1"``).
Output is canonical: keys sorted, lists ordered by label, so identical
inputs give byte-identical documents.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Optional

from .errors import GraphError
from .fairness import Distribution, FairnessResult
from .graph import Graph
from .groups import GroupConstraints
from .setsystems import ProblemKind


class ParseError(ValueError):
    """Input document does not follow the expected format."""


def fraction_str(q: Fraction) -> str:
    return str(Fraction(q))


def parse_fraction(s: Any) -> Fraction:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise ParseError(f"expected a fraction string, got {s!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad fraction {s!r}") from None


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None


def parse_graph(text: str) -> tuple[Graph, Optional[dict[str, str]]]:
    """Graph document: ``{"vertices": [...], "edges": [[a, b], ...], "colors": {...}}``.

    Returns the graph and the optional ``label -> group name`` color map.
    """
    doc = load_json(text)
    if not isinstance(doc, dict) or "vertices" not in doc or "edges" not in doc:
        raise ParseError("graph document needs 'vertices' and 'edges'")
    verts = doc["vertices"]
    if not isinstance(verts, list):
        raise ParseError("'vertices' must be a list")
    verts = [str(v) for v in verts]
    edges = doc["edges"]
    if not isinstance(edges, list) or any(not isinstance(e, list) or len(e) != 2 for e in edges):
        raise ParseError("'edges' must be a list of label pairs")
    try:
        g = Graph.from_labels(verts, [(str(a), str(b)) for a, b in edges])
    except GraphError as exc:
        raise ParseError(str(exc)) from None
    colors = doc.get("colors")
    if colors is not None:
        if not isinstance(colors, dict):
            raise ParseError("'colors' must map vertex labels to group names")
        unknown = set(colors) - set(verts)
        if unknown:
            raise ParseError(f"colors reference unknown vertex {sorted(unknown)[0]!r}")
        colors = {str(k): str(v) for k, v in colors.items()}
    return g, colors


def _element(g: Graph, kind: ProblemKind, item):
    index = {lab: v for v, lab in enumerate(g.labels or [str(v) for v in g.vertices])}
    if kind.on_edges:
        if not isinstance(item, list) or len(item) != 2:
            raise ParseError(f"edge group element must be a label pair, got {item!r}")
        try:
            u, v = index[str(item[0])], index[str(item[1])]
        except KeyError as exc:
            raise ParseError(f"unknown vertex {exc.args[0]!r}") from None
        e = (min(u, v), max(u, v))
        if e not in g.edge_index:
            raise ParseError(f"{item!r} is not an edge")
        return e
    try:
        return index[str(item)]
    except KeyError:
        raise ParseError(f"unknown vertex {item!r}") from None


def parse_groups(text: str, g: Graph, kind: ProblemKind) -> GroupConstraints:
    """Groups document: ``groups``, optional ``absolute`` and ``relative``."""
    doc = load_json(text)
    if not isinstance(doc, dict) or not isinstance(doc.get("groups"), dict):
        raise ParseError("group document needs a 'groups' map")
    names = sorted(doc["groups"])
    pos = {name: i for i, name in enumerate(names)}
    groups = [[_element(g, kind, x) for x in doc["groups"][name]] for name in names]
    bounds = {}
    for name, lu in (doc.get("absolute") or {}).items():
        if name not in pos:
            raise ParseError(f"absolute bound for unknown group {name!r}")
        if not isinstance(lu, list) or len(lu) != 2 or not all(isinstance(x, int) for x in lu):
            raise ParseError(f"absolute bound for {name!r} must be [lower, upper]")
        bounds[pos[name]] = (lu[0], lu[1])
    rel = []
    for item in doc.get("relative") or []:
        try:
            rel.append((pos[item["i"]], pos[item["j"]], parse_fraction(item["ratio"])))
        except (KeyError, TypeError):
            raise ParseError(f"bad relative constraint {item!r}") from None
    try:
        return GroupConstraints.create(groups, bounds, rel, names)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _member_labels(g: Graph, kind: ProblemKind, member) -> list:
    if kind.on_edges:
        return sorted(sorted([g.label(u), g.label(v)]) for u, v in member)
    return sorted(g.label(v) for v in member)


def distribution_document(g: Graph, kind: ProblemKind, res: FairnessResult) -> dict:
    support = [{"member": _member_labels(g, kind, m), "probability": fraction_str(p)}
               for m, p in res.distribution.support]
    support.sort(key=lambda d: (len(d["member"]), d["member"]))
    coverage = []
    for a, q in res.coverage.items():
        elem = sorted([g.label(a[0]), g.label(a[1])]) if kind.on_edges else g.label(a)
        coverage.append({"element": elem, "coverage": fraction_str(q)})
    coverage.sort(key=lambda d: (isinstance(d["element"], list), d["element"]))
    return {
        "kind": kind.value,
        "measure": res.measure.value,
        "value": fraction_str(res.value),
        "support": support,
        "coverage": coverage,
        "columns_generated": res.columns_generated,
    }


def parse_distribution(text: str) -> tuple[Optional[str], Distribution]:
    """Read a distribution document back; members keep their label form.

    Raises :class:`ParseError` unless probabilities are nonnegative and
    sum to exactly 1.
    """
    doc = load_json(text)
    if not isinstance(doc, dict) or not isinstance(doc.get("support"), list):
        raise ParseError("distribution document needs a 'support' list")
    items = []
    for entry in doc["support"]:
        if not isinstance(entry, dict) or "member" not in entry or "probability" not in entry:
            raise ParseError(f"bad support entry {entry!r}")
        member = tuple(tuple(x) if isinstance(x, list) else x for x in entry["member"])
        items.append((member, parse_fraction(entry["probability"])))
    try:
        return doc.get("kind"), Distribution(tuple(items))
    except ValueError as exc:
        raise ParseError(f"malformed distribution: {exc}") from None


def format_member(member) -> str:
    return " ".join("-".join(x) if isinstance(x, tuple) else str(x) for x in member)

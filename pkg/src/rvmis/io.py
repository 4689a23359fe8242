"""DIMACS edge format with an optional rational weight extension.

::

    c comment
    p edge <n> <m>
    e <u> <v>          1-indexed endpoints
    w <v> <p>/<q>      optional vertex weight (``<p>`` alone means q = 1)

Vertices without a ``w`` line have weight 1.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import DimacsParseError
from .graph import Graph, Weights, build_graph


@dataclass(frozen=True)
class DimacsInstance:
    graph: Graph
    weights: Weights | None  # None when the file has no ``w`` lines
    comments: tuple = ()


def _int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise DimacsParseError(f"{what} must be an integer, got {tok!r}", lineno) from None


def read_dimacs(text: str) -> DimacsInstance:
    n = declared_m = None
    edges = set()
    weights = {}
    comments = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts:
            continue
        tag = parts[0]
        if tag == "c":
            comments.append(raw[1:].strip())
            continue
        if tag == "p":
            if n is not None:
                raise DimacsParseError("second 'p' line", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise DimacsParseError("expected 'p edge <n> <m>'", lineno)
            n = _int(parts[2], lineno, "vertex count")
            declared_m = _int(parts[3], lineno, "edge count")
            if n < 0 or declared_m < 0:
                raise DimacsParseError("counts must be non-negative", lineno)
            continue
        if tag not in ("e", "w"):
            raise DimacsParseError(f"unknown line type {tag!r}", lineno)
        if n is None:
            raise DimacsParseError(f"'{tag}' line before the 'p' line", lineno)
        if len(parts) != 3:
            raise DimacsParseError(f"'{tag}' line needs exactly two fields", lineno)
        if tag == "e":
            u = _int(parts[1], lineno, "endpoint")
            v = _int(parts[2], lineno, "endpoint")
            for x in (u, v):
                if not 1 <= x <= n:
                    raise DimacsParseError(f"endpoint {x} outside 1..{n}", lineno)
            if u == v:
                raise DimacsParseError(f"self-loop at vertex {u}", lineno)
            edges.add((min(u, v) - 1, max(u, v) - 1))
        else:
            v = _int(parts[1], lineno, "vertex")
            if not 1 <= v <= n:
                raise DimacsParseError(f"vertex {v} outside 1..{n}", lineno)
            try:
                w = Fraction(parts[2])
            except ValueError:
                raise DimacsParseError(f"weight must be p/q, got {parts[2]!r}", lineno) from None
            if w < 0:
                raise DimacsParseError("weights must be non-negative", lineno)
            weights[v - 1] = w
    if n is None:
        raise DimacsParseError("missing 'p edge <n> <m>' line")
    if len(edges) != declared_m:
        warnings.warn(f"'p' line declares {declared_m} edges, found {len(edges)} distinct", stacklevel=2)
    w = tuple(weights.get(v, Fraction(1)) for v in range(n)) if weights else None
    return DimacsInstance(build_graph(n, edges), w, tuple(comments))


def parse_dimacs(text: str) -> Graph:
    return read_dimacs(text).graph


def write_dimacs(g: Graph, weights: Weights | None = None, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" if c else "c" for c in comments]
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    if weights is not None:
        for v, w in enumerate(weights):
            w = Fraction(w)
            lines.append(f"w {v + 1} {w.numerator}/{w.denominator}")
    return "\n".join(lines) + "\n"

"""Text formats: cycle notation, rotation-graph adjacency text and DOT export."""

from __future__ import annotations

import re
from typing import Optional

from .errors import ParseError
from .perm import Permutation
from .zigzag import GREEN, RotationGraph, ZigzagTrace


def _location(text: str, offset: int) -> tuple:
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


def parse_cycles(text: str) -> list:
    """Cycles of a cycle-notation string as lists of ``(point, offset)`` pairs.

    Points are positive integers separated by blanks or commas; ``()`` is an
    empty cycle.
    """
    cycles = []
    current = None
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace() or (ch == "," and current is not None):
            i += 1
        elif ch == "(":
            if current is not None:
                raise ParseError("nested '('", *_location(text, i))
            current = []
            open_at = i
            i += 1
        elif ch == ")":
            if current is None:
                raise ParseError("unmatched ')'", *_location(text, i))
            cycles.append(current)
            current = None
            i += 1
        elif ch.isdigit():
            if current is None:
                raise ParseError("point outside parentheses", *_location(text, i))
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j < n and not (text[j].isspace() or text[j] in ",)"):
                raise ParseError(f"unexpected character {text[j]!r}", *_location(text, j))
            current.append((int(text[i:j]), i))
            i = j
        else:
            raise ParseError(f"unexpected character {ch!r}", *_location(text, i))
    if current is not None:
        raise ParseError("unclosed '('", *_location(text, open_at))
    return cycles


def parse_permutation(text: str, size: Optional[int] = None) -> Permutation:
    """Permutation from cycle notation; unlisted points up to ``size`` are fixed.

    Without ``size`` the largest listed point is used.

    >>> parse_permutation("(1 2)", 4).cycle_string(fixed=True)
    '(1 2)(3)(4)'
    """
    cycles = parse_cycles(text)
    seen = set()
    largest = 0
    for cyc in cycles:
        for x, at in cyc:
            if x < 1:
                raise ParseError("points start at 1", *_location(text, at))
            if x in seen:
                raise ParseError(f"point {x} appears twice", *_location(text, at))
            if size is not None and x > size:
                raise ParseError(f"point {x} exceeds size {size}", *_location(text, at))
            seen.add(x)
            largest = max(largest, x)
    if size is None:
        size = largest
    return Permutation.from_cycles([[x for x, _ in cyc] for cyc in cycles], size)


def max_point(text: str) -> int:
    return max((x for cyc in parse_cycles(text) for x, _ in cyc), default=0)


def format_permutation(p: Permutation, verbose: bool = False) -> str:
    return p.cycle_string(fixed=verbose)


# -- graphs ----------------------------------------------------------------

def parse_graph(text: str) -> RotationGraph:
    """Graph from lines ``v: n1 n2 ...`` listing neighbors in rotation order.

    Blank lines and ``#`` comments are ignored.  Vertex names are kept as
    strings.  Every edge must be listed at both ends (parallel edges match by
    order of occurrence); self-loops are rejected.
    """
    adjacency = {}
    where = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if ":" not in line:
            raise ParseError("expected 'vertex: neighbors'", lineno, len(line) - len(line.lstrip()) + 1)
        head, _, rest = line.partition(":")
        v = head.strip()
        if not v or len(v.split()) != 1:
            raise ParseError("bad vertex name", lineno, 1)
        if v in adjacency:
            raise ParseError(f"vertex {v!r} listed twice", lineno, 1)
        adjacency[v] = []
        for match in re.finditer(r"\S+", rest):
            tok, col = match.group(), len(head) + 2 + match.start()
            if tok == v:
                raise ParseError(f"self-loop at {v!r}", lineno, col)
            adjacency[v].append(tok)
            where[(v, len(adjacency[v]) - 1)] = (lineno, col)

    counts = {}
    for v, nbrs in adjacency.items():
        for i, u in enumerate(nbrs):
            if u not in adjacency:
                raise ParseError(f"{v!r} lists unknown vertex {u!r}", *where[(v, i)])
            counts[(v, u)] = counts.get((v, u), 0) + 1
    for v, nbrs in adjacency.items():
        for i, u in enumerate(nbrs):
            if counts[(v, u)] != counts.get((u, v), 0):
                raise ParseError(
                    f"asymmetric adjacency: {v!r} lists {u!r} {counts[(v, u)]} time(s), "
                    f"{u!r} lists {v!r} {counts.get((u, v), 0)} time(s)", *where[(v, i)])
    return RotationGraph.from_adjacency(adjacency)


def format_graph(g: RotationGraph) -> str:
    lines = []
    for v, nbrs in g.adjacency().items():
        lines.append(f"{v}: " + " ".join(map(str, nbrs)) if nbrs else f"{v}:")
    return "\n".join(lines) + "\n"


def _dot_id(v) -> str:
    return '"' + str(v).replace('"', '\\"') + '"'


def to_dot(g: RotationGraph, trace: ZigzagTrace, name: str = "zigzag") -> str:
    """DOT text with every edge labelled by its color classes (``g1`` = green in component 1)."""
    classes = {}
    for i, comp in enumerate(trace.components, 1):
        for visit in comp:
            tag = ("g" if visit.color == GREEN else "r") + str(i)
            classes.setdefault(visit.edge, []).append(tag)
    lines = [f"graph {name} {{"]
    for v in g.vertices:
        lines.append(f"  {_dot_id(v)};")
    for e, (a, b) in enumerate(g.edges, 1):
        u, w = g.vertex_of(a), g.vertex_of(b)
        label = f"e{e}: " + " ".join(sorted(classes.get(e, [])))
        lines.append(f'  {_dot_id(u)} -- {_dot_id(w)} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"

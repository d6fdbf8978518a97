"""Graphs with rotation systems and their zigzag walks.

Graphs are dart based.  Each edge has two darts, each dart sits at one
vertex, and every vertex lists its darts in cyclic (rotation) order.  Turning
"left" at a vertex means taking the rotation successor of the arrival dart,
turning "right" means taking its predecessor.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Optional, Sequence

from .cmap import CombinatorialMap
from .perm import Permutation

GREEN = "green"
RED = "red"


class RotationGraph:
    """Graph with a fixed cyclic order of darts around every vertex.

    ``rotation`` maps each vertex to its darts in rotation order; ``pairs``
    lists the two darts of every edge.  Darts are arbitrary distinct
    integers.  Self-loops (both darts at one vertex) and parallel edges are
    allowed.
    """

    def __init__(self, rotation: Mapping[Hashable, Sequence[int]], pairs: Iterable[tuple]):
        self.vertices = list(rotation)
        self.rotation = {v: tuple(ds) for v, ds in rotation.items()}
        self._vertex = {}
        self._succ = {}
        self._pred = {}
        for v, ds in self.rotation.items():
            for i, d in enumerate(ds):
                if d in self._vertex:
                    raise ValueError(f"dart {d} appears at two vertices")
                self._vertex[d] = v
                self._succ[d] = ds[(i + 1) % len(ds)]
                self._pred[d] = ds[i - 1]
        self._mate = {}
        for a, b in pairs:
            if a == b:
                raise ValueError(f"dart {a} cannot be its own mate")
            for d in (a, b):
                if d not in self._vertex:
                    raise ValueError(f"dart {d} is not in any rotation")
                if d in self._mate:
                    raise ValueError(f"dart {d} belongs to two edges")
            self._mate[a] = b
            self._mate[b] = a
        if len(self._mate) != len(self._vertex):
            missing = sorted(set(self._vertex) - set(self._mate))
            raise ValueError(f"darts without an edge: {missing}")

        self.darts = sorted(self._vertex)
        # edges numbered 1.. in order of their smallest dart
        self._edge = {}
        self.edges = []
        for d in self.darts:
            if d not in self._edge:
                self.edges.append((d, self._mate[d]))
                self._edge[d] = self._edge[self._mate[d]] = len(self.edges)

    @classmethod
    def from_adjacency(cls, adjacency: Mapping[Hashable, Sequence[Hashable]]) -> "RotationGraph":
        """Build from neighbor lists given in rotation order.

        The ``j``-th occurrence of ``v`` in ``u``'s list is joined to the
        ``j``-th occurrence of ``u`` in ``v``'s list.  Self-loops are rejected
        here; use the dart constructor for them.

        >>> g = RotationGraph.from_adjacency({"a": ["b"], "b": ["a"]})
        >>> g.edge_count, g.next("a", 0)
        (1, 0)
        """
        rotation, slot_of, dart = {}, {}, 0
        for v, nbrs in adjacency.items():
            rotation[v] = []
            seen = {}
            for u in nbrs:
                if u == v:
                    raise ValueError(f"self-loop at {v!r}")
                if u not in adjacency:
                    raise ValueError(f"{v!r} lists unknown neighbor {u!r}")
                j = seen.get(u, 0)
                seen[u] = j + 1
                slot_of[(v, u, j)] = dart
                rotation[v].append(dart)
                dart += 1
        pairs = []
        for (v, u, j), d in slot_of.items():
            other = slot_of.get((u, v, j))
            if other is None:
                raise ValueError(f"edge {v!r}-{u!r} is not listed at {u!r}")
            if d < other:
                pairs.append((d, other))
        return cls(rotation, pairs)

    # -- navigation -------------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def vertex_of(self, dart: int) -> Hashable:
        return self._vertex[dart]

    def mate(self, dart: int) -> int:
        return self._mate[dart]

    def edge_of(self, dart: int) -> int:
        return self._edge[dart]

    def _check(self, vertex, dart):
        if self._vertex.get(dart, _MISSING) != vertex:
            raise ValueError(f"dart {dart} is not at vertex {vertex!r}")

    def next(self, vertex, dart: int) -> int:
        self._check(vertex, dart)
        return self._succ[dart]

    def previous(self, vertex, dart: int) -> int:
        self._check(vertex, dart)
        return self._pred[dart]

    def degree(self, vertex) -> int:
        return len(self.rotation[vertex])

    def adjacency(self) -> dict:
        """Neighbor lists in rotation order (the inverse of :meth:`from_adjacency`)."""
        return {v: [self._vertex[self._mate[d]] for d in ds] for v, ds in self.rotation.items()}

    def with_rotation(self, rotation: Mapping[Hashable, Sequence[int]]) -> "RotationGraph":
        """Same darts and edges, different cyclic orders."""
        return RotationGraph(rotation, self.edges)


_MISSING = object()


@dataclass(frozen=True)
class Visit:
    edge: int
    dart: int
    tail: Hashable
    head: Hashable
    color: str


@dataclass(frozen=True)
class ZigzagTrace:
    components: tuple

    @property
    def component_count(self) -> int:
        return len(self.components)

    def visit_counts(self) -> list:
        return sorted((len(c) for c in self.components), reverse=True)

    def visits_of(self, edge: int) -> list:
        return [v for comp in self.components for v in comp if v.edge == edge]


def zigzag_walk(g: RotationGraph, flips: Iterable[int] = ()) -> ZigzagTrace:
    """Walk alternately left (red) and right (green) until every edge has both colors.

    A component starts green on the smallest dart whose edge has not been
    colored green and ends when that state recurs.  Components whose index
    (0-based, in start order) is in ``flips`` are walked the other way, from
    the mate of that dart.
    """
    flips = set(flips)
    greened = set()
    components = []
    for first in g.darts:
        if g.edge_of(first) in greened:
            continue
        start = g.mate(first) if len(components) in flips else first
        visits = []
        d, color = start, GREEN
        while True:
            e = g.edge_of(d)
            arrive = g.mate(d)
            visits.append(Visit(e, d, g.vertex_of(d), g.vertex_of(arrive), color))
            if color == GREEN:
                greened.add(e)
                d, color = g.next(g.vertex_of(arrive), arrive), RED
            else:
                d, color = g.previous(g.vertex_of(arrive), arrive), GREEN
            if d == start and color == GREEN:
                break
        components.append(tuple(visits))
    return ZigzagTrace(tuple(components))


def color_classes(trace: ZigzagTrace) -> list:
    """Per component, its green edges then its red edges (``2k`` sets)."""
    classes = []
    for comp in trace.components:
        classes.append(frozenset(v.edge for v in comp if v.color == GREEN))
        classes.append(frozenset(v.edge for v in comp if v.color == RED))
    return classes


def walk_orientations(trace: ZigzagTrace) -> int:
    """Number of walks (one direction choice per component) sharing this trace's classes."""
    return 2 ** trace.component_count


def corner_labels(g: RotationGraph) -> dict:
    """Dart to corner: edge ``i`` gets corners ``2i-1`` (smaller dart) and ``2i``."""
    labels = {}
    for i, (a, b) in enumerate(g.edges, 1):
        labels[a] = 2 * i - 1
        labels[b] = 2 * i
    return labels


def to_map(g: RotationGraph) -> CombinatorialMap:
    """Combinatorial map whose vertex rotation follows ``g``'s rotation system."""
    labels = corner_labels(g)
    img = [0] * len(labels)
    for d, c in labels.items():
        img[c - 1] = labels[g._succ[d]]
    return CombinatorialMap(Permutation(img))


def from_map(cmap: CombinatorialMap) -> RotationGraph:
    """Graph of a map: one vertex per rotation orbit, darts are corners.

    Vertices are numbered 1.. in order of their smallest corner, so
    ``to_map(from_map(M)) == M``.
    """
    rotation = {i: tuple(cyc) for i, cyc in enumerate(cmap.rotation.cycles(), 1)}
    pairs = [(2 * i - 1, 2 * i) for i in range(1, cmap.edge_count + 1)]
    return RotationGraph(rotation, pairs)


def cut_edges_from_directions(trace: ZigzagTrace) -> set:
    """Edges whose two visits run in opposite directions."""
    first = {}
    opposite = set()
    for comp in trace.components:
        for v in comp:
            if v.edge in first:
                if first[v.edge] != v.dart:
                    opposite.add(v.edge)
            else:
                first[v.edge] = v.dart
    return opposite


# -- fixtures and generators ------------------------------------------------

def cycle_graph(n: int) -> RotationGraph:
    if n < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    return RotationGraph.from_adjacency({i: [(i - 2) % n + 1, i % n + 1] for i in range(1, n + 1)})


def planar_k4() -> RotationGraph:
    """K4 with the counter-clockwise rotations of a plane drawing (vertex 4 inside)."""
    return RotationGraph.from_adjacency({1: [2, 4, 3], 2: [3, 4, 1], 3: [1, 4, 2], 4: [1, 2, 3]})


def prism_adjacency() -> dict:
    """Triangular prism (complement of the 6-cycle) with plane rotations.

    Triangles 1-3-5 and 2-4-6, rungs 1-4, 2-5, 3-6.
    """
    return {
        1: [3, 5, 4],
        2: [4, 5, 6],
        3: [5, 1, 6],
        4: [6, 1, 2],
        5: [1, 3, 2],
        6: [2, 3, 4],
    }


def rotation_systems(g: RotationGraph, limit: Optional[int] = None) -> Iterator[RotationGraph]:
    """Every rotation system on ``g``'s darts (first dart of each vertex pinned)."""
    choices = []
    for v in g.vertices:
        ds = g.rotation[v]
        if len(ds) <= 2:
            choices.append([ds])
        else:
            choices.append([(ds[0],) + rest for rest in itertools.permutations(ds[1:])])
    for count, combo in enumerate(itertools.product(*choices)):
        if limit is not None and count >= limit:
            return
        yield g.with_rotation(dict(zip(g.vertices, combo)))


def search_rotation(g: RotationGraph, predicate: Callable[[RotationGraph], bool],
                    limit: Optional[int] = 100_000) -> Optional[RotationGraph]:
    """First rotation system of ``g`` satisfying ``predicate``, or ``None``."""
    for h in rotation_systems(g, limit):
        if predicate(h):
            return h
    return None


def random_rotation_graph(rng: random.Random, max_vertices: int = 8,
                          max_edges: int = 14, loops: bool = False) -> RotationGraph:
    """Random multigraph with a random rotation system (at least one edge)."""
    n = rng.randint(2, max_vertices)
    m = rng.randint(1, max_edges)
    rotation = {v: [] for v in range(1, n + 1)}
    pairs = []
    dart = 0
    for _ in range(m):
        u = rng.randint(1, n)
        v = rng.randint(1, n)
        if u == v and not loops:
            v = u % n + 1
        rotation[u].append(dart)
        rotation[v].append(dart + 1)
        pairs.append((dart, dart + 1))
        dart += 2
    for ds in rotation.values():
        rng.shuffle(ds)
    return RotationGraph(rotation, pairs)

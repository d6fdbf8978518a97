"""Combinatorial maps with the fixed inner involution and their knots.

A map on ``m`` edges is a vertex rotation ``P`` on the ``2m`` corners.  The
inner involution pairs corners ``(2i-1, 2i)``; everything else (faces, the
edge rotation, the knot and the structures the knot induces) is derived.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .errors import InvariantViolation
from .perm import Permutation, conjugate, cyclic_equal, inner_involution


def alternating_walk(first: Permutation, second: Permutation):
    """Knot of two involutions: ``first`` from green corners, ``second`` from red.

    Each orbit starts at the smallest corner not yet visited; that corner is
    green.  Returns ``(knot, green_corners)``.
    """
    n = first.size
    img = [0] * n
    green = set()
    seen = bytearray(n + 1)
    for start in range(1, n + 1):
        if seen[start]:
            continue
        x, on_green = start, True
        while True:
            seen[x] = 1
            if on_green:
                green.add(x)
                y = first(x)
            else:
                y = second(x)
            img[x - 1] = y
            x, on_green = y, not on_green
            if x == start:
                if not on_green:
                    raise InvariantViolation("walk closed on an odd step")
                break
    return Permutation(img), frozenset(green)


def colored_knot(first: Permutation, second: Permutation, green) -> Permutation:
    """Knot applying ``first`` on ``green`` corners and ``second`` on the rest.

    Raises :class:`InvariantViolation` unless the steps alternate colors.
    """
    n = first.size
    img = [first(x) if x in green else second(x) for x in range(1, n + 1)]
    for x, y in enumerate(img, 1):
        if (x in green) == (y in green):
            raise InvariantViolation(f"knot step {x} -> {y} does not change color")
    return Permutation(img)


@dataclass(frozen=True)
class KnotCharacteristic:
    """Knot orbit lengths halved, descending."""

    half_lengths: tuple

    @property
    def is_compact(self) -> bool:
        return len(self.half_lengths) == 1

    @property
    def edge_count(self) -> int:
        return sum(self.half_lengths)

    def __str__(self):
        return "<" + ",".join(map(str, self.half_lengths)) + ">"


def knot_characteristic(knot: Permutation) -> KnotCharacteristic:
    lengths = knot.cycle_type()
    if any(length % 2 for length in lengths):
        raise ValueError(f"knot has an odd orbit: {knot.cycle_string(fixed=True)}")
    return KnotCharacteristic(tuple(length // 2 for length in lengths))


def equivalent_knots(a: Permutation, b: Permutation) -> bool:
    """True if reversing some orbits of ``a`` turns it into ``b``."""
    if a.size != b.size:
        raise ValueError(f"size mismatch: {a.size} != {b.size}")
    b_orbit = {}
    for cyc in b.cycles():
        for x in cyc:
            b_orbit[x] = cyc
    for cyc in a.cycles():
        other = b_orbit[cyc[0]]
        if not (cyclic_equal(cyc, other) or cyclic_equal(cyc[::-1], other)):
            return False
    return True


@dataclass(frozen=True)
class KnotAnalysis:
    """The canonical knot of a map and everything fixing it induces.

    ``green_cycles`` and ``red_cycles`` are the two factors of ``P`` times the
    cycle edges, restricted to green and red corners respectively.
    """

    map: "CombinatorialMap"
    knot: Permutation
    green: frozenset
    red: frozenset
    cut_edges: Permutation
    cycle_edges: Permutation
    green_cycles: Permutation
    red_cycles: Permutation
    knotting: Permutation
    symmetric_knotting: Permutation
    structuring_knot: Permutation

    @property
    def characteristic(self) -> KnotCharacteristic:
        return knot_characteristic(self.knot)

    @property
    def inner(self) -> Permutation:
        return self.map.inner

    def square_roots(self) -> "SquareRoots":
        return square_roots_of_A(self)


@dataclass(frozen=True)
class SquareRoots:
    """Two knots whose squares agree with the symmetric knotting up to orbit reversal.

    ``nu1`` is the inner involution conjugated by the inverse green cycles,
    ``delta`` the same conjugated by the green cycles; each knot applies the
    inner involution on green corners and the partner involution on red ones.
    """

    nu1: Permutation
    delta: Permutation
    knot_nu1: Permutation
    knot_delta: Permutation


@dataclass(frozen=True)
class CombinatorialMap:
    """Map given by its vertex rotation on ``2m`` corners.

    >>> M = CombinatorialMap(Permutation.from_cycles([[1, 2]], 2))
    >>> M.edge_count, M.euler_characteristic()
    (1, 2)
    """

    rotation: Permutation

    def __post_init__(self):
        if self.rotation.size % 2:
            raise ValueError(f"a map needs an even number of corners, got {self.rotation.size}")

    @classmethod
    def from_cycles(cls, cycles, size: int) -> "CombinatorialMap":
        return cls(Permutation.from_cycles(cycles, size))

    @property
    def size(self) -> int:
        return self.rotation.size

    @property
    def edge_count(self) -> int:
        return self.rotation.size // 2

    @cached_property
    def inner(self) -> Permutation:
        return inner_involution(self.size)

    def face_rotation(self) -> Permutation:
        return self.rotation * self.inner

    def edge_rotation(self) -> Permutation:
        """``P * Q**-1``, cross-checked against the inner involution conjugated by ``P**-1``."""
        rho = self.rotation * self.face_rotation().inverse()
        if rho != conjugate(self.inner, self.rotation.inverse()):
            raise InvariantViolation("edge rotation formulas disagree")
        if not rho.is_involution(fixed_point_free=True):
            raise InvariantViolation("edge rotation is not a fixed-point-free involution")
        return rho

    def vertex_count(self) -> int:
        return len(self.rotation.cycles())

    def face_count(self) -> int:
        return len(self.face_rotation().cycles())

    def euler_characteristic(self) -> int:
        return self.vertex_count() - self.edge_count + self.face_count()

    def relabel(self, t: Permutation) -> "CombinatorialMap":
        """Map with every corner ``x`` renamed ``t(x)``."""
        return CombinatorialMap(conjugate(self.rotation, t))

    @cached_property
    def _analysis(self) -> KnotAnalysis:
        return analyse_knot(self)

    def knot(self) -> KnotAnalysis:
        return self._analysis


def face_rotation(cmap: CombinatorialMap) -> Permutation:
    return cmap.face_rotation()


def edge_rotation(cmap: CombinatorialMap) -> Permutation:
    return cmap.edge_rotation()


def euler_characteristic(cmap: CombinatorialMap) -> int:
    return cmap.euler_characteristic()


def analyse_knot(cmap: CombinatorialMap) -> KnotAnalysis:
    n = cmap.size
    P, pi = cmap.rotation, cmap.inner
    rho = cmap.edge_rotation()
    mu, green = alternating_walk(pi, rho)
    red = frozenset(range(1, n + 1)) - green

    # a pi-pair is a cut edge when its green corner is entered from a green corner
    P_inv = P.inverse()
    cut, cyc = {}, {}
    for a in green:
        b = pi(a)
        target = cut if P_inv(a) in green else cyc
        target[a], target[b] = b, a
    pi1 = Permutation.from_mapping(cut, n)
    pi2 = Permutation.from_mapping(cyc, n)

    mono = P * pi2
    gamma1 = mono.restrict(green)
    gamma2 = mono.restrict(red)
    alpha = mu.inverse() * P
    A = gamma1 * conjugate(gamma1, pi)
    nu1 = conjugate(pi, gamma1.inverse())
    eps = colored_knot(pi, nu1, green)

    return KnotAnalysis(
        map=cmap,
        knot=mu,
        green=green,
        red=red,
        cut_edges=pi1,
        cycle_edges=pi2,
        green_cycles=gamma1,
        red_cycles=gamma2,
        knotting=alpha,
        symmetric_knotting=A,
        structuring_knot=eps,
    )


def knot(cmap: CombinatorialMap) -> KnotAnalysis:
    return cmap.knot()


def structuring_knot(analysis: KnotAnalysis) -> Permutation:
    return analysis.structuring_knot


def square_roots_of_A(analysis: KnotAnalysis) -> SquareRoots:
    pi, gamma1 = analysis.inner, analysis.green_cycles
    nu1 = conjugate(pi, gamma1.inverse())
    delta = conjugate(pi, gamma1)
    return SquareRoots(
        nu1=nu1,
        delta=delta,
        knot_nu1=colored_knot(pi, nu1, analysis.green),
        knot_delta=colored_knot(pi, delta, analysis.green),
    )


def reverse_orbits(knot: Permutation, which) -> Permutation:
    """Reverse the orbits of ``knot`` whose minimum is in ``which``."""
    which = set(which)
    img = list(knot.images)
    for cyc in knot.cycles():
        if cyc[0] in which:
            for i, x in enumerate(cyc):
                img[x - 1] = cyc[i - 1]
    return Permutation(img)


def exact_knot_factorization(analysis: KnotAnalysis) -> Optional[Permutation]:
    """Orientation of the structuring knot ``e`` with ``P == knot * e * e * cut_edges``.

    Searches all orbit reversals of the structuring knot, fewest reversals
    first.  Returns ``None`` if no orientation works.
    """
    P = analysis.map.rotation
    eps = analysis.structuring_knot
    mu, pi1 = analysis.knot, analysis.cut_edges
    starts = [c[0] for c in eps.cycles()]
    for r in range(len(starts) + 1):
        for flip in itertools.combinations(starts, r):
            e = reverse_orbits(eps, flip)
            if mu * e * e * pi1 == P:
                return e
    return None

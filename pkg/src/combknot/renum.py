"""Knot normalization by renumbering corners.

A knot is normalized when its orbits are the consecutive blocks
``(1 2 .. l1)(l1+1 .. l1+l2)...``.  Any map is brought to that form by a
corner relabeling ``T``; ``T`` is the inverse of the substitution that lists
the knot's orbits one after another, each starting with an inner-involution
step.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .cmap import CombinatorialMap, KnotAnalysis, reverse_orbits
from .perm import Permutation


def block_rotation(lengths: Sequence[int]) -> Permutation:
    """Permutation whose orbits are consecutive increasing blocks of the given lengths.

    >>> block_rotation([4, 2]).cycle_string()
    '(1 2 3 4)(5 6)'
    """
    cycles, start = [], 1
    for length in lengths:
        if length < 1:
            raise ValueError(f"block lengths must be positive, got {length}")
        cycles.append(list(range(start, start + length)))
        start += length
    return Permutation.from_cycles(cycles, start - 1)


def is_block_rotation(p: Permutation) -> bool:
    return p == block_rotation([len(c) for c in p.cycles()])


def is_normalized_knot(cmap: CombinatorialMap) -> bool:
    return is_block_rotation(cmap.knot().knot)


def knot_is_partially_normalized(knot: Permutation, green) -> bool:
    """True if every inner step of ``knot`` (taken from a green corner) runs the same way.

    Either all of them go odd to even (``2i-1 -> 2i``) or all go even to odd.
    """
    steps = {knot(x) - x for x in green}
    return steps <= {1} or steps <= {-1}


def is_partially_normalized(cmap: CombinatorialMap) -> bool:
    a = cmap.knot()
    return knot_is_partially_normalized(a.knot, a.green)


def parity_partition_check(cmap: CombinatorialMap) -> bool:
    """True if the green corners are exactly the odd ones or exactly the even ones."""
    n = cmap.size
    green = cmap.knot().green
    odd = frozenset(range(1, n + 1, 2))
    even = frozenset(range(2, n + 1, 2))
    return green == odd or green == even


def rho_pair_of_normalized(k: int, l1: int, l2: int) -> tuple:
    """The ``k``-th step of the normalized orbit ``(l1 l1+1 .. l2)``.

    The step leaves ``k + l1 - 1`` and enters its cyclic successor.  Even ``k``
    give edge-rotation pairs, odd ``k`` inner pairs.

    >>> rho_pair_of_normalized(4, 1, 4)
    (4, 1)
    """
    length = l2 - l1 + 1
    if l1 < 1 or length < 2 or length % 2:
        raise ValueError(f"orbit {l1}..{l2} must have positive even length")
    if not 1 <= k <= length:
        raise ValueError(f"step {k} outside 1..{length}")
    return (k + l1 - 1, k % length + l1)


def parity_cut_test(cmap: CombinatorialMap, a: int) -> str:
    """``"cut"`` if ``a`` and ``P(a)`` have the same parity, else ``"cycle"``.

    Only meaningful for maps with partially normalized knot.  The label
    refers to the inner pair ``(P(a), P(rho(a)))``.
    """
    if not is_partially_normalized(cmap):
        raise ValueError("map does not have a partially normalized knot")
    if not 1 <= a <= cmap.size:
        raise ValueError(f"corner {a} outside 1..{cmap.size}")
    return "cut" if a % 2 == cmap.rotation(a) % 2 else "cycle"


@dataclass(frozen=True)
class RenumberingPlan:
    """One way of laying a knot's orbits end to end.

    ``orbit_order`` names each orbit by its smallest corner.  ``knot`` is the
    oriented knot the plan reads, so ``knot * T == T * target``.
    """

    orbit_order: tuple
    orientations: tuple
    starts: tuple
    string: tuple
    knot: Permutation
    B: Permutation
    T: Permutation
    target: Permutation

    def apply(self, cmap: CombinatorialMap) -> CombinatorialMap:
        return cmap.relabel(self.T)


def _plan_for(knot: Permutation, green, inner: Permutation, orbit_order=None,
              orientations=None, starts=None) -> RenumberingPlan:
    orbits = {c[0]: c for c in knot.cycles()}
    if orbit_order is None:
        orbit_order = sorted(orbits)
    orbit_order = tuple(orbit_order)
    if sorted(orbit_order) != sorted(orbits):
        raise ValueError(f"orbit order {orbit_order} is not a permutation of the orbits {sorted(orbits)}")
    if orientations is None:
        orientations = (True,) * len(orbit_order)
    orientations = tuple(bool(o) for o in orientations)
    if len(orientations) != len(orbit_order):
        raise ValueError("one orientation per orbit is required")

    if starts is None:
        starts = []
        for key, forward in zip(orbit_order, orientations):
            first_green = min(x for x in orbits[key] if x in green)
            starts.append(first_green if forward else inner(first_green))
    starts = tuple(starts)

    inv = knot.inverse()
    string = []
    for key, forward, s in zip(orbit_order, orientations, starts):
        orbit = orbits[key]
        if s not in orbit:
            raise ValueError(f"start corner {s} is not on the orbit of {key}")
        nxt = knot if forward else inv
        if nxt(s) != inner(s):
            raise ValueError(
                f"orbit {key} read {'forward' if forward else 'reversed'} from {s} "
                "does not begin with an inner step")
        x = s
        for _ in orbit:
            string.append(x)
            x = nxt(x)

    B = Permutation(string)
    oriented = reverse_orbits(knot, [k for k, f in zip(orbit_order, orientations) if not f])
    return RenumberingPlan(
        orbit_order=orbit_order,
        orientations=orientations,
        starts=starts,
        string=tuple(string),
        knot=oriented,
        B=B,
        T=B.inverse(),
        target=block_rotation([len(orbits[k]) for k in orbit_order]),
    )


def build_plan(analysis: KnotAnalysis, orbit_order=None, orientations=None,
               starts=None) -> RenumberingPlan:
    """Plan normalizing the map's knot.

    Defaults: orbits by smallest corner, all forward, each read from its
    smallest green corner.  A reversed orbit defaults to starting at the
    inner partner of that corner.  A start whose first step (in the chosen
    direction) is not an inner step raises :class:`ValueError`.
    """
    return _plan_for(analysis.knot, analysis.green, analysis.inner,
                     orbit_order, orientations, starts)


def structuring_plan(analysis: KnotAnalysis) -> RenumberingPlan:
    """Canonical plan normalizing the structuring knot instead of the knot."""
    return _plan_for(analysis.structuring_knot, analysis.green, analysis.inner)


def normalize(cmap: CombinatorialMap, plan: Optional[RenumberingPlan] = None):
    """Renumber ``cmap`` so its knot is normalized; returns ``(new_map, plan)``."""
    if plan is None:
        plan = build_plan(cmap.knot())
    return plan.apply(cmap), plan


def normalize_structuring(cmap: CombinatorialMap):
    plan = structuring_plan(cmap.knot())
    return plan.apply(cmap), plan


def enumerate_plans(analysis: KnotAnalysis) -> Iterator[RenumberingPlan]:
    """All ``2**k * k!`` plans for a knot with ``k`` orbits."""
    keys = [c[0] for c in analysis.knot.cycles()]
    for order in itertools.permutations(keys):
        for orientations in itertools.product((True, False), repeat=len(keys)):
            yield build_plan(analysis, order, orientations)

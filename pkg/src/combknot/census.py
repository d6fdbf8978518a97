"""Counting formulas and the small-map census.

Everything here is exact integer arithmetic.  The census side enumerates
every vertex rotation on ``2m`` corners (or a seeded sample of them) and runs
the per-map theorem checks in :func:`check_map`.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Optional

from .cmap import CombinatorialMap, equivalent_knots, exact_knot_factorization
from .perm import Permutation, conjugate
from .renum import (
    block_rotation,
    enumerate_plans,
    is_block_rotation,
    is_partially_normalized,
    knot_is_partially_normalized,
    normalize,
    normalize_structuring,
    parity_cut_test,
    parity_partition_check,
    rho_pair_of_normalized,
)

EXHAUSTIVE_MAX_EDGES = 4
SAMPLED_MAX_EDGES = 8
FACTORIZATION_MAX_EDGES = 10


# -- partitions -----------------------------------------------------------

@lru_cache(maxsize=None)
def _pr(n: int, j: int) -> int:
    # partitions of n into parts <= j: all ones, plus i copies of a largest part k >= 2
    total = 1
    for k in range(2, j + 1):
        for i in range(1, n // k + 1):
            total += _pr(n - i * k, k - 1)
    return total


def pr(n: int, j: int) -> int:
    """Number of partitions of ``n`` into parts no larger than ``j``.

    >>> pr(1, 1), pr(5, 2), pr(5, 5)
    (1, 3, 7)
    """
    if n < 1 or j < 1:
        raise ValueError(f"pr needs positive arguments, got pr({n}, {j})")
    return _pr(n, j)


def partition_count(n: int) -> int:
    """p(n); p(0) is 1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _pr(n, max(n, 1))


def partitions(n: int, largest: Optional[int] = None) -> Iterator[tuple]:
    """Partitions of ``n`` as non-increasing tuples, in reverse lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def normalized_knot_shapes(m: int) -> Iterator[Permutation]:
    """One block-rotation knot per partition of ``m``, blocks in descending length."""
    for parts in partitions(m):
        yield block_rotation([2 * p for p in parts])


def count_normalized_knots(m: int) -> int:
    if m < 1:
        raise ValueError("m must be positive")
    return partition_count(m)


def renumbering_count(k: int) -> int:
    """``2**k * k!``: orientations times orders of ``k`` knot orbits."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return 2 ** k * factorial(k)


def renumbered_knot_counts(m: int) -> dict:
    """Two readings of "normalized knots times their renumberings".

    ``per_partition_sum`` adds ``2**k * k!`` over partitions of ``m`` with
    ``k`` parts.  ``flat_product`` is ``p(m) * k! * 2**k`` for each fixed
    ``k`` from 1 to ``m``.
    """
    if m < 1:
        raise ValueError("m must be positive")
    p = partition_count(m)
    return {
        "per_partition_sum": sum(renumbering_count(len(parts)) for parts in partitions(m)),
        "flat_product": {k: p * renumbering_count(k) for k in range(1, m + 1)},
    }


def double_factorial(n: int) -> int:
    result = 1
    while n > 1:
        result *= n
        n -= 2
    return result


def factorization_identity(m: int) -> bool:
    """``(2m)! == (2m-1)!! * 2**m * m!``, evaluated exactly."""
    if not 1 <= m <= FACTORIZATION_MAX_EDGES:
        raise ValueError(f"m must be in 1..{FACTORIZATION_MAX_EDGES}, got {m}")
    return factorial(2 * m) == double_factorial(2 * m - 1) * 2 ** m * factorial(m)


# -- map enumeration ----------------------------------------------------

def enumerate_maps(m: int) -> Iterator[CombinatorialMap]:
    """Every vertex rotation on ``2m`` corners, in lexicographic order of images."""
    if not 0 <= m <= EXHAUSTIVE_MAX_EDGES:
        raise ValueError(f"exhaustive enumeration is limited to m <= {EXHAUSTIVE_MAX_EDGES}, got {m}")
    for img in itertools.permutations(range(1, 2 * m + 1)):
        yield CombinatorialMap(Permutation(img))


def sample_maps(m: int, count: int, seed: int = 0) -> Iterator[CombinatorialMap]:
    """``count`` uniformly random maps on ``2m`` corners from a seeded generator."""
    if not 0 <= m <= SAMPLED_MAX_EDGES:
        raise ValueError(f"sampling is limited to m <= {SAMPLED_MAX_EDGES}, got {m}")
    rng = random.Random(seed)
    points = list(range(1, 2 * m + 1))
    for _ in range(count):
        rng.shuffle(points)
        yield CombinatorialMap(Permutation(points))


@dataclass
class EvenCensus:
    total: int
    even: int
    injective: bool


def even_permutation_census(m: int) -> EvenCensus:
    """Even rotations among all maps on ``m`` edges, and injectivity of ``P -> (P, P*pi)``."""
    total = even = 0
    pairs = set()
    for cmap in enumerate_maps(m):
        total += 1
        even += cmap.rotation.is_even()
        pairs.add((cmap.rotation, cmap.face_rotation()))
    return EvenCensus(total=total, even=even, injective=len(pairs) == total)


# -- theorem suite ------------------------------------------------------

THEOREMS = ("1", "2", "6", "7", "8", "9", "12", "13", "14")
CHECKS = ("identities", "coloring", "normalize") + THEOREMS


def _straddles(pairing: Permutation, green) -> bool:
    return all((x in green) != (pairing(x) in green) for x in range(1, pairing.size + 1))


def _check_normalized_extras(cmap: CombinatorialMap, out: dict) -> None:
    """Checks that apply to maps with (partially) normalized knot."""
    a = cmap.knot()
    n = cmap.size
    normalized = is_block_rotation(a.knot)
    partial = is_partially_normalized(cmap)

    out.setdefault("8", []).append(parity_partition_check(cmap) == partial)

    if normalized:
        odd = frozenset(range(1, n + 1, 2))
        out.setdefault("7", []).append(a.green == odd)
        rho = cmap.edge_rotation()
        ok = True
        for cyc in a.knot.cycles():
            l1, l2 = cyc[0], cyc[-1]
            for k in range(2, len(cyc) + 1, 2):
                x, y = rho_pair_of_normalized(k, l1, l2)
                ok &= rho(x) == y
        out.setdefault("6", []).append(ok)
        out.setdefault("14", []).append(knot_is_partially_normalized(a.structuring_knot, a.green))

    if partial:
        P, rho, cut = cmap.rotation, cmap.edge_rotation(), a.cut_edges
        ok = True
        for x in range(1, n + 1):
            # (P(x), P(rho(x))) is always an inner pair
            ok &= P(rho(x)) == a.inner(P(x))
            ok &= (parity_cut_test(cmap, x) == "cut") == (cut(P(x)) != P(x))
        out.setdefault("9", []).append(ok)


def check_map(cmap: CombinatorialMap, plans: bool = True) -> dict:
    """Run every applicable check on ``cmap``.

    Returns ``{check: [bool, ...]}``; a check appears only when it applied.
    """
    out = {}
    n = cmap.size
    P = cmap.rotation
    a = cmap.knot()
    pi = a.inner
    mu, green = a.knot, a.green
    pi1, pi2 = a.cut_edges, a.cycle_edges
    g1, g2 = a.green_cycles, a.red_cycles
    A = a.symmetric_knotting

    out["2"] = [
        all(len(c) % 2 == 0 for c in mu.cycles())
        and _straddles(mu, green)
        and cmap.edge_rotation().is_involution(fixed_point_free=True)
    ]

    supports_split = all((pi1(x) == x) != (pi2(x) == x) for x in range(1, n + 1))
    out["identities"] = [
        pi1 * pi2 == pi
        and supports_split
        and len(green) == n // 2
        and g1 * g2 * pi2 == P
        and mu * a.knotting == P
        and mu * A * pi1 == P
        and mu == g2 * pi * g1.inverse()
        and A == g1 * conjugate(g1, pi)
    ]

    mono = all(len({x in green for x in c}) == 1 for c in (P * pi2).cycles())
    alternating = _straddles(P * pi1, green)
    out["coloring"] = [
        mono and alternating and _straddles(pi, green) and _straddles(cmap.edge_rotation(), green)
    ]

    eps = a.structuring_knot
    out["1"] = [equivalent_knots(eps * eps, A) and exact_knot_factorization(a) is not None]

    normal, plan = normalize(cmap)
    out["normalize"] = [
        is_block_rotation(normal.knot().knot)
        and conjugate(normal.rotation, plan.T.inverse()) == P
    ]

    if plans:
        k = len(mu.cycles())
        seen, ok12, ok13 = set(), True, True
        for p in enumerate_plans(a):
            seen.add(p.T)
            ok12 &= p.knot * p.T == p.T * p.target
            ok12 &= is_block_rotation(p.apply(cmap).knot().knot)
            ok13 &= conjugate(p.T, pi) == p.T
        out["12"] = [ok12 and len(seen) == renumbering_count(k)]
        out["13"] = [ok13]

    _check_normalized_extras(cmap, out)
    if normal != cmap:
        _check_normalized_extras(normal, out)

    # the other direction: normalize the structuring knot, the knot becomes partial
    s_map, _ = normalize_structuring(cmap)
    s = s_map.knot()
    out.setdefault("14", []).append(
        is_block_rotation(s.structuring_knot) and knot_is_partially_normalized(s.knot, s.green)
    )
    return out


@dataclass
class SuiteReport:
    total: int = 0
    passed: int = 0
    checked: dict = field(default_factory=lambda: {c: 0 for c in CHECKS})
    ok: dict = field(default_factory=lambda: {c: 0 for c in CHECKS})
    first_failure: Optional[tuple] = None

    @property
    def all_passed(self) -> bool:
        return self.passed == self.total

    def add(self, cmap: CombinatorialMap, results: dict) -> None:
        self.total += 1
        failed = []
        for name, values in results.items():
            self.checked[name] += len(values)
            self.ok[name] += sum(values)
            if not all(values):
                failed.append(name)
        if failed:
            if self.first_failure is None:
                self.first_failure = (cmap, failed)
        else:
            self.passed += 1


def run_suite(maps: Iterable[CombinatorialMap], plans: bool = True) -> SuiteReport:
    report = SuiteReport()
    for cmap in maps:
        report.add(cmap, check_map(cmap, plans=plans))
    return report

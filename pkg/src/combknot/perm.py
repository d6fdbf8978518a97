"""Permutations on the point set ``{1, ..., n}``.

Products are read left to right: ``(a * b)(x) == b(a(x))``, so ``x^(ab) =
(x^a)^b``.  This is the only composition order offered anywhere in the
package.  Conjugation ``a ^ t`` is ``t**-1 * a * t``, which relabels every
point ``x`` of ``a`` as ``t(x)``.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class Permutation:
    """Immutable bijection of ``{1, ..., n}``.

    Build one from an image list (``Permutation([2, 1, 3])``), from cycles
    (:meth:`from_cycles`) or as :meth:`identity`.  Instances are hashable and
    compare equal when size and images agree.

    >>> p = Permutation.from_cycles([[1, 2, 3]], 4)
    >>> p(1), p(3), p(4)
    (2, 1, 4)
    >>> (p * p.inverse()).is_identity()
    True
    """

    __slots__ = ("_img", "_hash")

    def __init__(self, images: Iterable[int] = ()):
        img = tuple(images)
        n = len(img)
        if sorted(img) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {img!r}")
        self._img = img
        self._hash = hash(img)

    @classmethod
    def _trusted(cls, img: tuple) -> "Permutation":
        p = cls.__new__(cls)
        p._img = img
        p._hash = hash(img)
        return p

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        if n < 0:
            raise ValueError("size must be non-negative")
        return cls._trusted(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        """Permutation of size ``n`` with the given disjoint cycles.

        Points not listed are fixed.  Repeated or out-of-range points raise
        :class:`ValueError`.
        """
        img = list(range(1, n + 1))
        seen = set()
        for cyc in cycles:
            for i, x in enumerate(cyc):
                if not 1 <= x <= n:
                    raise ValueError(f"point {x} outside 1..{n}")
                if x in seen:
                    raise ValueError(f"point {x} appears twice")
                seen.add(x)
                img[x - 1] = cyc[(i + 1) % len(cyc)]
        return cls._trusted(tuple(img))

    @classmethod
    def from_mapping(cls, mapping: dict, n: int) -> "Permutation":
        """Permutation fixing every point not in ``mapping``."""
        return cls(mapping.get(x, x) for x in range(1, n + 1))

    # -- basic protocol -------------------------------------------------

    @property
    def size(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple:
        """Images ``(p(1), ..., p(n))``."""
        return self._img

    def __call__(self, x: int) -> int:
        return self._img[x - 1]

    def __len__(self) -> int:
        return len(self._img)

    def __eq__(self, other):
        if isinstance(other, Permutation):
            return self._img == other._img
        return NotImplemented

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Permutation.from_cycles({self.cycles(fixed=False)!r}, {self.size})"

    def __str__(self):
        return self.cycle_string()

    # -- algebra ----------------------------------------------------------

    def _check_size(self, other: "Permutation") -> None:
        if self.size != other.size:
            raise ValueError(f"size mismatch: {self.size} != {other.size}")

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        self._check_size(other)
        b = other._img
        return Permutation._trusted(tuple(b[x - 1] for x in self._img))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self._img)
        for i, x in enumerate(self._img, 1):
            inv[x - 1] = i
        return Permutation._trusted(tuple(inv))

    def __invert__(self) -> "Permutation":
        return self.inverse()

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Permutation.identity(self.size)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __xor__(self, t: "Permutation") -> "Permutation":
        if not isinstance(t, Permutation):
            return NotImplemented
        return conjugate(self, t)

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self._img, 1))

    def is_involution(self, fixed_point_free: bool = False) -> bool:
        img = self._img
        for i, x in enumerate(img, 1):
            if img[x - 1] != i:
                return False
            if fixed_point_free and x == i:
                return False
        return True

    def restrict(self, points: Iterable[int]) -> "Permutation":
        """Keep ``p`` on ``points`` (which must be a union of orbits), fix the rest."""
        pts = set(points)
        img = tuple(self._img[x - 1] if x in pts else x for x in range(1, self.size + 1))
        return Permutation(img)

    # -- orbits -------------------------------------------------------------

    def cycles(self, fixed: bool = True) -> list:
        """Disjoint cycles, each starting at its minimum, sorted by minimum."""
        img = self._img
        seen = bytearray(len(img) + 1)
        out = []
        for start in range(1, len(img) + 1):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = 1
            x = img[start - 1]
            while x != start:
                cyc.append(x)
                seen[x] = 1
                x = img[x - 1]
            if fixed or len(cyc) > 1:
                out.append(cyc)
        return out

    def cycle_type(self) -> list:
        """Orbit lengths in descending order (fixed points included)."""
        return sorted((len(c) for c in self.cycles()), reverse=True)

    def parity(self) -> int:
        """0 for even, 1 for odd."""
        return (self.size - len(self.cycles())) % 2

    def is_even(self) -> bool:
        return self.parity() == 0

    def cycle_string(self, fixed: bool = False) -> str:
        """Cycle notation; the identity is ``"()"``.

        >>> Permutation([2, 1, 3]).cycle_string()
        '(1 2)'
        >>> Permutation([2, 1, 3]).cycle_string(fixed=True)
        '(1 2)(3)'
        """
        cycles = self.cycles(fixed=fixed)
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Left-to-right product: apply ``a`` first, then ``b``."""
    return a * b


def inverse(a: Permutation) -> Permutation:
    return a.inverse()


def conjugate(a: Permutation, t: Permutation) -> Permutation:
    """``a^t = t**-1 * a * t``: the permutation mapping ``t(x)`` to ``t(a(x))``."""
    a._check_size(t)
    ai, ti = a._img, t._img
    img = [0] * len(ai)
    for x, y in enumerate(ai, 1):
        img[ti[x - 1] - 1] = ti[y - 1]
    return Permutation._trusted(tuple(img))


def orbits(a: Permutation) -> list:
    return a.cycles(fixed=True)


def parity(a: Permutation) -> str:
    return "even" if a.is_even() else "odd"


def power(a: Permutation, k: int) -> Permutation:
    return a ** k


def inner_involution(n: int) -> Permutation:
    """The fixed pairing ``(1 2)(3 4)...(n-1 n)``; ``n`` must be even."""
    if n % 2:
        raise ValueError(f"inner involution needs an even number of points, got {n}")
    return Permutation._trusted(tuple(x + 1 if x % 2 else x - 1 for x in range(1, n + 1)))


def cyclic_equal(a: Sequence[int], b: Sequence[int]) -> bool:
    """True if ``b`` is a rotation of ``a``."""
    if len(a) != len(b):
        return False
    if not a:
        return True
    try:
        i = list(b).index(a[0])
    except ValueError:
        return False
    return list(b[i:]) + list(b[:i]) == list(a)


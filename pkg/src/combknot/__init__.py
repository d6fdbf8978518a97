"""Combinatorial maps, their knots, knot normalization and zigzag walks."""

from .perm import Permutation, compose, conjugate, inner_involution, inverse, orbits, parity, power
from .cmap import (
    CombinatorialMap,
    KnotAnalysis,
    KnotCharacteristic,
    equivalent_knots,
    knot_characteristic,
)
from .errors import InvariantViolation, ParseError

__all__ = [
    "Permutation",
    "compose",
    "conjugate",
    "inner_involution",
    "inverse",
    "orbits",
    "parity",
    "power",
    "CombinatorialMap",
    "KnotAnalysis",
    "KnotCharacteristic",
    "equivalent_knots",
    "knot_characteristic",
    "InvariantViolation",
    "ParseError",
]

__version__ = "0.1.0"

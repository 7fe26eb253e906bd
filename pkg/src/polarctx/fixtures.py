"""Small ready-made configurations used in docs and tests."""

from __future__ import annotations

from .contextuality import QuantumConfiguration
from .geometry import Family, enumerate_family, polar_space
from .pauli import parse_pauli

_SQUARE_POINTS = ("XI", "IX", "XX", "IY", "YI", "YY", "XY", "YX", "ZZ")
_SQUARE_CONTEXTS = (
    (0, 1, 2), (3, 4, 5), (6, 7, 8),  # rows
    (0, 3, 6), (1, 4, 7), (2, 5, 8),  # columns
)


def mermin_peres_square() -> QuantumConfiguration:
    """The 9-observable, 6-context square; contextual with degree 1.

    Exactly one context (XX, YY, ZZ) multiplies to minus identity.
    """
    return QuantumConfiguration(
        n=2,
        points=tuple(parse_pauli(s, 2).coords for s in _SQUARE_POINTS),
        contexts=_SQUARE_CONTEXTS,
        source="mermin-peres-square",
    )


def doily() -> QuantumConfiguration:
    """The 15 two-qubit observables with all 15 lines as contexts."""
    space = polar_space(2)
    member = enumerate_family(space, Family.LINES)[0]
    return QuantumConfiguration.from_member(space, member)

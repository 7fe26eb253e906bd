"""N-qubit Pauli observables as binary symplectic vectors.

An observable on n qubits is encoded by coordinates
``(a1, b1, ..., an, bn)`` where factor i is ``Z^ai X^bi`` up to phase.
The canonical representative of a coordinate vector uses ``Y = i X Z``
on every qubit where ``ai = bi = 1``, which makes it Hermitian; an
observable stores its phase (a power of i) relative to that
representative, so phase_exp 0 and 2 are the Hermitian sign classes
``+1`` and ``-1`` and odd phases are non-Hermitian products.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import NamedTuple, Optional, Sequence, Union

from .gf2 import DimensionMismatchError, GF2Vector

# Even bit positions of a coordinate int hold the a (Z) part, odd bits the
# b (X) part.  Masks sized on demand; 64 qubits is far beyond practical use.
_A_MASK = int("01" * 256, 2)  # bits 0, 2, 4, ... set


def _amask(width: int) -> int:
    return _A_MASK & ((1 << width) - 1)


def _zpart(bits: int) -> int:
    """Per-qubit a_i, packed on even positions."""
    return bits & _A_MASK


def _xpart(bits: int) -> int:
    """Per-qubit b_i, shifted down to even positions."""
    return (bits >> 1) & _A_MASK


def _y_count(bits: int) -> int:
    """Number of qubits with a_i = b_i = 1."""
    return (_zpart(bits) & _xpart(bits)).bit_count()


def symplectic_form(x: GF2Vector, y: GF2Vector) -> int:
    """The symplectic product sum of a_i(x) b_i(y) + b_i(x) a_i(y) mod 2.

    Vanishes exactly when the two observables commute.
    """
    if len(x) != len(y):
        raise DimensionMismatchError("symplectic form needs equal lengths")
    if len(x) % 2:
        raise ValueError("symplectic form needs an even number of coordinates")
    xb, yb = x.bits, y.bits
    cross = (_zpart(xb) & _xpart(yb)) ^ (_xpart(xb) & _zpart(yb))
    return cross.bit_count() & 1


_LETTERS = {(0, 0): "I", (0, 1): "X", (1, 0): "Z", (1, 1): "Y"}
_COORDS = {v: k for k, v in _LETTERS.items()}
_PHASE_PREFIX = {0: "", 1: "i", 2: "-", 3: "-i"}


@dataclass(frozen=True)
class PauliObservable:
    """A scalar multiple i^phase_exp of the canonical Hermitian element."""

    coords: GF2Vector
    phase_exp: int = 0

    def __post_init__(self):
        if len(self.coords) % 2 or len(self.coords) == 0:
            raise ValueError("coordinates must have positive even length")
        if not 0 <= self.phase_exp <= 3:
            raise ValueError("phase_exp must be reduced mod 4")

    @property
    def num_qubits(self) -> int:
        return len(self.coords) // 2

    @property
    def is_identity(self) -> bool:
        return self.coords.is_zero()

    @property
    def sign(self) -> Optional[int]:
        """+1 or -1 for the Hermitian phases, None for odd (non-real) ones."""
        if self.phase_exp == 0:
            return 1
        if self.phase_exp == 2:
            return -1
        return None

    def letters(self) -> str:
        """The per-qubit letters, without any phase prefix."""
        bits = self.coords.bits
        out = []
        for _ in range(self.num_qubits):
            out.append(_LETTERS[(bits & 1, (bits >> 1) & 1)])
            bits >>= 2
        return "".join(out)

    def __str__(self) -> str:
        return _PHASE_PREFIX[self.phase_exp] + self.letters()

    def _zx_phase(self) -> int:
        # Phase relative to the bare tensor of Z^a X^b factors; the
        # canonical element carries i^(3 #Y) of its own.
        return (self.phase_exp + 3 * _y_count(self.coords.bits)) % 4

    def __mul__(self, other: "PauliObservable") -> "PauliObservable":
        if not isinstance(other, PauliObservable):
            return NotImplemented
        if len(other.coords) != len(self.coords):
            raise DimensionMismatchError("observables act on different qubit counts")
        sb, ob = self.coords.bits, other.coords.bits
        # Pushing each X of the left factor past each Z of the right factor
        # on the same qubit costs a sign.
        swaps = (_xpart(sb) & _zpart(ob)).bit_count()
        t = (self._zx_phase() + other._zx_phase() + 2 * swaps) % 4
        coords = GF2Vector(sb ^ ob, len(self.coords))
        phase = (t - 3 * _y_count(coords.bits)) % 4
        return PauliObservable(coords, phase)


class PauliProduct(NamedTuple):
    """Outcome of multiplying a sequence of observables."""

    result: PauliObservable
    sign: Optional[int]  # +1 or -1 when the product is Hermitian, else None


def rho(v: GF2Vector) -> PauliObservable:
    """Canonical observable for a nonzero coordinate vector.

    The zero vector encodes the identity, which is not a point of the
    polar space, so it is rejected.
    """
    if v.is_zero():
        raise ValueError("the zero vector is the trivial operator and is excluded")
    return PauliObservable(v, 0)


def pi(o: PauliObservable) -> GF2Vector:
    """Coordinates of an observable; the inverse of rho up to phase."""
    return o.coords


def product_sign(factors: Sequence[PauliObservable]) -> PauliProduct:
    """Multiply the factors in order and report the resulting sign class.

    Any non-empty sequence of observables on a common qubit count is
    accepted; the product need not be proportional to the identity.
    """
    factors = list(factors)
    if not factors:
        raise ValueError("product of an empty sequence of observables")
    result = reduce(lambda x, y: x * y, factors)
    return PauliProduct(result, result.sign)


def is_symmetric(o: PauliObservable) -> bool:
    """True when the canonical representative is its own transpose.

    Holds exactly when the number of Y factors is even.
    """
    return _y_count(o.coords.bits) % 2 == 0


def parse_pauli(text: str, num_qubits: Optional[int] = None) -> PauliObservable:
    """Parse strings like ``XX``, ``-IZ`` or ``0110`` bit strings.

    A leading ``-`` (ASCII or U+2212) selects the negative Hermitian
    class.  Letter strings give one qubit per letter; bit strings must
    have even length and are read as (a1, b1, a2, b2, ...).
    """
    s = text.strip()
    phase = 0
    if s.startswith("-") or s.startswith("−"):
        phase = 2
        s = s[1:]
    elif s.startswith("+"):
        s = s[1:]
    if not s:
        raise ValueError(f"empty observable in {text!r}")
    if set(s) <= {"0", "1"}:
        # No overlap with the letter alphabet, so this is unambiguous.
        if len(s) % 2:
            raise ValueError(f"bit string {text!r} has odd length")
        coords = GF2Vector(int(s[::-1], 2), len(s))
    else:
        bits = 0
        for i, letter in enumerate(s):
            try:
                a, b = _COORDS[letter]
            except KeyError:
                raise ValueError(f"invalid Pauli letter {letter!r} in {text!r}") from None
            bits |= (a | (b << 1)) << (2 * i)
        coords = GF2Vector(bits, 2 * len(s))
    o = PauliObservable(coords, phase)
    if num_qubits is not None and o.num_qubits != num_qubits:
        raise ValueError(
            f"{text!r} acts on {o.num_qubits} qubits, expected {num_qubits}")
    return o


def format_pauli(o: PauliObservable) -> str:
    """Inverse of parse_pauli for Hermitian observables."""
    if o.phase_exp % 2:
        raise ValueError("non-Hermitian products have no sign form")
    return str(o)

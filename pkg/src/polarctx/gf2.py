"""Bit-packed linear algebra over GF(2).

Vectors are stored as Python integers, bit ``j`` holding coordinate ``j``
(LSB first), so XOR is vector addition and ``int.bit_count`` is the Hamming
weight.  Everything here is exact; there is no floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence, Union

from . import _sweep


class DimensionMismatchError(ValueError):
    """Operands have incompatible dimensions."""


def _parity(x: int) -> int:
    return x.bit_count() & 1


class GF2Vector:
    """Immutable vector over GF(2) with a fixed length.

    Coordinates live in a single int, bit ``j`` = coordinate ``j``.
    """

    __slots__ = ("_bits", "_len")

    def __init__(self, bits: int, length: int):
        if length < 0:
            raise ValueError("length must be nonnegative")
        if bits < 0 or bits >> length:
            raise ValueError("bits outside the stated length")
        self._bits = bits
        self._len = length

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "GF2Vector":
        """Build from an iterable of 0/1 coordinates, index 0 first."""
        value = 0
        n = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError("coordinates must be 0 or 1")
            value |= b << n
            n += 1
        return cls(value, n)

    @classmethod
    def zeros(cls, length: int) -> "GF2Vector":
        return cls(0, length)

    @property
    def bits(self) -> int:
        """The packed integer value (bit j = coordinate j)."""
        return self._bits

    def __len__(self) -> int:
        return self._len

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < self._len:
            raise IndexError("coordinate index out of range")
        return (self._bits >> j) & 1

    def __iter__(self) -> Iterator[int]:
        return ((self._bits >> j) & 1 for j in range(self._len))

    def __xor__(self, other: "GF2Vector") -> "GF2Vector":
        if not isinstance(other, GF2Vector):
            return NotImplemented
        if other._len != self._len:
            raise DimensionMismatchError(
                f"cannot add vectors of length {self._len} and {other._len}")
        return GF2Vector(self._bits ^ other._bits, self._len)

    __add__ = __xor__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GF2Vector):
            return NotImplemented
        return self._len == other._len and self._bits == other._bits

    def __hash__(self) -> int:
        return hash((self._bits, self._len))

    def __repr__(self) -> str:
        return f"GF2Vector({''.join(str(b) for b in self)!r})"

    def weight(self) -> int:
        """Hamming weight."""
        return self._bits.bit_count()

    def is_zero(self) -> bool:
        return self._bits == 0

    def dot(self, other: "GF2Vector") -> int:
        """Standard inner product mod 2."""
        if other._len != self._len:
            raise DimensionMismatchError("dot of vectors with different lengths")
        return _parity(self._bits & other._bits)

    def to_bits(self) -> tuple:
        return tuple(self)


def _as_vector(value: Union[GF2Vector, Sequence[int]], length: Optional[int] = None) -> GF2Vector:
    if isinstance(value, GF2Vector):
        v = value
    else:
        v = GF2Vector.from_bits(value)
    if length is not None and len(v) != length:
        raise DimensionMismatchError(f"expected length {length}, got {len(v)}")
    return v


class GF2Matrix:
    """Row-major matrix over GF(2); rows are packed ints like GF2Vector."""

    __slots__ = ("_rows", "_ncols")

    def __init__(self, rows: Sequence[GF2Vector], ncols: Optional[int] = None):
        rows = tuple(rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatchError("ragged rows")
        self._rows = tuple(r.bits for r in rows)
        self._ncols = ncols

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[int]], ncols: Optional[int] = None) -> "GF2Matrix":
        vecs = [GF2Vector.from_bits(r) for r in rows]
        return cls(vecs, ncols)

    @classmethod
    def from_row_ints(cls, rows: Sequence[int], ncols: int) -> "GF2Matrix":
        return cls([GF2Vector(r, ncols) for r in rows], ncols)

    @classmethod
    def identity(cls, n: int) -> "GF2Matrix":
        return cls.from_row_ints([1 << i for i in range(n)], n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "GF2Matrix":
        return cls.from_row_ints([0] * nrows, ncols)

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return self._ncols

    @property
    def shape(self) -> tuple:
        return (len(self._rows), self._ncols)

    @property
    def row_ints(self) -> tuple:
        """Rows as packed ints (bit j = column j)."""
        return self._rows

    def row(self, i: int) -> GF2Vector:
        return GF2Vector(self._rows[i], self._ncols)

    def rows(self) -> Iterator[GF2Vector]:
        for r in self._rows:
            yield GF2Vector(r, self._ncols)

    def column_ints(self) -> list:
        """Columns as packed ints (bit i = row i)."""
        cols = [0] * self._ncols
        for i, r in enumerate(self._rows):
            while r:
                j = (r & -r).bit_length() - 1
                cols[j] |= 1 << i
                r &= r - 1
        return cols

    def column(self, j: int) -> GF2Vector:
        if not 0 <= j < self._ncols:
            raise IndexError("column index out of range")
        bits = 0
        for i, r in enumerate(self._rows):
            bits |= ((r >> j) & 1) << i
        return GF2Vector(bits, len(self._rows))

    def transpose(self) -> "GF2Matrix":
        return GF2Matrix.from_row_ints(self.column_ints(), len(self._rows))

    def mul_vec(self, x: GF2Vector) -> GF2Vector:
        """Matrix-vector product A @ x over GF(2)."""
        if len(x) != self._ncols:
            raise DimensionMismatchError(
                f"matrix has {self._ncols} columns, vector has length {len(x)}")
        xb = x.bits
        out = 0
        for i, r in enumerate(self._rows):
            out |= _parity(r & xb) << i
        return GF2Vector(out, len(self._rows))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GF2Matrix):
            return NotImplemented
        return self._ncols == other._ncols and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._rows, self._ncols))

    def __repr__(self) -> str:
        return f"GF2Matrix(shape={self.shape})"


def rank(a: GF2Matrix) -> int:
    """Rank of ``a`` by Gaussian elimination on packed rows."""
    pivots: dict = {}
    for r in a.row_ints:
        while r:
            low = r & -r
            p = pivots.get(low)
            if p is None:
                pivots[low] = r
                break
            r ^= p
    return len(pivots)


def solve(a: GF2Matrix, e: GF2Vector) -> Optional[GF2Vector]:
    """One solution of ``A x = e`` or ``None`` if the system is inconsistent.

    Free variables are set to 0, so the result is deterministic.  The
    returned vector always satisfies ``a.mul_vec(x) == e``.
    """
    if len(e) != a.nrows:
        raise DimensionMismatchError(
            f"matrix has {a.nrows} rows, right-hand side has length {len(e)}")
    ncols = a.ncols
    aug_bit = 1 << ncols
    # Forward elimination on [A | e], pivoting only on the A columns.
    pivots: dict = {}
    eb = e.bits
    for i, row in enumerate(a.row_ints):
        r = row | (((eb >> i) & 1) << ncols)
        while r & (aug_bit - 1):
            low = r & -r
            p = pivots.get(low)
            if p is None:
                pivots[low] = r
                break
            r ^= p
        else:
            if r:
                return None  # reduced to 0 = 1
    # Back substitution: clear every pivot column from the other pivot rows.
    # Descending order keeps each pivot row free of higher pivot bits by the
    # time it is used, so pivot bits are never disturbed.
    order = sorted(pivots, reverse=True)
    for low in order:
        r = pivots[low]
        for low2 in order:
            if low2 == low:
                continue
            if pivots[low2] & low:
                pivots[low2] ^= r
    x = 0
    for low, r in pivots.items():
        if r & aug_bit:
            x |= low
    result = GF2Vector(x, ncols)
    if a.mul_vec(result) != e:
        raise AssertionError("internal error: solver produced a non-solution")
    return result


def column_space_basis(a: GF2Matrix) -> list:
    """Reduced basis of the column space, as GF2Vector values of length nrows.

    The basis is in reduced echelon form with pivots on the lowest set bits,
    sorted by pivot position, so it is a deterministic function of ``a``.
    """
    pivots: dict = {}
    for c in a.column_ints():
        r = c
        while r:
            low = r & -r
            p = pivots.get(low)
            if p is None:
                pivots[low] = r
                break
            r ^= p
    # Back-reduce so each basis vector is the unique minimal coset member.
    order = sorted(pivots)
    for low in order:
        r = pivots[low]
        for low2 in order:
            if low2 == low:
                continue
            if pivots[low2] & low:
                pivots[low2] ^= r
    nrows = a.nrows
    return [GF2Vector(pivots[low], nrows) for low in order]


def enumerate_image(a: GF2Matrix) -> Iterator[GF2Vector]:
    """Yield every vector of the column space, 2**rank(a) in total.

    Order matches the degree search: Gray code over the reduced column
    basis, starting at the zero vector.
    """
    basis = [b.bits for b in column_space_basis(a)]
    nrows = a.nrows
    cur = 0
    yield GF2Vector(0, nrows)
    for t in range(1, 1 << len(basis)):
        j = ((t & -t) - 1).bit_count()
        cur ^= basis[j]
        yield GF2Vector(cur, nrows)


@dataclass(frozen=True)
class SearchBudget:
    """Resource limits for the exhaustive coset search.

    max_seconds: wall-clock limit; ``None`` means unlimited.
    threads: worker threads for chunked enumeration (results for the
        distance are thread-count independent; 1 keeps the reported
        nearest vector bit-for-bit reproducible too).
    """

    max_seconds: Optional[float] = None
    threads: int = 1

    def __post_init__(self):
        if self.max_seconds is not None and self.max_seconds < 0:
            raise ValueError("max_seconds must be nonnegative")
        if self.threads < 1:
            raise ValueError("threads must be at least 1")


class CosetSearchResult(NamedTuple):
    distance: int
    nearest: GF2Vector
    proven: bool


def coset_min_weight(a: GF2Matrix, e: GF2Vector,
                     budget: Optional[SearchBudget] = None) -> CosetSearchResult:
    """Hamming distance from ``e`` to the column space of ``a``.

    Returns the distance, a nearest column-space vector achieving it, and
    whether the value is proven exact.  A solvable system short-circuits
    through :func:`solve`, so distance 0 never costs a sweep.  Otherwise the
    2**rank coset is enumerated by Gray code over the reduced column basis;
    if ``budget.max_seconds`` expires first, the best distance seen so far
    is returned with ``proven=False`` (still a valid upper bound).
    """
    if len(e) != a.nrows:
        raise DimensionMismatchError(
            f"matrix has {a.nrows} rows, target has length {len(e)}")
    if budget is None:
        budget = SearchBudget()
    if solve(a, e) is not None:
        return CosetSearchResult(0, e, True)
    basis = [b.bits for b in column_space_basis(a)]
    # Inconsistency is proven, so 1 is a lower bound and a valid early stop.
    best, vec, proven = _sweep.span_min_weight(
        basis, e.bits, a.nrows, stop_at=1,
        max_seconds=budget.max_seconds, threads=budget.threads)
    nearest = GF2Vector(vec ^ e.bits, a.nrows)
    return CosetSearchResult(best, nearest, proven)

"""Binary symplectic polar spaces and their tame subgeometries.

The space W_n lives on the 4**n - 1 nonzero vectors of F_2^{2n} with the
symplectic form from :func:`polarctx.pauli.symplectic_form`.  Points are
kept in a canonical order (lexicographic on the coordinate tuple), and
everything downstream identifies a point by its index in that order.

Point values are manipulated internally as packed ints, exactly like
GF2Vector bits.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache, cached_property
from typing import Iterable, List, NamedTuple, Optional, Tuple

from .gf2 import GF2Vector
from .pauli import PauliObservable, _xpart, _zpart

MAX_N = 5


class Family(str, Enum):
    """The context families a polar space supports."""

    LINES = "lines"
    GENERATORS = "generators"
    HYPERBOLIC = "hyperbolic"
    ELLIPTIC = "elliptic"
    PERPSET = "perpset"

    def __str__(self) -> str:  # keep CLI output free of enum noise
        return self.value


# Families whose members are indexed by a base point.
POINTED_FAMILIES = (Family.HYPERBOLIC, Family.ELLIPTIC, Family.PERPSET)


@dataclass(frozen=True)
class GeometryFamilyId:
    """Identifies one family, and one member of it for pointed families.

    ``base_point`` is a coordinate vector; the zero vector is a legal base
    for quadrics (the form with no linear part) even though it is not a
    point of the space.
    """

    family: Family
    base_point: Optional[GF2Vector] = None

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.family not in POINTED_FAMILIES and self.base_point is not None:
            raise ValueError(f"family {self.family} takes no base point")

    def label(self) -> str:
        if self.base_point is None:
            return str(self.family)
        o = PauliObservable(self.base_point)
        return f"{self.family}[{o.letters()}]"


@dataclass(frozen=True)
class Subspace:
    """A totally isotropic subspace, as a set of point indices.

    ``dim`` is the projective dimension: 1 for lines (3 points), n-1 for
    generators (2**n - 1 points).
    """

    dim: int
    points: frozenset

    def __post_init__(self):
        if len(self.points) != (1 << (self.dim + 1)) - 1:
            raise ValueError("point count does not match the dimension")

    @property
    def index_tuple(self) -> Tuple[int, ...]:
        return tuple(sorted(self.points))


class Quadric(NamedTuple):
    kind: Family  # HYPERBOLIC or ELLIPTIC
    points: Tuple[int, ...]
    lines: Tuple[Subspace, ...]


class Perpset(NamedTuple):
    points: Tuple[int, ...]
    lines: Tuple[Subspace, ...]  # the pencil of lines through the base point


@dataclass(frozen=True)
class FamilyMember:
    """One generated geometry: its points and its contexts.

    ``points`` and the entries of ``contexts`` are indices into the parent
    space's canonical point order.
    """

    family_id: GeometryFamilyId
    points: Tuple[int, ...]
    contexts: Tuple[Tuple[int, ...], ...]


def _form_int(x: int, y: int) -> int:
    cross = (_zpart(x) & _xpart(y)) ^ (_xpart(x) & _zpart(y))
    return cross.bit_count() & 1


def _q0_int(v: int) -> int:
    """Sum of a_i b_i mod 2; the parity of the Y letter count."""
    return (_zpart(v) & _xpart(v)).bit_count() & 1


class PolarSpace:
    """The symplectic polar space on n qubits.

    Instances are immutable; heavyweight subgeometry lists are computed
    lazily and cached on the instance.  Use :func:`polar_space` so the
    caches are shared.
    """

    def __init__(self, n: int):
        if not 1 <= n <= MAX_N:
            raise ValueError(f"n must be between 1 and {MAX_N}")
        self.n = n
        self.num_points = 4**n - 1
        width = 2 * n
        values = sorted(range(1, 4**n), key=lambda v: tuple(GF2Vector(v, width)))
        self._values = tuple(values)
        self._index = {v: i for i, v in enumerate(values)}
        self._width = width

    # -- points ---------------------------------------------------------

    @cached_property
    def points(self) -> Tuple[GF2Vector, ...]:
        """All nonzero coordinate vectors in canonical order."""
        return tuple(GF2Vector(v, self._width) for v in self._values)

    @property
    def point_values(self) -> Tuple[int, ...]:
        """Packed point values in canonical order."""
        return self._values

    def point(self, index: int) -> GF2Vector:
        return GF2Vector(self._values[index], self._width)

    def index_of(self, point) -> int:
        """Index of a point given as GF2Vector or packed int."""
        v = point.bits if isinstance(point, GF2Vector) else int(point)
        try:
            return self._index[v]
        except KeyError:
            raise ValueError("not a point of this polar space") from None

    def observable(self, index: int) -> PauliObservable:
        return PauliObservable(self.point(index))

    # -- form data ------------------------------------------------------

    @cached_property
    def _perp_masks(self) -> dict:
        """For each point value, the bitmask over values w with <v,w> = 0."""
        masks = {}
        values = self._values
        for v in values:
            m = 0
            for w in values:
                if _form_int(v, w) == 0:
                    m |= 1 << w
            masks[v] = m
        return masks

    @cached_property
    def _lines(self) -> Tuple[Subspace, ...]:
        found = set()
        values = self._values
        perp = self._perp_masks
        for i, v in enumerate(values):
            mask = perp[v]
            for w in values[i + 1:]:
                if (mask >> w) & 1:
                    third = v ^ w
                    tri = tuple(sorted((self._index[v], self._index[w],
                                        self._index[third])))
                    found.add(tri)
        return tuple(Subspace(1, frozenset(t)) for t in sorted(found))

    def _isotropic_subspaces(self, algebraic_dim: int) -> Tuple[Subspace, ...]:
        """All totally isotropic subspaces of the given linear dimension.

        Depth-first search over canonically minimal bases: each accepted
        basis vector must exceed the previous one and be the minimum of
        its coset modulo the current span, which makes every subspace
        appear exactly once without a dedup set.
        """
        values = self._values
        perp = self._perp_masks
        out: List[Tuple[int, ...]] = []

        def extend(span: List[int], allowed: int, last: int, depth: int):
            v = last + 1
            rest = allowed >> v
            while rest:
                step = (rest & -rest).bit_length() - 1
                v += step
                rest >>= step
                if all(v < (v ^ t) for t in span[1:]):
                    new_span = span + [t ^ v for t in span]
                    if depth == 1:
                        out.append(tuple(sorted(
                            self._index[t] for t in new_span if t)))
                    else:
                        extend(new_span, allowed & perp[v], v, depth - 1)
                rest >>= 1
                v += 1

        all_mask = 0
        for v in values:
            all_mask |= 1 << v
        extend([0], all_mask, 0, algebraic_dim)
        dim = algebraic_dim - 1
        return tuple(Subspace(dim, frozenset(t)) for t in sorted(out))

    @cached_property
    def _generators(self) -> Tuple[Subspace, ...]:
        return self._isotropic_subspaces(self.n)


@lru_cache(maxsize=None)
def polar_space(n: int) -> PolarSpace:
    """The polar space for n qubits, cached so subgeometries are shared."""
    return PolarSpace(n)


def lines(s: PolarSpace) -> List[Subspace]:
    """All totally isotropic lines, sorted by index triple."""
    return list(s._lines)


def generators(s: PolarSpace) -> List[Subspace]:
    """All maximal totally isotropic subspaces (projective dim n-1)."""
    return list(s._generators)


def subspaces(s: PolarSpace, k: int) -> List[Subspace]:
    """All totally isotropic subspaces of projective dimension k."""
    if not 0 <= k <= s.n - 1:
        raise ValueError(f"projective dimension must be in 0..{s.n - 1}")
    if k == 1:
        return list(s._lines)
    if k == s.n - 1:
        return list(s._generators)
    return list(s._isotropic_subspaces(k + 1))


def quadratic_form_value(s: PolarSpace, x: GF2Vector,
                         base_point: Optional[GF2Vector] = None) -> int:
    """Value at x of the quadratic form with the given base point.

    The base form sums a_i x_i over the qubits; a base point p shifts it
    by the symplectic product with p.  ``None`` means the base form
    (equivalently the zero base point).
    """
    if len(x) != 2 * s.n:
        raise ValueError("x does not have 2n coordinates")
    val = _q0_int(x.bits)
    if base_point is not None:
        if len(base_point) != 2 * s.n:
            raise ValueError("base point does not have 2n coordinates")
        val ^= _form_int(base_point.bits, x.bits)
    return val


def _zero_locus(s: PolarSpace, p: int) -> Tuple[int, ...]:
    out = []
    for i, v in enumerate(s.point_values):
        if (_q0_int(v) ^ _form_int(p, v)) == 0:
            out.append(i)
    return tuple(out)


def _lines_inside(s: PolarSpace, point_indices: Iterable[int]) -> Tuple[Subspace, ...]:
    mask = 0
    for i in point_indices:
        mask |= 1 << i
    kept = []
    for line in s._lines:
        a, b, c = line.index_tuple
        if (mask >> a) & (mask >> b) & (mask >> c) & 1:
            kept.append(line)
    return tuple(kept)


def quadric(s: PolarSpace, base_point: GF2Vector) -> Quadric:
    """Zero locus of the quadratic form for this base point, with its lines.

    The zero base vector is allowed and gives the base form itself.
    """
    if len(base_point) != 2 * s.n:
        raise ValueError("base point does not have 2n coordinates")
    kind = Family.ELLIPTIC if _q0_int(base_point.bits) else Family.HYPERBOLIC
    pts = _zero_locus(s, base_point.bits)
    return Quadric(kind, pts, _lines_inside(s, pts))


def perpset(s: PolarSpace, base_point: GF2Vector) -> Perpset:
    """All points commuting with the base point, plus the lines through it."""
    if base_point.is_zero():
        raise ValueError("the perpset base must be a point, not the zero vector")
    p = base_point.bits
    base_index = s.index_of(base_point)
    pts = tuple(i for i, v in enumerate(s.point_values) if _form_int(p, v) == 0)
    seen = set()
    for i in pts:
        v = s.point_values[i]
        if v == p:
            continue
        tri = tuple(sorted((base_index, i, s.index_of(v ^ p))))
        seen.add(tri)
    pencil = tuple(Subspace(1, frozenset(t)) for t in sorted(seen))
    return Perpset(pts, pencil)


def is_hyperplane(s: PolarSpace, point_indices: Iterable[int]) -> bool:
    """True when every line meets the set in exactly 1 or 3 points."""
    mask = 0
    for i in point_indices:
        mask |= 1 << i
    for line in s._lines:
        a, b, c = line.index_tuple
        hits = ((mask >> a) & 1) + ((mask >> b) & 1) + ((mask >> c) & 1)
        if hits not in (1, 3):
            return False
    return True


def _quadric_bases(s: PolarSpace, kind: Family) -> List[GF2Vector]:
    width = 2 * s.n
    want = 1 if kind is Family.ELLIPTIC else 0
    bases = []
    if kind is Family.HYPERBOLIC:
        bases.append(GF2Vector.zeros(width))
    for v in s.points:
        if _q0_int(v.bits) == want:
            bases.append(v)
    return bases


def enumerate_family(s: PolarSpace, family, base_point: Optional[GF2Vector] = None
                     ) -> List[FamilyMember]:
    """All members of a family, or the single member for a given base.

    Members of pointed families come out in canonical base-point order
    (the zero base first for hyperbolic quadrics); contexts inside a
    member are sorted index tuples.
    """
    family = Family(family)
    if family in (Family.LINES, Family.GENERATORS):
        if base_point is not None:
            raise ValueError(f"family {family} takes no base point")
        if family is Family.GENERATORS and s.n < 2:
            raise ValueError("generators are single points for n = 1; no contexts")
        ctx = s._lines if family is Family.LINES else s._generators
        member = FamilyMember(
            GeometryFamilyId(family),
            tuple(range(s.num_points)),
            tuple(sub.index_tuple for sub in ctx),
        )
        return [member]

    if base_point is not None:
        bases = [base_point]
    elif family is Family.PERPSET:
        bases = list(s.points)
    else:
        bases = _quadric_bases(s, family)

    members = []
    for p in bases:
        if family is Family.PERPSET:
            res = perpset(s, p)
            pts, ctx = res.points, res.lines
        else:
            q = quadric(s, p)
            if q.kind is not family:
                raise ValueError(
                    f"base point {PauliObservable(p).letters()} gives a "
                    f"{q.kind} quadric, not {family}")
            pts, ctx = q.points, q.lines
        members.append(FamilyMember(
            GeometryFamilyId(family, p),
            pts,
            tuple(sub.index_tuple for sub in ctx),
        ))
    return members

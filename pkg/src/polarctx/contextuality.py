"""Kochen-Specker contextuality of observable configurations.

A configuration is a list of mutually distinct Pauli observables plus
contexts: sets of compatible observables whose product is plus or minus
the identity.  Classical (noncontextual hidden-variable) models are
exactly the GF(2) solutions of the incidence system A x = E, where row i
of A marks the observables of context i and E_i records its sign; the
contextuality degree is the Hamming distance from E to the column space
of A.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Tuple

from . import _sweep
from .gf2 import (CosetSearchResult, GF2Matrix, GF2Vector, SearchBudget,
                  coset_min_weight, solve)
from .geometry import FamilyMember, PolarSpace
from .pauli import PauliObservable, product_sign, symplectic_form

DEFAULT_NCHV_CAP = 28


class InvalidConfigurationError(ValueError):
    """The data does not describe a quantum observable configuration."""


@dataclass(frozen=True)
class QuantumConfiguration:
    """Observables plus contexts, the input to every contextuality check.

    ``points`` are distinct nonzero coordinate vectors; ``contexts`` hold
    indices into ``points``.  Without explicit ``signs`` the geometric
    requirements are enforced here (pairwise compatibility and a zero
    coordinate sum per context) and context signs are later derived from
    the canonical observables.  Explicit ``signs`` mark imported data
    whose sign pattern is trusted as-is; the entries of the parity system
    then come from the file, not from recomputation, and the geometric
    requirements are deliberately not enforced.
    """

    n: int
    points: Tuple[GF2Vector, ...]
    contexts: Tuple[Tuple[int, ...], ...]
    source: str = "imported"
    signs: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "contexts",
                           tuple(tuple(c) for c in self.contexts))
        if self.signs is not None:
            object.__setattr__(self, "signs", tuple(self.signs))
        if self.n < 1:
            raise InvalidConfigurationError("n must be at least 1")
        width = 2 * self.n
        seen = set()
        for v in self.points:
            if len(v) != width:
                raise InvalidConfigurationError(
                    f"point {v!r} does not have {width} coordinates")
            if v.is_zero():
                raise InvalidConfigurationError("the zero vector is not a point")
            if v in seen:
                raise InvalidConfigurationError(f"repeated point {v!r}")
            seen.add(v)
        npoints = len(self.points)
        for ci, ctx in enumerate(self.contexts):
            if len(ctx) < 2:
                raise InvalidConfigurationError(
                    f"context {ci} has fewer than two observables")
            if len(set(ctx)) != len(ctx):
                raise InvalidConfigurationError(f"context {ci} repeats a point")
            for j in ctx:
                if not 0 <= j < npoints:
                    raise InvalidConfigurationError(
                        f"context {ci} refers to missing point {j}")
        if self.signs is None:
            self._check_geometry()
        else:
            if len(self.signs) != len(self.contexts):
                raise InvalidConfigurationError(
                    "sign list length does not match the context count")
            for sv in self.signs:
                if sv not in (1, -1):
                    raise InvalidConfigurationError(f"invalid sign {sv!r}")

    def _check_geometry(self):
        for ci, ctx in enumerate(self.contexts):
            total = GF2Vector.zeros(2 * self.n)
            for a in range(len(ctx)):
                va = self.points[ctx[a]]
                total ^= va
                for b in range(a + 1, len(ctx)):
                    if symplectic_form(va, self.points[ctx[b]]):
                        raise InvalidConfigurationError(
                            f"context {ci} contains incompatible observables")
            if not total.is_zero():
                raise InvalidConfigurationError(
                    f"context {ci} does not multiply to the identity")

    @classmethod
    def from_member(cls, space: PolarSpace, member: FamilyMember
                    ) -> "QuantumConfiguration":
        """Reindex a generated family member into a standalone configuration."""
        order = sorted(member.points)
        remap = {old: new for new, old in enumerate(order)}
        return cls(
            n=space.n,
            points=tuple(space.point(i) for i in order),
            contexts=tuple(tuple(sorted(remap[i] for i in ctx))
                           for ctx in member.contexts),
            source=member.family_id.label(),
        )

    @property
    def num_points(self) -> int:
        return len(self.points)

    @property
    def num_contexts(self) -> int:
        return len(self.contexts)

    def observables(self) -> Tuple[PauliObservable, ...]:
        return tuple(PauliObservable(v) for v in self.points)


@dataclass(frozen=True)
class IncidenceSystem:
    """The GF(2) system A x = E of one configuration.

    ``point_order[j]`` and ``context_order[i]`` map columns and rows back
    to the configuration's point and context indices (identity maps for
    systems built here, kept explicit for downstream bookkeeping).
    """

    a: GF2Matrix
    e: GF2Vector
    point_order: Tuple[int, ...]
    context_order: Tuple[int, ...]


def build_system(config: QuantumConfiguration) -> IncidenceSystem:
    """Incidence matrix and sign vector of a configuration.

    Signs come from the canonical observables unless the configuration
    carries trusted explicit signs.  A context whose observables do not
    multiply to plus or minus the identity is rejected.
    """
    rows = []
    ebits = 0
    npoints = len(config.points)
    for ci, ctx in enumerate(config.contexts):
        bits = 0
        for j in ctx:
            bits |= 1 << j
        rows.append(GF2Vector(bits, npoints))
        if config.signs is not None:
            sign = config.signs[ci]
        else:
            prod = product_sign([PauliObservable(config.points[j]) for j in ctx])
            if not prod.result.is_identity or prod.sign is None:
                raise InvalidConfigurationError(
                    f"context {ci} does not multiply to plus or minus identity")
            sign = prod.sign
        if sign == -1:
            ebits |= 1 << ci
    a = GF2Matrix(rows, ncols=npoints)
    return IncidenceSystem(
        a=a,
        e=GF2Vector(ebits, len(config.contexts)),
        point_order=tuple(range(npoints)),
        context_order=tuple(range(len(config.contexts))),
    )


class ContextualityVerdict(NamedTuple):
    contextual: bool
    model: Optional[GF2Vector]  # a classical model when one exists


def check_contextual(system: IncidenceSystem) -> ContextualityVerdict:
    """Decide contextuality exactly by solving A x = E.

    A solution x is a classical model: the valuation assigns (-1)**x_j to
    observable j and satisfies every context sign.
    """
    x = solve(system.a, system.e)
    return ContextualityVerdict(x is None, x)


@dataclass(frozen=True)
class DegreeReport:
    """Everything the degree search can say about one configuration.

    ``degree`` is exact when ``proven`` is true, otherwise the best upper
    bound found within the budget.  ``bound_b`` is the largest number of
    contexts a classical model satisfies, l - 2d counted with the
    standard inequality in mind, and ``epsilon`` = 2d / l the quantum
    advantage of the associated game; both are None-free only when the
    configuration has contexts at all (``no_contexts`` flags the
    degenerate case).  ``assignment`` is a valuation achieving ``degree``
    violations, listed in ``violated_contexts``.
    """

    contextual: bool
    degree: int
    proven: bool
    bound_b: int
    epsilon: Optional[Fraction]
    negative_context_count: int
    assignment: GF2Vector
    violated_contexts: Tuple[int, ...]
    no_contexts: bool = False


def degree(system: IncidenceSystem,
           budget: Optional[SearchBudget] = None) -> DegreeReport:
    """Contextuality degree of a system, by exhaustive coset search.

    The verdict itself is always exact (it only needs a rank computation);
    the budget limits only the search for the exact distance, which falls
    back to a proven upper bound when time runs out.
    """
    l = system.a.nrows
    p = system.a.ncols
    neg = system.e.weight()
    if l == 0:
        return DegreeReport(
            contextual=False, degree=0, proven=True, bound_b=0,
            epsilon=None, negative_context_count=0,
            assignment=GF2Vector.zeros(p), violated_contexts=(),
            no_contexts=True)
    res: CosetSearchResult = coset_min_weight(system.a, system.e, budget)
    x = solve(system.a, res.nearest)
    if x is None:
        raise AssertionError("internal error: nearest vector left the image")
    diff = res.nearest ^ system.e
    violated = tuple(i for i in range(l) if (diff.bits >> i) & 1)
    return DegreeReport(
        contextual=res.distance > 0,
        degree=res.distance,
        proven=res.proven,
        bound_b=l - 2 * res.distance,
        epsilon=Fraction(2 * res.distance, l),
        negative_context_count=neg,
        assignment=x,
        violated_contexts=violated,
    )


class MaxSatResult(NamedTuple):
    satisfied: int
    assignment: GF2Vector


def nchv_max_sat(config: QuantumConfiguration,
                 cap: int = DEFAULT_NCHV_CAP) -> MaxSatResult:
    """Best classical model by direct enumeration of all assignments.

    Walks every one of the 2**p valuations (p = point count), so it is
    refused above ``cap``.  Serves as an independent cross-check of
    :func:`degree`: the maximum satisfied context count always equals
    l - d.  Returns the first best assignment in binary counting order.
    """
    p = config.num_points
    if p > cap:
        raise ValueError(
            f"{p} points exceed the exhaustive-enumeration cap of {cap}; "
            f"use degree() instead")
    system = build_system(config)
    l = system.a.nrows
    cols = system.a.column_ints()
    best, x, proven = _sweep.domain_min_weight(cols, system.e.bits, l)
    assert proven
    return MaxSatResult(l - best, GF2Vector(x, p))


def negative_context_count(system: IncidenceSystem) -> int:
    """Number of contexts whose sign is -1."""
    return system.e.weight()

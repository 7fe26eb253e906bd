"""Polar spaces, isotropic subspaces, quadrics, perpsets."""

import itertools

import pytest

import polarctx as px
from polarctx.gf2 import GF2Vector
from polarctx.geometry import (
    Family,
    GeometryFamilyId,
    Subspace,
    enumerate_family,
    generators,
    is_hyperplane,
    lines,
    perpset,
    polar_space,
    quadratic_form_value,
    quadric,
    subspaces,
)
from polarctx.pauli import PauliObservable, is_symmetric, parse_pauli
from oracles import commutes, dense_from_observable


def pt(space, text):
    return parse_pauli(text, space.n).coords


def letters_of(space, indices):
    return {space.observable(i).letters() for i in indices}


# -- points and canonical order --------------------------------------------

def test_point_counts():
    for n in (1, 2, 3, 4):
        assert polar_space(n).num_points == 4**n - 1


def test_bad_n_rejected():
    with pytest.raises(ValueError):
        polar_space(0)
    with pytest.raises(ValueError):
        polar_space(6)


def test_canonical_order_is_lexicographic():
    s = polar_space(2)
    tuples = [p.to_bits() for p in s.points]
    assert tuples == sorted(tuples)
    assert s.observable(0).letters() == "IX"
    assert s.observable(1).letters() == "IZ"
    assert s.observable(2).letters() == "IY"
    assert s.observable(3).letters() == "XI"
    assert s.observable(14).letters() == "YY"


def test_index_of_round_trip(w3):
    for i in range(w3.num_points):
        assert w3.index_of(w3.point(i)) == i
    with pytest.raises(ValueError):
        w3.index_of(GF2Vector.zeros(6))


# -- lines and generators ----------------------------------------------------

def test_line_counts():
    assert len(lines(polar_space(1))) == 0
    assert len(lines(polar_space(2))) == 15
    assert len(lines(polar_space(3))) == 315


def test_generator_counts():
    assert len(generators(polar_space(2))) == 15
    assert len(generators(polar_space(3))) == 135


def test_generators_of_plane_are_its_lines(w2):
    assert generators(w2) == lines(w2)


def test_line_structure(w2):
    for line in lines(w2):
        a, b, c = (w2.point(i) for i in line.index_tuple)
        assert a ^ b == c
        for x, y in itertools.combinations((a, b, c), 2):
            assert px.symplectic_form(x, y) == 0


def test_subspaces_are_closed_and_isotropic(w3):
    for sub in subspaces(w3, 2)[:20]:
        vals = [w3.point(i).bits for i in sub.index_tuple]
        closed = {0}
        for v in vals:
            closed |= {v ^ t for t in closed}
        assert closed - {0} == set(vals)
        for v, w in itertools.combinations(sub.index_tuple, 2):
            assert px.symplectic_form(w3.point(v), w3.point(w)) == 0


def test_subspaces_dimension_range(w2):
    assert len(subspaces(w2, 0)) == w2.num_points
    assert subspaces(w2, 1) == lines(w2)
    with pytest.raises(ValueError):
        subspaces(w2, 2)


def test_subspace_validation():
    with pytest.raises(ValueError):
        Subspace(1, frozenset({1, 2}))


# -- quadratic forms ----------------------------------------------------------

def test_base_form_examples(w2):
    assert quadratic_form_value(w2, GF2Vector.from_bits([1, 1, 1, 1])) == 0
    assert quadratic_form_value(w2, GF2Vector.from_bits([0, 0, 1, 1])) == 1
    assert quadratic_form_value(w2, pt(w2, "XZ")) == 0


def test_form_value_shifts_by_base_point(w2):
    p = pt(w2, "XX")
    for x in w2.points:
        assert quadratic_form_value(w2, x, p) == (
            quadratic_form_value(w2, x) ^ px.symplectic_form(p, x))


def test_form_value_dimension_errors(w2):
    with pytest.raises(ValueError):
        quadratic_form_value(w2, GF2Vector.zeros(6))
    with pytest.raises(ValueError):
        quadratic_form_value(w2, GF2Vector.zeros(4), GF2Vector.zeros(6))


def test_base_form_parity_matches_transpose_symmetry(w3):
    for x in w3.points:
        o = PauliObservable(x)
        assert (quadratic_form_value(w3, x) == 0) == is_symmetric(o)


def test_form_matches_commutation_oracle(w2):
    # letters anticommute exactly when an odd number of qubits carries two
    # distinct non-identity letters
    for x, y in itertools.product(w2.points, repeat=2):
        dx = dense_from_observable(PauliObservable(x))
        dy = dense_from_observable(PauliObservable(y))
        assert (px.symplectic_form(x, y) == 0) == commutes(dx, dy)


def test_form_matches_letterwise_oracle(w3):
    def letter_clash(a, b):
        hits = sum(1 for la, lb in zip(a, b)
                   if la != "I" and lb != "I" and la != lb)
        return hits & 1

    obs = [PauliObservable(x) for x in w3.points]
    for a, b in itertools.product(obs, repeat=2):
        assert px.symplectic_form(a.coords, b.coords) == letter_clash(
            a.letters(), b.letters())


# -- quadrics -----------------------------------------------------------------

MERMIN_GRID = {"XI", "IX", "XX", "ZZ", "YY", "YI", "IY", "XY", "YX"}


def test_hyperbolic_quadric_of_xx(w2):
    q = quadric(w2, pt(w2, "XX"))
    assert q.kind is Family.HYPERBOLIC
    assert letters_of(w2, q.points) == MERMIN_GRID
    assert len(q.lines) == 6
    for line in q.lines:
        assert set(line.index_tuple) <= set(q.points)


def test_elliptic_quadric_of_iy(w2):
    q = quadric(w2, pt(w2, "IY"))
    assert q.kind is Family.ELLIPTIC
    assert letters_of(w2, q.points) == {"YY", "XI", "ZI", "YX", "YZ"}
    assert q.lines == ()


def test_base_quadric_is_symmetric_locus(w2):
    q = quadric(w2, GF2Vector.zeros(4))
    assert q.kind is Family.HYPERBOLIC
    assert letters_of(w2, q.points) == {
        "XI", "IX", "XX", "XZ", "ZX", "ZI", "IZ", "ZZ", "YY"}


def test_quadric_membership_dictionary(w3):
    # symmetric points commuting with the base, plus skew ones that do not
    p = w3.point(11)
    q = quadric(w3, p)
    member = set(q.points)
    for i, x in enumerate(w3.points):
        sym = is_symmetric(PauliObservable(x))
        comm = px.symplectic_form(p, x) == 0
        assert ((i in member) == (sym == comm))


def test_quadric_sizes(w3):
    hyper = quadric(w3, GF2Vector.zeros(6))
    assert len(hyper.points) == (4**3 + 2**3) // 2 - 1 == 35
    assert len(hyper.lines) == 105
    ell = quadric(w3, pt(w3, "IIY"))
    assert ell.kind is Family.ELLIPTIC
    assert len(ell.points) == (4**3 - 2**3) // 2 - 1 == 27
    assert len(ell.lines) == 45


# -- perpsets -----------------------------------------------------------------

def test_perpset_of_xx(w2):
    res = perpset(w2, pt(w2, "XX"))
    assert letters_of(w2, res.points) == {
        "XI", "IX", "XX", "ZZ", "YY", "YZ", "ZY"}
    triples = {frozenset(letters_of(w2, line.index_tuple))
               for line in res.lines}
    assert triples == {
        frozenset({"XX", "XI", "IX"}),
        frozenset({"XX", "ZZ", "YY"}),
        frozenset({"XX", "YZ", "ZY"}),
    }


def test_perpset_sizes(w3):
    res = perpset(w3, pt(w3, "XYZ"))
    assert len(res.points) == 4**3 // 2 - 1 == 31
    assert len(res.lines) == 4**2 - 1 == 15
    base = w3.index_of(pt(w3, "XYZ"))
    for line in res.lines:
        assert base in line.index_tuple


def test_perpset_rejects_zero_base(w2):
    with pytest.raises(ValueError):
        perpset(w2, GF2Vector.zeros(4))


# -- hyperplanes ---------------------------------------------------------------

def test_quadrics_and_perpsets_are_hyperplanes(w2, w3):
    for s in (w2, w3):
        assert is_hyperplane(s, quadric(s, GF2Vector.zeros(2 * s.n)).points)
        assert is_hyperplane(s, quadric(s, s.point(2)).points)
        assert is_hyperplane(s, perpset(s, s.point(0)).points)


def test_hyperplane_fails_after_removing_a_point(w2):
    pts = list(quadric(w2, pt(w2, "XX")).points)
    assert is_hyperplane(w2, pts)
    assert not is_hyperplane(w2, pts[1:])
    assert not is_hyperplane(w2, [])


# -- family enumeration ----------------------------------------------------------

def test_family_member_counts(w2, w3):
    assert len(enumerate_family(w2, Family.HYPERBOLIC)) == 10
    assert len(enumerate_family(w2, Family.ELLIPTIC)) == 6
    assert len(enumerate_family(w2, Family.PERPSET)) == 15
    assert len(enumerate_family(w3, Family.HYPERBOLIC)) == 36
    assert len(enumerate_family(w3, Family.ELLIPTIC)) == 28
    assert len(enumerate_family(w3, Family.PERPSET)) == 63


def test_whole_space_families(w3):
    (member,) = enumerate_family(w3, "lines")
    assert member.points == tuple(range(63))
    assert len(member.contexts) == 315
    (gen,) = enumerate_family(w3, Family.GENERATORS)
    assert len(gen.contexts) == 135
    assert all(len(c) == 7 for c in gen.contexts)


def test_hyperbolic_members_start_with_zero_base(w2):
    members = enumerate_family(w2, Family.HYPERBOLIC)
    assert members[0].family_id.base_point == GF2Vector.zeros(4)
    assert members[0].family_id.label() == "hyperbolic[II]"
    assert members[1].family_id.label() == "hyperbolic[IX]"


def test_family_argument_errors(w2):
    with pytest.raises(ValueError):
        enumerate_family(w2, Family.LINES, base_point=w2.point(0))
    with pytest.raises(ValueError):
        enumerate_family(polar_space(1), Family.GENERATORS)
    with pytest.raises(ValueError):
        enumerate_family(w2, Family.HYPERBOLIC, base_point=pt(w2, "IY"))
    with pytest.raises(ValueError):
        GeometryFamilyId(Family.LINES, base_point=GF2Vector.zeros(4))


def test_single_member_lookup(w2):
    (member,) = enumerate_family(w2, Family.ELLIPTIC, base_point=pt(w2, "IY"))
    assert letters_of(w2, member.points) == {"YY", "XI", "ZI", "YX", "YZ"}
    assert member.contexts == ()


def test_big_space_point_count_only():
    s = polar_space(5)
    assert s.num_points == 1023
    tuples = [s.point(i).to_bits() for i in (0, 1, 2, 1022)]
    assert tuples == sorted(tuples)

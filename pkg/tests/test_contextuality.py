"""Configurations, incidence systems, verdicts, degrees, max-sat."""

from fractions import Fraction

import pytest

import polarctx as px
from polarctx.contextuality import (
    DEFAULT_NCHV_CAP,
    InvalidConfigurationError,
    QuantumConfiguration,
    build_system,
    check_contextual,
    degree,
    negative_context_count,
    nchv_max_sat,
)
from polarctx.fixtures import doily, mermin_peres_square
from polarctx.gf2 import GF2Vector, SearchBudget
from polarctx.geometry import Family, enumerate_family
from polarctx.pauli import parse_pauli
from conftest import config_of, system_of


def v(text, n=None):
    return parse_pauli(text, n).coords


# -- configuration validation ------------------------------------------------

def test_rejects_bad_n():
    with pytest.raises(InvalidConfigurationError):
        QuantumConfiguration(n=0, points=(), contexts=())


def test_rejects_zero_and_wrong_width_points():
    with pytest.raises(InvalidConfigurationError):
        QuantumConfiguration(n=2, points=(GF2Vector.zeros(4),), contexts=())
    with pytest.raises(InvalidConfigurationError):
        QuantumConfiguration(n=2, points=(v("X"),), contexts=())


def test_rejects_repeated_points():
    with pytest.raises(InvalidConfigurationError):
        QuantumConfiguration(n=1, points=(v("X"), v("X")), contexts=())


def test_rejects_malformed_contexts():
    pts = (v("XI"), v("IX"), v("XX"))
    with pytest.raises(InvalidConfigurationError):
        QuantumConfiguration(n=2, points=pts, contexts=((0,),))
    with pytest.raises(InvalidConfigurationError):
        QuantumConfiguration(n=2, points=pts, contexts=((0, 0),))
    with pytest.raises(InvalidConfigurationError):
        QuantumConfiguration(n=2, points=pts, contexts=((0, 3),))


def test_rejects_incompatible_context():
    with pytest.raises(InvalidConfigurationError):
        QuantumConfiguration(n=1, points=(v("X"), v("Z")), contexts=((0, 1),))


def test_rejects_context_not_closing_to_identity():
    pts = (v("XI"), v("IX"))
    with pytest.raises(InvalidConfigurationError):
        QuantumConfiguration(n=2, points=pts, contexts=((0, 1),))


def test_trusted_signs_skip_geometry_checks():
    cfg = QuantumConfiguration(
        n=1, points=(v("X"), v("Z")), contexts=((0, 1),), signs=(-1,))
    assert cfg.signs == (-1,)
    sys_ = build_system(cfg)
    assert sys_.e.to_bits() == (1,)


def test_sign_list_validation():
    pts = (v("XI"), v("IX"), v("XX"))
    ctx = ((0, 1, 2),)
    with pytest.raises(InvalidConfigurationError):
        QuantumConfiguration(n=2, points=pts, contexts=ctx, signs=(1, 1))
    with pytest.raises(InvalidConfigurationError):
        QuantumConfiguration(n=2, points=pts, contexts=ctx, signs=(0,))


def test_from_member_remaps_to_local_indices(w2):
    member = enumerate_family(w2, Family.HYPERBOLIC)[1]
    cfg = QuantumConfiguration.from_member(w2, member)
    assert cfg.num_points == 9
    assert cfg.num_contexts == 6
    assert all(0 <= j < 9 for ctx in cfg.contexts for j in ctx)
    assert cfg.source == "hyperbolic[IX]"
    assert list(cfg.points) == sorted(cfg.points, key=lambda p: p.to_bits())


# -- fixtures ------------------------------------------------------------------

def test_square_fixture_shape():
    cfg = mermin_peres_square()
    assert cfg.n == 2
    assert cfg.num_points == 9
    assert cfg.num_contexts == 6
    assert cfg.source == "mermin-peres-square"
    assert [str(o) for o in cfg.observables()][:3] == ["XI", "IX", "XX"]


def test_doily_fixture_shape():
    cfg = doily()
    assert cfg.n == 2
    assert cfg.num_points == 15
    assert cfg.num_contexts == 15
    assert all(len(c) == 3 for c in cfg.contexts)


# -- incidence systems ----------------------------------------------------------

def test_square_system_signs():
    sys_ = build_system(mermin_peres_square())
    assert sys_.a.shape == (6, 9)
    assert sys_.e.to_bits() == (0, 0, 0, 0, 0, 1)
    assert negative_context_count(sys_) == 1
    # row 5 marks the XX, YY, ZZ diagonal triple
    assert sys_.a.row_ints[5] == (1 << 2) | (1 << 5) | (1 << 8)


def test_doily_system_signs():
    sys_ = build_system(doily())
    assert sys_.a.shape == (15, 15)
    assert negative_context_count(sys_) == 3


# -- verdicts and degrees ---------------------------------------------------------

def test_square_is_contextual():
    verdict = check_contextual(build_system(mermin_peres_square()))
    assert verdict.contextual
    assert verdict.model is None


def test_noncontextual_perpset_has_model(w2):
    sys_ = system_of(w2, enumerate_family(w2, Family.PERPSET)[0])
    verdict = check_contextual(sys_)
    assert not verdict.contextual
    assert sys_.a.mul_vec(verdict.model) == sys_.e


def test_square_degree_report():
    rep = degree(build_system(mermin_peres_square()))
    assert rep.contextual and rep.proven
    assert rep.degree == 1
    assert rep.bound_b == 4
    assert rep.epsilon == Fraction(1, 3)
    assert rep.negative_context_count == 1
    assert rep.violated_contexts == (5,)
    assert not rep.no_contexts


def test_doily_degree_report():
    sys_ = build_system(doily())
    rep = degree(sys_)
    assert rep.degree == 3
    assert rep.proven
    assert rep.bound_b == 15 - 6
    assert rep.epsilon == Fraction(2, 5)
    # nothing beats the trivial all-plus model here, so the violated
    # contexts are exactly the negative lines
    assert rep.violated_contexts == tuple(
        i for i in range(15) if sys_.e[i])


def test_degree_assignment_achieves_degree():
    for cfg in (mermin_peres_square(), doily()):
        sys_ = build_system(cfg)
        rep = degree(sys_)
        assert (sys_.a.mul_vec(rep.assignment) ^ sys_.e).weight() == rep.degree
        assert len(rep.violated_contexts) == rep.degree


def test_degree_at_most_negative_count(w2):
    for family in (Family.LINES, Family.GENERATORS, Family.HYPERBOLIC,
                   Family.PERPSET):
        for member in enumerate_family(w2, family):
            rep = degree(system_of(w2, member))
            assert rep.degree <= rep.negative_context_count
            assert rep.bound_b == len(member.contexts) - 2 * rep.degree


def test_degree_no_contexts(w2):
    member = enumerate_family(w2, Family.ELLIPTIC)[0]
    rep = degree(system_of(w2, member))
    assert rep.no_contexts
    assert not rep.contextual
    assert rep.degree == 0
    assert rep.epsilon is None


def test_degree_deterministic():
    sys_ = build_system(doily())
    a = degree(sys_, SearchBudget(threads=1))
    b = degree(sys_, SearchBudget(threads=1))
    assert a.assignment == b.assignment
    assert a.violated_contexts == b.violated_contexts


# -- exhaustive max-sat ------------------------------------------------------------

def test_square_max_sat():
    res = nchv_max_sat(mermin_peres_square())
    assert res.satisfied == 5
    sys_ = build_system(mermin_peres_square())
    assert (sys_.a.mul_vec(res.assignment) ^ sys_.e).weight() == 1


def test_doily_max_sat_matches_degree():
    cfg = doily()
    assert nchv_max_sat(cfg).satisfied == 15 - degree(build_system(cfg)).degree


def test_max_sat_cap():
    with pytest.raises(ValueError):
        nchv_max_sat(doily(), cap=10)
    assert DEFAULT_NCHV_CAP == 28


def test_max_sat_binary_order_tie_break():
    # the all-zero assignment already satisfies 5 of 6 square contexts and
    # nothing does better, so the first achiever is x = 0
    res = nchv_max_sat(mermin_peres_square())
    assert res.assignment == GF2Vector.zeros(9)

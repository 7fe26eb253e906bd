"""Shared fixtures for the test suite."""

from __future__ import annotations

import pytest

import polarctx as px


@pytest.fixture(scope="session")
def warm_kernels():
    """Trigger JIT compilation once so timed sections measure the sweep."""
    from polarctx import _sweep

    _sweep.span_min_weight([1, 2], 7, 3)
    _sweep.domain_min_weight([1, 2], 7, 3)
    return True


@pytest.fixture(scope="session")
def w2():
    return px.polar_space(2)


@pytest.fixture(scope="session")
def w3():
    return px.polar_space(3)


def config_of(space, member) -> px.QuantumConfiguration:
    return px.QuantumConfiguration.from_member(space, member)


def system_of(space, member) -> px.IncidenceSystem:
    return px.build_system(config_of(space, member))

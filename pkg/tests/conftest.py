from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from stringlift import StringNetwork

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=30,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture
def p2() -> StringNetwork:
    return StringNetwork.from_triples(2, [(0, 1, 1)], 0, 1, uniform_length=1)


@pytest.fixture
def p3() -> StringNetwork:
    return StringNetwork.from_triples(3, [(0, 1, 1), (1, 2, 1)], 0, 2, uniform_length=1)


@pytest.fixture
def star3() -> StringNetwork:
    # Center 0 joined to leaves 1, 2, 3; target is leaf 1.
    return StringNetwork.from_triples(4, [(0, 1, 1), (0, 2, 1), (0, 3, 1)], 0, 1, uniform_length=1)


@pytest.fixture
def c4() -> StringNetwork:
    return StringNetwork.from_triples(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)], 0, 2,
                                      uniform_length=1)


@pytest.fixture
def tri_w() -> StringNetwork:
    # Weighted triangle: the direct string 0-2 is longer than the detour.
    return StringNetwork.from_triples(3, [(0, 1, 1), (1, 2, 1), (0, 2, 3)], 0, 2)

import os

import pytest
from hypothesis import HealthCheck, settings

from ipgraph.graph import EdgeList, build

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=600, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

HOUSE = [5, 7, 9, 12, 14, 17, 12, 2, 5, 1, 3, 4, 2, 4, 2, 3, 5, 1, 4]
HOUSE_BP = [5, 7, 9, 12, 14, 17, 12, 9, 17, 7, 12, 14, 9, 14, 9, 12, 17, 7, 14]
HOUSE_SWAPPED = [5, 9, 7, 9, 9, 7, 12, 1, 17, 2, 12, 14, 3, 14, 4, 12, 17, 5, 14]
HOUSE_EDGES = [(1, 2), (1, 5), (2, 3), (2, 4), (3, 4), (4, 5)]


@pytest.fixture
def house_edges():
    return EdgeList(5, False, list(HOUSE_EDGES))


@pytest.fixture
def house(house_edges):
    return build(house_edges)


@pytest.fixture
def directed3():
    # 1 -> 2, 1 -> 3; both targets have out-degree zero
    return EdgeList(3, True, [(1, 2), (1, 3)])

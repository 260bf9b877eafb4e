"""
Shared fixtures: the named instances used across the test suite.
"""

import pytest

from src.generators.mis_reduction import gen_mis_reduction, graph_from_edges
from src.generators.named_instances import gen_dspn, ident4, loc2, loc3, trim5
from src.mechanism.game import DSPGame


@pytest.fixture
def ident4_instance():
    return ident4()


@pytest.fixture
def ident4_game(ident4_instance):
    return DSPGame(ident4_instance)


@pytest.fixture
def loc2_instance():
    return loc2()


@pytest.fixture
def loc3_instance():
    return loc3()


@pytest.fixture
def trim5_instance():
    return trim5()


@pytest.fixture
def dspn1_instance():
    return gen_dspn(1)


@pytest.fixture
def edge_graph():
    return graph_from_edges(2, [(0, 1)])


@pytest.fixture
def edge2(edge_graph):
    """Single-edge graph reduced with ell = 1: (instance, reduction map)."""
    return gen_mis_reduction(edge_graph, ell=1)

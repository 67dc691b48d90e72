import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from locdist.enumeration import enumerate_connected_graphs


@pytest.fixture(scope="session")
def small_graphs():
    """Every connected graph with at most 5 vertices."""
    return [g for n in range(1, 6) for g in enumerate_connected_graphs(n)]


@pytest.fixture(scope="session")
def graphs_upto_6():
    return [g for n in range(1, 7) for g in enumerate_connected_graphs(n)]

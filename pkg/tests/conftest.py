"""
Pytest configuration and shared fixtures for knot_parity tests
"""

import os

import pytest

from knot_parity.codes import LinkCode, parse_code
from knot_parity.config import get_settings
from knot_parity.graph import to_framed_graph
from knot_parity.registry import default_registry

# Reduce noise in tests
os.environ["LOG_LEVEL"] = "WARNING"


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Each test reads settings from a clean environment"""
    for name in ("KNOT_PARITY_ATOM_CAP", "KNOT_PARITY_STRICT_R2", "KNOT_PARITY_MAX_CROSSINGS"):
        monkeypatch.delenv(name, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def unknot() -> LinkCode:
    """Crossing-free circle"""
    return parse_code("*")


@pytest.fixture
def kink() -> LinkCode:
    """[1,1]: one self-crossing"""
    return LinkCode.free([1, 1])


@pytest.fixture
def two_chords() -> LinkCode:
    """[1,2,1,2]: two linked chords, both odd"""
    return LinkCode.free([1, 2, 1, 2])


@pytest.fixture
def three_chords() -> LinkCode:
    """[1,2,3,1,2,3]: three pairwise linked chords, all even"""
    return LinkCode.free([1, 2, 3, 1, 2, 3])


@pytest.fixture
def hopf() -> LinkCode:
    """[1,2 ; 1,2]: two circles meeting twice"""
    return LinkCode.free([1, 2], [1, 2])


@pytest.fixture
def triangle_link() -> LinkCode:
    """[1,2 ; 1,3 ; 2,3]: three circles meeting pairwise once"""
    return LinkCode.free([1, 2], [1, 3], [2, 3])


@pytest.fixture
def virtual_trefoil() -> LinkCode:
    return parse_code("O1+ O2+ U1+ U2+")


@pytest.fixture
def registry():
    """Registry with the built-in rules"""
    return default_registry()


@pytest.fixture
def graph_of():
    """Build the framed graph of a code"""
    return to_framed_graph

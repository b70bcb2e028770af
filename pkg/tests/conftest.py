"""
Shared pytest fixtures for hyperfoam.

Usage:
    pytest                          # run all tests
    pytest tests/test_holonomy.py   # a single file
    pytest -k pachner               # keyword filter
    pytest -m "not slow"            # skip the n=3 network and n=8 lattice

Tests run under hyperfoam.settings_test (invariant checks forced on).
"""
import pytest

from lattice.lattice import build_lattice
from lattice.supernode import build_supernode
from lattice.toy import build_toy_2d
from network.network import assemble
from particles.charges import fixture_rows


@pytest.fixture(scope="session")
def supernode_template():
    """The immutable 144-node F4 supernode."""
    return build_supernode()


@pytest.fixture(scope="session")
def small_lattice():
    """n=3 torus: 162 supernodes, the smallest simple-graph lattice."""
    return build_lattice(3)


@pytest.fixture
def tiny_network():
    """n=1 multigraph network: 2 supernodes, 288 nodes. Fresh per test, safe to mutate."""
    return assemble(build_lattice(1, multigraph=True))


@pytest.fixture(scope="module")
def network_n3(small_lattice):
    """Pristine n=3 network. Module-scoped: tests must not mutate it (use .copy())."""
    return assemble(small_lattice)


@pytest.fixture(scope="session")
def toy6():
    """The m=6 2D toy lattice (72 dual sites)."""
    return build_toy_2d(6)


@pytest.fixture(scope="session")
def fixture_roots():
    """The seven decoded roots shipped with the particles app."""
    return fixture_rows()

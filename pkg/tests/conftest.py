"""
Pytest configuration and shared fixtures
"""
import sys
from pathlib import Path

import pytest

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from bracetree.axioms import RandomTreeGenerator
from bracetree.config import Settings
from bracetree.trees import DecorationAlphabet, canonicalize, parse


@pytest.fixture(scope="session")
def one():
    """Single decoration `a` of grade 1."""
    return DecorationAlphabet(("a",))


@pytest.fixture(scope="session")
def two():
    """Decorations x1, x2 of grade 1."""
    return DecorationAlphabet.from_size(2)


@pytest.fixture(scope="session")
def abcd():
    """The four-letter alphabet of the worked examples."""
    return DecorationAlphabet.from_symbols("a,b,c,d")


@pytest.fixture(scope="session")
def graded():
    """F_D = x + x^2: one symbol of grade 1 and one of grade 2."""
    return DecorationAlphabet(("p", "q"), (1, 2))


@pytest.fixture
def planar(abcd):
    """Parse a planar tree over a,b,c,d."""
    return lambda text: parse(text, abcd)


@pytest.fixture
def rooted(abcd):
    """Parse a rooted tree over a,b,c,d."""
    return lambda text: canonicalize(parse(text, abcd))


@pytest.fixture
def tree_generator(one):
    """Seeded random tree generator for reproducible tests."""
    return RandomTreeGenerator(one, seed=42)


@pytest.fixture
def settings():
    """Default settings, independent of the environment."""
    return Settings()

"""
Configuration et fixtures pour les tests pytest
"""

import pytest
import os
import sys

import numpy as np

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from finite_field import field_for_order
from lower_bounds import SeedTable


@pytest.fixture
def gf2():
    """GF(2)."""
    return field_for_order(2)


@pytest.fixture
def gf3():
    """GF(3)."""
    return field_for_order(3)


@pytest.fixture
def gf4():
    """GF(4) with modulus x^2 + x + 1."""
    return field_for_order(4)


@pytest.fixture
def gf9():
    """GF(9) with modulus x^2 + 1."""
    return field_for_order(9)


@pytest.fixture
def rng():
    """Deterministic random generator."""
    return np.random.default_rng(20160711)


@pytest.fixture
def default_seeds():
    """Seed table with exactly the built-in values."""
    return SeedTable()


@pytest.fixture
def empty_seeds():
    """Seed table without any entry."""
    return SeedTable({})

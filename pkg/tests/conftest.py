import pytest

from operators.quadrature import QuadratureConfig


@pytest.fixture
def small_q():
    """Light quadrature for tests that nest operators."""
    return QuadratureConfig(panels=32, nodes_per_panel=8, grid_density=257)


@pytest.fixture
def sweep_q():
    return QuadratureConfig(panels=64)

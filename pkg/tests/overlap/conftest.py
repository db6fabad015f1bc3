"""
Shared fixtures for the far-field overlap tests.
"""

import pytest

from src.main.overlap import OverlapConfig, quadrature_grid


@pytest.fixture
def coarse_grid():
    """
    Quadrature grid for a 5-wavelength waist at the default orders.
    """
    config = OverlapConfig(w0=5.0)
    return quadrature_grid(config.theta0, config.theta_points, config.phi_points)

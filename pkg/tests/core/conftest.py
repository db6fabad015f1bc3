"""
Shared fixtures for the parameter and relation tests.
"""

import math

import pytest

from src.main.core import Geometry, SystemSpec


# ========================================================================================
# SPEC FIXTURES
# ========================================================================================

@pytest.fixture
def fp_spec():
    """
    High-finesse Fabry-Perot system at resonance with beta = 1/3.
    """
    return SystemSpec.build(beta=1.0 / 3.0, nu_fsr=250.0, t1_sq=1e-4, t2_sq=1e-4, alpha0=math.pi)


@pytest.fixture
def ring_spec():
    """
    Chiral ring counterpart of ``fp_spec`` with beta = 1/2.
    """
    return SystemSpec.build(beta=0.5, nu_fsr=250.0, geometry=Geometry.CHIRAL_RING)

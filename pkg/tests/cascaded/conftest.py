"""
Shared fixtures for the cascaded-model tests.
"""

import math

import pytest

from src.main.core import Geometry, SystemSpec


@pytest.fixture
def high_finesse():
    """
    Factory for lossless systems with t1^2 = t2^2 = 1e-4 and nu_fsr = 250 at resonance.
    """
    def _build(beta, alpha0=math.pi, geometry=Geometry.FABRY_PEROT, **kwargs):
        return SystemSpec.build(beta=beta, nu_fsr=kwargs.pop("nu_fsr", 250.0), t1_sq=kwargs.pop("t1_sq", 1e-4),
                                t2_sq=kwargs.pop("t2_sq", 1e-4), alpha0=alpha0, geometry=geometry, **kwargs)
    return _build


@pytest.fixture
def rabi_spec():
    """
    beta = 1, alpha0 = pi/2, nu_fsr = 50: g = 10 with the emitter at mirror 1.
    """
    return SystemSpec.build(beta=1.0, nu_fsr=50.0, t1_sq=1e-4, t2_sq=1e-4, alpha0=math.pi / 2, xa_frac=0.0)

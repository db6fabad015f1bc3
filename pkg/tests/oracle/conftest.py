"""
Shared fixtures for the scattering-network tests.
"""

import math

import numpy as np
import pytest

from src.main.core import Geometry, SystemSpec


def _draw_spec(rng):
    return SystemSpec.build(
        beta=float(rng.uniform(0.0, 1.0)),
        nu_fsr=float(rng.uniform(20.0, 500.0)),
        t1_sq=float(10 ** rng.uniform(-6, -2)),
        t2_sq=float(10 ** rng.uniform(-6, -2)),
        alpha0=float(rng.uniform(0.0, 2.0 * math.pi)),
        xa_frac=float(rng.uniform(0.0, 1.0)),
        delta0=float(rng.uniform(-5.0, 5.0)),
        delta_a=float(rng.uniform(-5.0, 5.0)),
        geometry=Geometry.CHIRAL_RING if rng.random() < 0.5 else Geometry.FABRY_PEROT,
    )


@pytest.fixture(scope="module")
def random_specs():
    """
    1000 seeded lossless specs over both geometries.
    """
    rng = np.random.default_rng(1000)
    return [_draw_spec(rng) for _ in range(1000)]


@pytest.fixture
def third_beta_spec():
    """
    Fabry-Perot at critical coupling: beta = 1/3, alpha0 = pi, resonance.
    """
    return SystemSpec.build(beta=1.0 / 3.0, nu_fsr=250.0, t1_sq=1e-4, t2_sq=1e-4, alpha0=math.pi)

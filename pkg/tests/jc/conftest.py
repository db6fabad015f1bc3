"""
Shared fixtures for the Jaynes-Cummings solver tests.
"""

import math

import numpy as np
import pytest

from src.main.core import Geometry, SystemSpec


@pytest.fixture
def empty_cavity():
    """
    High-finesse Fabry-Perot resonator without emitter coupling.
    """
    return SystemSpec.build(beta=0.0, nu_fsr=250.0, t1_sq=1e-4, t2_sq=1e-4, alpha0=math.pi)


@pytest.fixture
def strong_coupling():
    """
    g = 10 with kappa_l = 0.025 and gamma_l = 0.9, well inside the strong-coupling regime.
    """
    return SystemSpec.build(beta=0.1, nu_fsr=250.0, t1_sq=1e-4, t2_sq=1e-4, alpha0=math.pi)


@pytest.fixture(scope="module")
def random_specs():
    """
    1000 seeded lossless specs over both geometries with beta below 0.99 and detunings within 5 gamma.
    """
    rng = np.random.default_rng(20240611)
    specs = []
    for _ in range(1000):
        geometry = Geometry.CHIRAL_RING if rng.random() < 0.5 else Geometry.FABRY_PEROT
        specs.append(SystemSpec.build(
            beta=float(rng.uniform(0.0, 0.99)),
            nu_fsr=float(rng.uniform(20.0, 500.0)),
            t1_sq=float(10 ** rng.uniform(-6, -2)),
            t2_sq=float(10 ** rng.uniform(-6, -2)),
            alpha0=float(rng.uniform(0.0, 2.0 * math.pi)),
            xa_frac=float(rng.uniform(0.0, 1.0)),
            delta0=float(rng.uniform(-5.0, 5.0)),
            delta_a=float(rng.uniform(-5.0, 5.0)),
            geometry=geometry,
        ))
    return specs

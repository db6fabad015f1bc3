"""
cavity-cascade - steady states of a single two-level emitter in a
Fabry-Perot or chiral ring resonator under the Jaynes-Cummings and the
cascaded (roundtrip-resolved) description, with a scattering-network
cross-check and a dipole-to-Gaussian overlap for beta.
"""

from .cascaded import FpSteadyState, steady_state
from .core import Geometry, SystemSpec
from .file_io import FileIOInterface as FileIO
from .jc import JcSteadyState, jc_mirror_probe
from .logging import LoggingManager
from .oracle import oracle_solve

__all__ = [
    "FileIO",
    "FpSteadyState",
    "Geometry",
    "JcSteadyState",
    "LoggingManager",
    "SystemSpec",
    "jc_mirror_probe",
    "oracle_solve",
    "steady_state",
]

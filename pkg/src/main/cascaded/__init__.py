"""
Cascaded-model steady states for the Fabry-Perot and chiral ring resonators.
"""

from ._diagnostics import RabiShift, flux_residual, rabi_shift
from ._solver import fp_resonance_simplified, fp_steady_state, ring_steady_state, steady_state
from ._state import REGIONS, FpSteadyState

__all__ = [
    "REGIONS",
    "FpSteadyState",
    "RabiShift",
    "flux_residual",
    "fp_resonance_simplified",
    "fp_steady_state",
    "rabi_shift",
    "ring_steady_state",
    "steady_state",
]

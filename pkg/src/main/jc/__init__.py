"""Jaynes-Cummings steady states for mirror and emitter probing."""

from ._solver import (
    JcSteadyState,
    jc_emitter_probe,
    jc_mirror_probe,
    jc_mirror_probe_beta,
    validity_margin,
)

__all__ = [
    "JcSteadyState",
    "jc_emitter_probe",
    "jc_mirror_probe",
    "jc_mirror_probe_beta",
    "validity_margin",
]

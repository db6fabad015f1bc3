"""
Deviation metrics between the cascaded and JC steady states over a detuning grid.
"""

import math

import numpy as np
from loguru import logger

from ..cascaded import REGIONS, steady_state
from ..core import SystemSpec
from ..jc import jc_mirror_probe, validity_margin
from ._sweep import point_spec, quiet_solvers

log = logger.bind(logger_name="cli")

# reference magnitudes at or below this fraction of |phi_in| use the absolute difference
FALLBACK_FLOOR = 1e-12


def _metrics(values: np.ndarray, references: np.ndarray, floor: float) -> dict:
    absolute = np.abs(values - references)
    usable = references > floor
    relative = absolute[usable] / references[usable]
    return {
        "max_rel": float(relative.max()) if relative.size else math.nan,
        "mean_rel": float(relative.mean()) if relative.size else math.nan,
        "max_abs": float(absolute.max()),
        "fallback_points": int((~usable).sum()),
    }


def compare_models(spec: SystemSpec, grid: np.ndarray, emitter_cavity_detuning: float = 0.0) -> dict:
    """
    Compare |phi_1..4| of the cascaded model with the JC intracavity field
    |phi_a_local|, and the emitter amplitudes of both, along ``deltap``.

    Points where the JC reference vanishes contribute only to ``max_abs``
    and are counted in ``fallback_points``.

    Returns:
        dict: ``fields`` (per-region metrics), ``phi0`` metrics,
        ``jc_validity_margin``, ``points`` and ``interval``.
    """
    regions = {name: [] for name in REGIONS}
    phi_jc, phi0, phi0_jc = [], [], []
    with quiet_solvers():
        for value in grid:
            pspec = point_spec(spec, "deltap", float(value), emitter_cavity_detuning)
            cascaded = steady_state(pspec)
            jc_state = jc_mirror_probe(pspec)
            for name in REGIONS:
                regions[name].append(abs(getattr(cascaded, name)))
            phi_jc.append(abs(jc_state.phi_a_local))
            phi0.append(abs(cascaded.phi0))
            phi0_jc.append(abs(jc_state.phi0))

    floor = FALLBACK_FLOOR * abs(spec.probe.amp_in)
    reference = np.asarray(phi_jc)
    fields = {name: _metrics(np.asarray(values), reference, floor) for name, values in regions.items()}
    fallback = max(m["fallback_points"] for m in fields.values())
    if fallback:
        log.warning(f"JC intracavity field vanishes at {fallback} points; absolute differences reported there.")

    margin = validity_margin(spec)
    if margin >= 1.0:
        log.warning(f"JC validity margin Gamma/nu_fsr = {margin:.4g} >= 1; large deviations are expected.")
    return {
        "fields": fields,
        "phi0": _metrics(np.asarray(phi0), np.asarray(phi0_jc), floor),
        "jc_validity_margin": margin,
        "points": int(len(grid)),
        "interval": [float(grid[0]), float(grid[-1])],
    }

"""
Scattering-network oracle for the emitter-resonator system.

Each mirror k maps (outside in, cavity in) to (outside out, cavity out) by
the unitary matrix [[i r_k, t_k], [i t_k, -r_k]]. Free propagation between
the elements contributes pure phase factors. The emitter couples with
V_j = sqrt(2 beta_j gamma) to the forward (j = 1) and backward (j = 2) wave
and sees the midpoint of the field on both sides of its position.

The phases are distributed over the legs as follows: the mirror-1/emitter
legs together carry -(Delta_a/nu_fsr + alpha), the emitter/mirror-2 legs
carry alpha. ``split`` is the share of each leg pair's phase put on the
forward leg; observables do not depend on it.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np
from loguru import logger
from scipy.linalg import lu_factor, lu_solve

from ..cascaded import FpSteadyState
from ..core import DomainError, Geometry, MirrorSpec, SingularityError, SystemSpec, alpha_of_detuning

log = logger.bind(logger_name="oracle")

FP_UNKNOWNS = ("phi1", "phi2", "phi3", "phi4", "phi0", "phi_ref", "phi_trans")
RING_UNKNOWNS = ("phi1", "phi2", "phi34", "phi0", "phi_ref", "phi_trans")
_MAX_CONDITION = 1e12


def mirror_matrix(mirror: MirrorSpec) -> np.ndarray:
    """Mirror scattering matrix acting on (outside in, cavity in)."""
    return np.array([[1j * mirror.r, mirror.t], [1j * mirror.t, -mirror.r]], dtype=complex)


@dataclass(frozen=True)
class NetworkSystem:
    unknowns: tuple[str, ...]
    matrix: np.ndarray
    rhs: np.ndarray

    @property
    def condition(self) -> float:
        return float(np.linalg.cond(self.matrix))


def _leg_phases(spec: SystemSpec, split: float) -> tuple[complex, complex, complex, complex]:
    """Forward/backward phase factors of the mirror-1 and mirror-2 legs."""
    if not 0.0 <= split <= 1.0:
        raise DomainError(f"split must lie in [0, 1], got {split}.")
    delta = spec.probe.delta_a / spec.nu_fsr
    alpha = alpha_of_detuning(spec.cavity.alpha0, spec.probe.delta_a, spec.nu_fsr, spec.cavity.xa_frac)
    leg1 = -(delta + alpha)
    leg2 = alpha
    return (
        cmath.exp(1j * split * leg1),
        cmath.exp(1j * (1.0 - split) * leg1),
        cmath.exp(1j * split * leg2),
        cmath.exp(1j * (1.0 - split) * leg2),
    )


def _mirror_rows(
    m: np.ndarray,
    b: np.ndarray,
    mirror: MirrorSpec,
    outputs: tuple[int, int],
    cavity_in: tuple[int, complex],
    drive: complex,
) -> None:
    """
    Write (outside out, cavity out) = mirror_matrix @ (drive, cavity field) into two rows.

    ``outputs`` are the columns (and rows) of the outgoing fields, ``cavity_in`` the
    column of the field arriving from inside and its propagation phase.
    """
    column, phase = cavity_in
    for row, (s_outside, s_cavity) in zip(outputs, mirror_matrix(mirror)):
        m[row, row] = 1.0
        m[row, column] -= s_cavity * phase
        b[row] = s_outside * drive


def _fp_network(spec: SystemSpec, split: float) -> NetworkSystem:
    v1 = math.sqrt(2.0 * spec.emitter.beta1 * spec.gamma)
    v2 = math.sqrt(2.0 * spec.emitter.beta2 * spec.gamma)
    e1f, e1b, e2f, e2b = _leg_phases(spec, split)

    # columns: A1, F2, B3, B4, phi0, ref, trans
    m = np.zeros((7, 7), dtype=complex)
    b = np.zeros(7, dtype=complex)
    _mirror_rows(m, b, spec.mirror1, outputs=(5, 0), cavity_in=(3, e1b), drive=spec.probe.amp_in)
    _mirror_rows(m, b, spec.mirror2, outputs=(6, 2), cavity_in=(1, e2f), drive=0.0)
    # emitter jump, forward
    m[1, 1], m[1, 0], m[1, 4] = 1.0, -e1f, 1j * v1
    # emitter jump, backward
    m[3, 3], m[3, 2], m[3, 4] = 1.0, -e2b, 1j * v2
    # emitter steady state with midpoint fields
    m[4, 0] = v1 * e1f / 2.0
    m[4, 1] = v1 / 2.0
    m[4, 2] = v2 * e2b / 2.0
    m[4, 3] = v2 / 2.0
    m[4, 4] = complex(spec.probe.delta0, -spec.gamma_l)
    return NetworkSystem(unknowns=FP_UNKNOWNS, matrix=m, rhs=b)


def _ring_network(spec: SystemSpec, split: float) -> NetworkSystem:
    v1 = math.sqrt(2.0 * spec.emitter.beta1 * spec.gamma)
    e1f, e1b, e2f, e2b = _leg_phases(spec, split)

    # columns: A1, F2, B34, phi0, ref, trans
    m = np.zeros((6, 6), dtype=complex)
    b = np.zeros(6, dtype=complex)
    _mirror_rows(m, b, spec.mirror1, outputs=(4, 0), cavity_in=(2, e1b * e2b), drive=spec.probe.amp_in)
    _mirror_rows(m, b, spec.mirror2, outputs=(5, 2), cavity_in=(1, e2f), drive=0.0)
    m[1, 1], m[1, 0], m[1, 3] = 1.0, -e1f, 1j * v1
    m[3, 0] = v1 * e1f / 2.0
    m[3, 1] = v1 / 2.0
    m[3, 3] = complex(spec.probe.delta0, -spec.gamma_l)
    return NetworkSystem(unknowns=RING_UNKNOWNS, matrix=m, rhs=b)


def build_network(spec: SystemSpec, split: float = 0.5) -> NetworkSystem:
    """
    Assemble the linear system of the mirror, propagation and emitter relations.

    Args:
        spec (SystemSpec): Any valid spec; beta1 and beta2 are used as given.
        split (float): Share of each leg pair's phase on the forward leg.

    Returns:
        NetworkSystem: 7 x 7 for Fabry-Perot, 6 x 6 for the ring.
    """
    if spec.geometry is Geometry.CHIRAL_RING:
        return _ring_network(spec, split)
    return _fp_network(spec, split)


def oracle_solve(spec: SystemSpec, split: float = 0.5) -> FpSteadyState:
    """
    Solve the network by LU decomposition with partial pivoting.

    Internal phases follow the network's port convention, so only the
    magnitudes of phi0..phi4 are comparable with the closed forms.

    Raises:
        SingularityError: If the condition number exceeds 1e12.
    """
    system = build_network(spec, split)
    condition = system.condition
    if not math.isfinite(condition) or condition > _MAX_CONDITION:
        raise SingularityError(f"Scattering network is ill-conditioned (condition number {condition:.3g}).")
    log.debug(f"Solving {len(system.unknowns)}x{len(system.unknowns)} network, condition {condition:.3g}")

    values = dict(zip(system.unknowns, (complex(x) for x in lu_solve(lu_factor(system.matrix), system.rhs))))
    if "phi34" in values:
        values["phi3"] = values["phi4"] = values.pop("phi34")
    return FpSteadyState(**values)

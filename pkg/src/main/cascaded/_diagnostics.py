"""
Predictors and diagnostics built on the cascaded solutions.
"""

import math
from typing import NamedTuple, Protocol

from loguru import logger

from ..core import DomainError, Geometry, SystemSpec

log = logger.bind(logger_name="cascaded")

_WEAK_COUPLING = 5.0


class RabiShift(NamedTuple):
    shift: float
    peak_positions: tuple[float, float]


class _HasOutputs(Protocol):
    phi0: complex
    phi_ref: complex
    phi_trans: complex


def rabi_shift(spec: SystemSpec) -> RabiShift:
    """
    Shift of the vacuum Rabi doublet caused by the detuning dependence of alpha.

    Both peaks move by the same amount along the probe frequency
    omega_p - omega_0, with magnitude (beta gamma/2)|sin alpha0||4 x_a/L - 1|.
    A positive shift moves the doublet to higher probe frequency; with
    x_a/L = xa_frac/2 the shift is -(beta gamma/2) sin(alpha0)(2 xa_frac - 1).

    Returns:
        RabiShift: The shift and the predicted peak positions (-g + shift, g + shift).

    Raises:
        DomainError: For the ring geometry, which has no standing-wave phase.
    """
    if spec.geometry is not Geometry.FABRY_PEROT:
        raise DomainError("The Rabi shift is defined for the Fabry-Perot geometry only.")
    g = spec.g
    if g < _WEAK_COUPLING * spec.gamma:
        log.warning(
            f"g = {g:.4g} < {_WEAK_COUPLING} gamma: the doublet is not well resolved and the "
            f"predicted shift is only indicative."
        )
    shift = -0.5 * spec.beta * spec.gamma * math.sin(spec.cavity.alpha0) * (2.0 * spec.cavity.xa_frac - 1.0)
    return RabiShift(shift=shift, peak_positions=(-g + shift, g + shift))


def flux_residual(state: _HasOutputs, spec: SystemSpec) -> float:
    """
    Energy balance |phi_in|^2 - |phi_ref|^2 - |phi_trans|^2 - 2 gamma_l |phi0|^2.

    Vanishes for lossless mirrors. Accepts any state exposing ``phi0``,
    ``phi_ref`` and ``phi_trans``.

    Raises:
        DomainError: If either mirror is lossy.
    """
    if not spec.is_lossless:
        raise DomainError("flux_residual is only defined for lossless mirrors (r^2 + t^2 = 1).")
    return (
        abs(spec.probe.amp_in) ** 2
        - abs(state.phi_ref) ** 2
        - abs(state.phi_trans) ** 2
        - 2.0 * spec.gamma_l * abs(state.phi0) ** 2
    )

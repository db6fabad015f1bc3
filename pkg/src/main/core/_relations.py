"""
Algebraic relations between the resonator, emitter and coupling parameters.

Conventions: c = 1, so the cavity roundtrip length is L = 1/nu_fsr, and all
rates (gamma, kappa, nu_fsr, detunings) share one unit. Only detunings
Delta0 = omega0 - omega_p and Delta_a = omega_a - omega_p enter.
"""

import cmath
import math

from ._errors import DivergenceError, DomainError
from ._geometry import Geometry


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise DomainError(message)


def kappa_from_transmission(t: float, nu_fsr: float) -> float:
    """
    Field decay rate through a mirror of amplitude transmission ``t``.

    Also converts a roundtrip loss amplitude l0 into the intrinsic rate kappa0.

    Args:
        t (float): Amplitude transmission (or roundtrip loss amplitude), 0 <= t <= 1.
        nu_fsr (float): Free spectral range.

    Returns:
        float: kappa = t^2 * nu_fsr / 2.

    Raises:
        DomainError: If ``t`` is outside [0, 1] or ``nu_fsr`` is not positive.
    """
    _require(0.0 <= t <= 1.0, f"Transmission must lie in [0, 1], got {t}.")
    _require(nu_fsr > 0.0, f"nu_fsr must be positive, got {nu_fsr}.")
    return t * t * nu_fsr / 2.0


def transmission_from_kappa(kappa: float, nu_fsr: float) -> float:
    """Inverse of :func:`kappa_from_transmission`: t = sqrt(2 kappa / nu_fsr)."""
    _require(kappa >= 0.0, f"kappa must be non-negative, got {kappa}.")
    _require(nu_fsr > 0.0, f"nu_fsr must be positive, got {nu_fsr}.")
    t = math.sqrt(2.0 * kappa / nu_fsr)
    _require(t <= 1.0, f"kappa={kappa} exceeds the single-pass limit nu_fsr/2 for nu_fsr={nu_fsr}.")
    return t


def coupling_g(beta: float, gamma: float, nu_fsr: float, alpha0: float, geometry=Geometry.FABRY_PEROT) -> float:
    """
    Emitter-resonator coupling constant of the single-mode picture.

    Fabry-Perot: g = 2 |sin(alpha0/2)| sqrt(beta gamma nu_fsr).
    Chiral ring: g = sqrt(2 beta gamma nu_fsr), independent of alpha0.
    """
    _require(0.0 <= beta <= 1.0, f"beta must lie in [0, 1], got {beta}.")
    _require(gamma > 0.0, f"gamma must be positive, got {gamma}.")
    _require(nu_fsr > 0.0, f"nu_fsr must be positive, got {nu_fsr}.")
    if Geometry.parse(geometry) is Geometry.CHIRAL_RING:
        return math.sqrt(2.0 * beta * gamma * nu_fsr)
    return 2.0 * abs(math.sin(alpha0 / 2.0)) * math.sqrt(beta * gamma * nu_fsr)


def effective_coupling(beta: float, gamma: float, alpha: float) -> complex:
    """Single-roundtrip coupling of a standing wave, V_eff = V_a (1 - e^{i alpha}) with V_a = sqrt(beta gamma)."""
    _require(0.0 <= beta <= 1.0, f"beta must lie in [0, 1], got {beta}.")
    return math.sqrt(beta * gamma) * (1.0 - cmath.exp(1j * alpha))


def effective_rates(g: float, gamma_l: float, kappa_l: float) -> tuple[float, float]:
    """
    Emitter-induced cavity decay rate Gamma = g^2/gamma_l and cavity-induced
    emitter decay rate K = g^2/kappa_l.

    Raises:
        DivergenceError: If either loss rate vanishes.
    """
    _require(gamma_l >= 0.0 and kappa_l >= 0.0, "Loss rates must be non-negative.")
    if gamma_l == 0.0:
        raise DivergenceError(
            "Gamma = g^2/gamma_l diverges for gamma_l = 0: the emitter loses no light to free space, "
            "which is where the single-mode (JC) description breaks down."
        )
    if kappa_l == 0.0:
        raise DivergenceError(
            "K = g^2/kappa_l diverges for kappa_l = 0: a lossless resonator makes the "
            "cavity-induced emitter decay rate unbounded."
        )
    g_sq = g * g
    return g_sq / gamma_l, g_sq / kappa_l


def jc_breakdown_margin(beta: float, alpha0: float) -> float:
    """
    Gamma/nu_fsr = 4 beta sin^2(alpha0/2)/(1 - beta).

    Values >= 1 mean the emitter empties the cavity within one roundtrip and
    the single-field assumption of the JC model fails.
    """
    _require(0.0 <= beta <= 1.0, f"beta must lie in [0, 1], got {beta}.")
    if beta == 1.0:
        raise DivergenceError("Gamma/nu_fsr diverges at beta = 1 (gamma_l = 0).")
    s = math.sin(alpha0 / 2.0)
    return 4.0 * beta * s * s / (1.0 - beta)


def finesse_from(kappa_l: float, nu_fsr: float) -> float:
    """F = pi nu_fsr / kappa_l."""
    _require(nu_fsr > 0.0, f"nu_fsr must be positive, got {nu_fsr}.")
    if kappa_l <= 0.0:
        raise DivergenceError("Finesse diverges for kappa_l = 0.")
    return math.pi * nu_fsr / kappa_l


def cooperativity(beta: float, finesse: float) -> float:
    """C = 2 beta/(1 - beta) F/pi."""
    _require(0.0 <= beta < 1.0, f"beta must lie in [0, 1), got {beta}.")
    _require(finesse > 0.0, f"finesse must be positive, got {finesse}.")
    return 2.0 * beta / (1.0 - beta) * finesse / math.pi


def cooperativity_from_rates(g: float, kappa_l: float, gamma_l: float) -> float:
    """C = g^2/(2 kappa_l gamma_l)."""
    if kappa_l <= 0.0 or gamma_l <= 0.0:
        raise DivergenceError("Cooperativity diverges when kappa_l or gamma_l vanishes.")
    return g * g / (2.0 * kappa_l * gamma_l)


def tilde_beta(beta: float, delta0: float, gamma: float) -> complex:
    """Detuning-dependent channeling efficiency beta/(1 + i delta0/gamma)."""
    _require(gamma > 0.0, f"gamma must be positive, got {gamma}.")
    return beta / complex(1.0, delta0 / gamma)


def alpha_of_detuning(alpha0: float, delta_a: float, nu_fsr: float, xa_frac: float) -> float:
    """
    Phase between the two running waves at the emitter for a detuned probe.

    alpha = alpha0 - (delta_a/nu_fsr)(1 - 2 x_a/L) with x_a/L = xa_frac/2.
    """
    _require(0.0 <= xa_frac <= 1.0, f"xa_frac must lie in [0, 1], got {xa_frac}.")
    _require(nu_fsr > 0.0, f"nu_fsr must be positive, got {nu_fsr}.")
    return alpha0 - (delta_a / nu_fsr) * (1.0 - xa_frac)

"""
Closed-form steady states of the cascaded position-dependent-field model.

The emitter sits between the two mirrors and couples with beta1 to the
forward and beta2 to the backward running wave. The probe enters through
mirror 1. All amplitudes scale linearly with ``amp_in``.
"""

import cmath
import math

from loguru import logger

from ..core import (
    DomainError,
    Geometry,
    SingularityError,
    SystemSpec,
    alpha_of_detuning,
    tilde_beta,
)
from ._state import FpSteadyState

log = logger.bind(logger_name="cascaded")

_SINGULAR = 1e-30
_HIGH_FINESSE = 0.999


def _check_denominator(n: complex, what: str = "N") -> None:
    if not abs(n) >= _SINGULAR:
        raise SingularityError(f"Common denominator {what} vanishes (|{what}| = {abs(n):.3g}).")


def _phases(spec: SystemSpec) -> tuple[complex, float, float, complex]:
    """beta~, Delta_a/nu_fsr, alpha and sqrt(beta~/(gamma + i Delta0)) for the spec's probe."""
    p = spec.probe
    bt = tilde_beta(spec.beta, p.delta0, spec.gamma)
    delta = p.delta_a / spec.nu_fsr
    alpha = alpha_of_detuning(spec.cavity.alpha0, p.delta_a, spec.nu_fsr, spec.cavity.xa_frac)
    root = cmath.sqrt(bt / complex(spec.gamma, p.delta0))
    return bt, delta, alpha, root


def fp_steady_state(spec: SystemSpec) -> FpSteadyState:
    """
    Full Fabry-Perot solution for a symmetrically coupled emitter.

    Args:
        spec (SystemSpec): Fabry-Perot system with beta1 = beta2.

    Returns:
        FpSteadyState: All amplitudes, scaled by the probe amplitude.

    Raises:
        DomainError: If the geometry is not Fabry-Perot or the coupling is asymmetric.
        SingularityError: If |N| < 1e-30.
    """
    if spec.geometry is not Geometry.FABRY_PEROT:
        raise DomainError(f"fp_steady_state requires the Fabry-Perot geometry, got {spec.geometry.value}.")
    if not math.isclose(spec.emitter.beta1, spec.emitter.beta2, rel_tol=0.0, abs_tol=1e-15):
        raise DomainError(
            f"The closed form requires symmetric coupling beta1 = beta2, got "
            f"{spec.emitter.beta1} and {spec.emitter.beta2}. Use the oracle for asymmetric coupling."
        )

    r1, t1 = spec.mirror1.r, spec.mirror1.t
    r2, t2 = spec.mirror2.r, spec.mirror2.t
    amp = spec.probe.amp_in
    bt, delta, alpha, root = _phases(spec)
    e_a = cmath.exp(1j * alpha)
    e_d = cmath.exp(-1j * delta)

    n = 1.0 - e_d / e_a * r1 * bt - e_a * r2 * bt + e_d * r1 * r2 * (2.0 * bt - 1.0)
    _check_denominator(n)

    phi2 = -1j * t1 * (bt - 1.0) / n * amp
    phi4 = 1j * t1 * (r2 * (2.0 * bt - 1.0) - bt / e_a) / n * amp
    return FpSteadyState(
        phi1=-1j * t1 * (e_a * r2 * bt - 1.0) / n * amp,
        phi2=phi2,
        phi3=1j * t1 * r2 * (bt - 1.0) / n * amp,
        phi4=phi4,
        phi0=-t1 * cmath.exp(-0.5j * delta) * root * (cmath.exp(0.5j * alpha) * r2 - cmath.exp(-0.5j * alpha)) / n * amp,
        phi_ref=1j * r1 * amp + t1 * e_d * phi4,
        phi_trans=t2 * phi2,
        denom_N=n,
    )


def ring_steady_state(spec: SystemSpec) -> FpSteadyState:
    """
    Chiral ring solution, the emitter coupling to the forward running wave only.

    phi3 and phi4 coincide: no element separates them in the ring.
    """
    if spec.geometry is not Geometry.CHIRAL_RING or spec.emitter.beta2 != 0.0:
        raise DomainError("ring_steady_state requires the chiral ring geometry with beta2 = 0.")

    r1, t1 = spec.mirror1.r, spec.mirror1.t
    r2, t2 = spec.mirror2.r, spec.mirror2.t
    amp = spec.probe.amp_in
    bt, delta, alpha, _ = _phases(spec)
    e_d = cmath.exp(-1j * delta)

    n = 1.0 + e_d * r1 * r2 * (2.0 * bt - 1.0)
    _check_denominator(n)

    phi2 = -1j * t1 * (1.0 - 2.0 * bt) / n * amp
    phi34 = -1j * t1 * r2 * (1.0 - 2.0 * bt) / n * amp
    root2 = cmath.sqrt(2.0 * bt / complex(spec.gamma, spec.probe.delta0))
    return FpSteadyState(
        phi1=-1j * t1 / n * amp,
        phi2=phi2,
        phi3=phi34,
        phi4=phi34,
        phi0=-t1 * cmath.exp(-0.5j * delta) * root2 * cmath.exp(-0.5j * alpha) / n * amp,
        phi_ref=1j * r1 * amp + t1 * e_d * phi34,
        phi_trans=t2 * phi2,
        denom_N=n,
    )


def steady_state(spec: SystemSpec) -> FpSteadyState:
    """Closed-form solution for the spec's geometry."""
    if spec.geometry is Geometry.CHIRAL_RING:
        return ring_steady_state(spec)
    return fp_steady_state(spec)


def fp_resonance_simplified(spec: SystemSpec) -> FpSteadyState:
    """
    High-finesse on-resonance Fabry-Perot fields.

    With s = sin(alpha0/2) the regions are
    -i t1/(4 beta s^2) * {beta e^{i alpha0} - 1, beta - 1, 1 - beta, beta (e^{-i alpha0} - 2) + 1}
    and phi0 = -i t1/(2 s) sqrt(1/(beta gamma)).

    Raises:
        DomainError: If the probe is detuned, the finesse is too low,
            beta s^2 does not exceed t1 and t2, or s = 0.
    """
    if spec.geometry is not Geometry.FABRY_PEROT:
        raise DomainError("fp_resonance_simplified requires the Fabry-Perot geometry.")
    p = spec.probe
    if p.delta0 != 0.0 or p.delta_a != 0.0:
        raise DomainError(f"Simplified forms require Delta0 = Delta_a = 0, got {p.delta0} and {p.delta_a}.")
    r1, t1 = spec.mirror1.r, spec.mirror1.t
    r2, t2 = spec.mirror2.r, spec.mirror2.t
    if r1 * r2 < _HIGH_FINESSE:
        raise DomainError(f"Simplified forms require high finesse r1 r2 >= {_HIGH_FINESSE}, got {r1 * r2}.")

    alpha0 = spec.cavity.alpha0
    s = math.sin(alpha0 / 2.0)
    if s == 0.0:
        raise DomainError("Simplified forms require sin(alpha0/2) != 0 (emitter not at a node).")
    b = spec.beta
    strength = b * s * s
    if not (strength > t1 and strength > t2):
        raise DomainError(
            f"Simplified forms require beta sin^2(alpha0/2) > t1, t2; got {strength:.4g} against "
            f"t1 = {t1:.4g}, t2 = {t2:.4g}."
        )

    amp = p.amp_in
    pre = -1j * t1 / (4.0 * strength) * amp
    e_a = cmath.exp(1j * alpha0)
    phi2 = pre * (b - 1.0)
    phi4 = pre * (b * (1.0 / e_a - 2.0) + 1.0)
    return FpSteadyState(
        phi1=pre * (b * e_a - 1.0),
        phi2=phi2,
        phi3=pre * (1.0 - b),
        phi4=phi4,
        phi0=-1j * t1 / (2.0 * s) * math.sqrt(1.0 / (b * spec.gamma)) * amp,
        phi_ref=1j * r1 * amp + t1 * phi4,
        phi_trans=t2 * phi2,
        denom_N=complex(4.0 * strength),
    )

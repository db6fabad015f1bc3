"""
Closed-form steady states of the Jaynes-Cummings model in the weak-drive limit.

Two equivalent parametrizations are provided for the mirror probe: the raw
(g, kappa) form and the form expressed through the cascaded-model
parameters (beta, t_k, nu_fsr). Output fields use the input-output coupling
sqrt(2 kappa_k) of each mirror.
"""

import cmath
import math
from dataclasses import asdict, dataclass

from loguru import logger

from ..core import Geometry, SingularityError, DomainError, SystemSpec, tilde_beta

log = logger.bind(logger_name="jc_solver")

_SINGULAR = 1e-30
_BETA_B_MAX = 0.1
_BETA_B_WARN = 0.01


@dataclass(frozen=True)
class JcSteadyState:
    phi_a: complex
    phi_a_local: complex
    phi0: complex
    phi_ref: complex
    phi_trans: complex

    def as_dict(self) -> dict:
        return asdict(self)


def validity_margin(spec: SystemSpec) -> float:
    """Gamma/nu_fsr for the spec's geometry; ``inf`` when gamma_l = 0."""
    if spec.gamma_l == 0.0:
        return math.inf
    return spec.g ** 2 / (spec.gamma_l * spec.nu_fsr)


def _warn_validity(spec: SystemSpec) -> None:
    margin = validity_margin(spec)
    if margin >= 1.0:
        log.warning(
            f"JC validity margin Gamma/nu_fsr = {margin:.4g} >= 1: the emitter alters the cavity field "
            f"within a single roundtrip and the single-mode description is not reliable."
        )


def _denominator(spec: SystemSpec) -> complex:
    p = spec.probe
    d = spec.g ** 2 + complex(spec.gamma_l, p.delta0) * complex(spec.kappa_l, p.delta_a)
    if abs(d) < _SINGULAR:
        raise SingularityError(
            f"JC denominator vanishes (|D| = {abs(d):.3g}): lossless system probed at an exact eigenfrequency."
        )
    return d


def jc_mirror_probe(spec: SystemSpec) -> JcSteadyState:
    """
    Steady state for a probe incident on mirror 1.

    Args:
        spec (SystemSpec): System configuration. g follows the spec's geometry.

    Returns:
        JcSteadyState: Amplitudes scaled by the probe amplitude.

    Raises:
        SingularityError: If the denominator D vanishes.
    """
    _warn_validity(spec)
    p = spec.probe
    d = _denominator(spec)
    v1 = math.sqrt(2.0 * spec.kappa1)
    v2 = math.sqrt(2.0 * spec.kappa2)

    phi_a = -1j * v1 * complex(spec.gamma_l, p.delta0) / d * p.amp_in
    phi0 = -v1 * spec.g / d * p.amp_in
    return JcSteadyState(
        phi_a=phi_a,
        phi_a_local=phi_a * math.sqrt(spec.nu_fsr),
        phi0=phi0,
        phi_ref=p.amp_in - 1j * v1 * phi_a,
        phi_trans=-1j * v2 * phi_a,
    )


def jc_mirror_probe_beta(spec: SystemSpec) -> JcSteadyState:
    """
    Mirror-probe steady state written in the cascaded-model parameters.

    FP:   phi = -i t1 (1 - bt) / N,  N = (1 - bt)(l_tot^2/2 + i Delta_a/nu_fsr) + 4 bt sin^2(alpha0/2)
    ring: the coupling term 4 bt sin^2(alpha0/2) becomes 2 bt.

    ``phi`` is the per-length amplitude and populates ``phi_a_local``.
    """
    _warn_validity(spec)
    p = spec.probe
    t1 = spec.mirror1.t
    bt = tilde_beta(spec.beta, p.delta0, spec.gamma)
    root = cmath.sqrt(bt / complex(spec.gamma, p.delta0))

    if spec.geometry is Geometry.CHIRAL_RING:
        coupling = 2.0 * bt
        phi0_scale = -math.sqrt(2.0) * t1
    else:
        s = math.sin(spec.cavity.alpha0 / 2.0)
        coupling = 4.0 * bt * s * s
        phi0_scale = -2.0 * t1 * abs(s)

    n_jc = (1.0 - bt) * complex(spec.l_tot_sq / 2.0, p.delta_a / spec.nu_fsr) + coupling
    if abs(n_jc) < _SINGULAR:
        raise SingularityError(f"JC denominator N_JC vanishes (|N_JC| = {abs(n_jc):.3g}).")

    phi_local = -1j * t1 * (1.0 - bt) / n_jc * p.amp_in
    phi_a = phi_local / math.sqrt(spec.nu_fsr)
    return JcSteadyState(
        phi_a=phi_a,
        phi_a_local=phi_local,
        phi0=phi0_scale / n_jc * root * p.amp_in,
        phi_ref=p.amp_in - 1j * math.sqrt(2.0 * spec.kappa1) * phi_a,
        phi_trans=-1j * math.sqrt(2.0 * spec.kappa2) * phi_a,
    )


def jc_emitter_probe(spec: SystemSpec, beta_b: float) -> JcSteadyState:
    """
    Steady state for a probe driving the emitter through an external mode of efficiency ``beta_b``.

    gamma_l keeps its (1 - beta1 - beta2) gamma value, which requires beta_b << 1.

    Raises:
        DomainError: If beta_b lies outside [0, 0.1].
        SingularityError: If the denominator D vanishes.
    """
    if not 0.0 <= beta_b <= _BETA_B_MAX:
        raise DomainError(f"beta_b must lie in [0, {_BETA_B_MAX}] for the weakly coupled probe, got {beta_b}.")
    if beta_b > _BETA_B_WARN:
        log.warning(f"beta_b = {beta_b} > {_BETA_B_WARN}: the probe mode's own loss channel is neglected in gamma_l.")
    _warn_validity(spec)

    p = spec.probe
    d = _denominator(spec)
    vb = math.sqrt(2.0 * beta_b * spec.gamma)

    phi_a = -vb * spec.g / d * p.amp_in
    phi0 = -1j * vb * complex(spec.kappa_l, p.delta_a) / d * p.amp_in
    return JcSteadyState(
        phi_a=phi_a,
        phi_a_local=phi_a * math.sqrt(spec.nu_fsr),
        phi0=phi0,
        phi_ref=-1j * math.sqrt(2.0 * spec.kappa1) * phi_a,
        phi_trans=-1j * math.sqrt(2.0 * spec.kappa2) * phi_a,
    )

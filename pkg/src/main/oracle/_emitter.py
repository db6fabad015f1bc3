"""
Scattering of a running wave by a delta-coupled two-level emitter.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import lu_factor, lu_solve

from ..core import DomainError


@dataclass(frozen=True)
class EmitterScatterCoeffs:
    t_at: complex
    r_at: complex
    phi0_per_in: complex


def _check(beta1: float, beta2: float, gamma: float) -> None:
    if not (0.0 <= beta1 <= 1.0 and 0.0 <= beta2 <= 1.0) or beta1 + beta2 > 1.0 + 1e-12:
        raise DomainError(f"Require beta1, beta2 in [0, 1] with beta1 + beta2 <= 1, got {beta1}, {beta2}.")
    if gamma <= 0.0:
        raise DomainError(f"gamma must be positive, got {gamma}.")


def emitter_scatter(beta1: float, beta2: float, gamma: float, delta0: float) -> EmitterScatterCoeffs:
    """
    Closed-form transmission, reflection and excitation per unit forward input.

    t_at = 1 - 2 beta1 gamma/(gamma + i Delta0)
    r_at = -2 sqrt(beta1 beta2) gamma/(gamma + i Delta0)
    phi0 = -i sqrt(2 beta1 gamma)/(gamma + i Delta0)
    """
    _check(beta1, beta2, gamma)
    lorentz = complex(gamma, delta0)
    return EmitterScatterCoeffs(
        t_at=1.0 - 2.0 * beta1 * gamma / lorentz,
        r_at=-2.0 * math.sqrt(beta1 * beta2) * gamma / lorentz,
        phi0_per_in=-1j * math.sqrt(2.0 * beta1 * gamma) / lorentz,
    )


def isolated_emitter(beta1: float, beta2: float, gamma: float, delta0: float) -> EmitterScatterCoeffs:
    """
    Solve the jump conditions of a mirrorless emitter driven by a unit forward wave.

    Unknowns are (forward out, backward out, phi0). The emitter is driven by the
    midpoint (in + out)/2 of the field on each side of the coupling point.
    """
    _check(beta1, beta2, gamma)
    v1 = math.sqrt(2.0 * beta1 * gamma)
    v2 = math.sqrt(2.0 * beta2 * gamma)
    gamma_l = max(0.0, (1.0 - beta1 - beta2) * gamma)

    matrix = np.array(
        [
            [1.0, 0.0, 1j * v1],
            [0.0, 1.0, 1j * v2],
            [v1 / 2.0, v2 / 2.0, complex(delta0, -gamma_l)],
        ],
        dtype=complex,
    )
    rhs = np.array([1.0, 0.0, -v1 / 2.0], dtype=complex)
    f_out, b_out, phi0 = lu_solve(lu_factor(matrix), rhs)
    return EmitterScatterCoeffs(t_at=complex(f_out), r_at=complex(b_out), phi0_per_in=complex(phi0))

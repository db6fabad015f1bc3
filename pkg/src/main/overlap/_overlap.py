"""
Channeling efficiency of a transverse dipole into a Gaussian standing-wave mode.

The cavity mode radiates into both axial directions, so its far field has a
forward lobe exp(-theta^2/theta0^2) and a backward lobe
exp(-(pi - theta)^2/theta0^2). Both lobes carry the transverse projection of
the x-polarized beam, which on the sphere reads

    forward:  cos(phi) e_theta - sin(phi) e_phi
    backward: -cos(phi) e_theta - sin(phi) e_phi

and the dipole along x radiates cos(theta) cos(phi) e_theta - sin(phi) e_phi.
"""

import math
from typing import NamedTuple

import numpy as np
from loguru import logger

from ..core import AccuracyError, DomainError
from ._config import OverlapConfig

log = logger.bind(logger_name="overlap")

DIPOLE_TOTAL = 8.0 * math.pi / 3.0
_PANEL_WIDTH = 6.0
_CONVERGENCE_TOL = 1e-6


class QuadratureGrid(NamedTuple):
    theta: np.ndarray
    phi: np.ndarray
    weights: np.ndarray


def beta_analytic(w0: float, wavelength: float = 1.0) -> float:
    """
    Large-waist channeling efficiency 3/(2 pi^2) (lambda/w0)^2.

    Raises:
        DomainError: If the waist is not positive.
    """
    if not w0 > 0.0:
        raise DomainError(f"Waist w0 must be positive, got {w0}.")
    ratio = w0 / wavelength
    if ratio < 1.0:
        log.warning(f"w0 = {ratio:.4g} lambda is below one wavelength; the small-angle formula overestimates beta.")
    return 3.0 / (2.0 * math.pi ** 2) / (ratio * ratio)


def quadrature_grid(theta0: float, theta_points: int, phi_points: int) -> QuadratureGrid:
    """
    Tensor-product rule on the sphere, weights including sin(theta).

    Gauss-Legendre panels [0, c], [c, pi - c], [pi - c, pi] with
    c = min(6 theta0, pi/2) resolve both lobes. The azimuth uses the
    periodic trapezoid rule.
    """
    c = min(_PANEL_WIDTH * theta0, math.pi / 2.0)
    nodes, weights = np.polynomial.legendre.leggauss(theta_points)
    thetas, theta_weights = [], []
    for a, b in ((0.0, c), (c, math.pi - c), (math.pi - c, math.pi)):
        if b - a <= 0.0:
            continue
        half = 0.5 * (b - a)
        thetas.append(a + half * (nodes + 1.0))
        theta_weights.append(half * weights)
    theta = np.concatenate(thetas)
    w_theta = np.concatenate(theta_weights) * np.sin(theta)

    phi = 2.0 * math.pi * np.arange(phi_points) / phi_points
    w_phi = np.full(phi_points, 2.0 * math.pi / phi_points)

    th, ph = np.meshgrid(theta, phi, indexing="ij")
    return QuadratureGrid(theta=th, phi=ph, weights=np.outer(w_theta, w_phi))


def gaussian_field(grid: QuadratureGrid, theta0: float) -> tuple[np.ndarray, np.ndarray]:
    """(theta, phi) components of the unnormalized two-lobe mode."""
    forward = np.exp(-(grid.theta / theta0) ** 2)
    backward = np.exp(-((math.pi - grid.theta) / theta0) ** 2)
    cos_p, sin_p = np.cos(grid.phi), np.sin(grid.phi)
    return (forward - backward) * cos_p, -(forward + backward) * sin_p


def dipole_field(grid: QuadratureGrid) -> tuple[np.ndarray, np.ndarray]:
    """(theta, phi) components of the unnormalized x-dipole far field."""
    return np.cos(grid.theta) * np.cos(grid.phi), -np.sin(grid.phi)


def _integrate(grid: QuadratureGrid, values: np.ndarray) -> float:
    return float(np.sum(grid.weights * values))


def self_overlap(grid: QuadratureGrid, field: tuple[np.ndarray, np.ndarray]) -> float:
    """Integrated intensity of ``field`` over the sphere."""
    return _integrate(grid, np.abs(field[0]) ** 2 + np.abs(field[1]) ** 2)


def normalized(grid: QuadratureGrid, field: tuple[np.ndarray, np.ndarray]) -> tuple[np.ndarray, np.ndarray]:
    """``field`` scaled to unit integrated intensity on ``grid``."""
    norm = math.sqrt(self_overlap(grid, field))
    return field[0] / norm, field[1] / norm


def _beta_at(config: OverlapConfig) -> float:
    theta0 = config.theta0
    grid = quadrature_grid(theta0, config.theta_points, config.phi_points)
    e_g = normalized(grid, gaussian_field(grid, theta0))
    e_d = normalized(grid, dipole_field(grid))
    cross = _integrate(grid, e_g[0] * np.conj(e_d[0]) + e_g[1] * np.conj(e_d[1]))
    return abs(cross) ** 2


def beta_numeric(config: OverlapConfig) -> float:
    """
    Channeling efficiency from the normalized far-field overlap |<E_G|E_D>|^2.

    The result is evaluated at the configured orders and at doubled orders;
    the doubled-order value is returned.

    Raises:
        AccuracyError: If doubling the orders changes beta by more than 1e-6 relative.
    """
    coarse = _beta_at(config)
    fine = _beta_at(config.doubled())
    change = abs(fine - coarse) / max(abs(fine), np.finfo(float).tiny)
    if change > _CONVERGENCE_TOL:
        raise AccuracyError(
            f"Overlap quadrature not converged for w0 = {config.w0}: doubling the orders changed beta by "
            f"{change:.3g} (relative). Increase theta_points or phi_points."
        )
    log.debug(f"beta_numeric(w0={config.w0}) = {fine:.10g}, order change {change:.3g}")
    return fine

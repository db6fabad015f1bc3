"""Dipole-to-Gaussian-mode channeling efficiency."""

from ._config import OverlapConfig
from ._overlap import (
    DIPOLE_TOTAL,
    QuadratureGrid,
    beta_analytic,
    beta_numeric,
    dipole_field,
    gaussian_field,
    normalized,
    quadrature_grid,
    self_overlap,
)

__all__ = [
    "DIPOLE_TOTAL",
    "OverlapConfig",
    "QuadratureGrid",
    "beta_analytic",
    "beta_numeric",
    "dipole_field",
    "gaussian_field",
    "normalized",
    "quadrature_grid",
    "self_overlap",
]

import math
from dataclasses import dataclass

from ..core import DomainError

MIN_ORDER = 16


@dataclass(frozen=True)
class OverlapConfig:
    """
    Far-field overlap settings.

    ``w0`` is the Gaussian waist, in the same length unit as ``wavelength``
    (the default wavelength of 1 measures it in wavelengths). ``theta_points``
    is the Gauss-Legendre order per polar panel and ``phi_points`` the number
    of azimuthal trapezoid nodes. The beam polarization matches the dipole
    axis on the optical axis.
    """

    w0: float
    wavelength: float = 1.0
    theta_points: int = 48
    phi_points: int = 32

    def __post_init__(self):
        if not self.w0 > 0.0:
            raise DomainError(f"Waist w0 must be positive, got {self.w0}.")
        if not self.wavelength > 0.0:
            raise DomainError(f"Wavelength must be positive, got {self.wavelength}.")
        if self.theta_points < MIN_ORDER or self.phi_points < MIN_ORDER:
            raise DomainError(
                f"Quadrature orders must be at least {MIN_ORDER}, got theta_points={self.theta_points}, "
                f"phi_points={self.phi_points}."
            )

    @property
    def theta0(self) -> float:
        """Far-field divergence angle lambda/(pi w0)."""
        return self.wavelength / (math.pi * self.w0)

    def doubled(self) -> "OverlapConfig":
        return OverlapConfig(
            w0=self.w0,
            wavelength=self.wavelength,
            theta_points=2 * self.theta_points,
            phi_points=2 * self.phi_points,
        )

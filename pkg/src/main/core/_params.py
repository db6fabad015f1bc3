"""
Immutable parameter sets describing a probed emitter-resonator system.

All specs are frozen dataclasses validated on construction; derived
quantities (kappa, g, gamma_l, ...) are exposed as properties on
:class:`SystemSpec` so that solvers never recompute them differently.
"""

import math
from dataclasses import dataclass, field, replace

from ._errors import DomainError
from ._geometry import Geometry
from ._relations import coupling_g, kappa_from_transmission

_LOSS_TOL = 1e-12


@dataclass(frozen=True)
class MirrorSpec:
    r: float
    t: float

    def __post_init__(self):
        if not (0.0 <= self.r <= 1.0 and 0.0 <= self.t <= 1.0):
            raise DomainError(f"Mirror coefficients must lie in [0, 1], got r={self.r}, t={self.t}.")
        if self.r * self.r + self.t * self.t > 1.0 + _LOSS_TOL:
            raise DomainError(f"Mirror violates r^2 + t^2 <= 1 (r={self.r}, t={self.t}).")

    @classmethod
    def lossless(cls, t_sq: float) -> "MirrorSpec":
        """Mirror with power transmission ``t_sq`` and r = sqrt(1 - t_sq)."""
        if not 0.0 <= t_sq <= 1.0:
            raise DomainError(f"Power transmission must lie in [0, 1], got {t_sq}.")
        return cls(r=math.sqrt(1.0 - t_sq), t=math.sqrt(t_sq))

    @property
    def loss(self) -> float:
        return max(0.0, 1.0 - self.r * self.r - self.t * self.t)

    @property
    def is_lossless(self) -> bool:
        return abs(1.0 - self.r * self.r - self.t * self.t) <= _LOSS_TOL


@dataclass(frozen=True)
class EmitterSpec:
    gamma: float = 1.0
    beta1: float = 0.0
    beta2: float = 0.0

    def __post_init__(self):
        if self.gamma <= 0.0:
            raise DomainError(f"gamma must be positive, got {self.gamma}.")
        if not (0.0 <= self.beta1 <= 1.0 and 0.0 <= self.beta2 <= 1.0):
            raise DomainError(f"Channeling efficiencies must lie in [0, 1], got {self.beta1}, {self.beta2}.")
        if self.beta1 + self.beta2 > 1.0 + _LOSS_TOL:
            raise DomainError(f"beta1 + beta2 must not exceed 1, got {self.beta1 + self.beta2}.")

    @classmethod
    def symmetric(cls, beta: float, gamma: float = 1.0) -> "EmitterSpec":
        """Fabry-Perot emitter coupling equally to both running waves."""
        return cls(gamma=gamma, beta1=beta / 2.0, beta2=beta / 2.0)

    @classmethod
    def chiral(cls, beta: float, gamma: float = 1.0) -> "EmitterSpec":
        """Ring emitter coupling to the forward running wave only."""
        return cls(gamma=gamma, beta1=beta, beta2=0.0)

    @property
    def beta(self) -> float:
        return self.beta1 + self.beta2

    @property
    def gamma_l(self) -> float:
        return max(0.0, (1.0 - self.beta) * self.gamma)


@dataclass(frozen=True)
class CavitySpec:
    nu_fsr: float
    alpha0: float = math.pi
    xa_frac: float = 0.5

    def __post_init__(self):
        if self.nu_fsr <= 0.0:
            raise DomainError(f"nu_fsr must be positive, got {self.nu_fsr}.")
        if not 0.0 <= self.xa_frac <= 1.0:
            raise DomainError(f"xa_frac must lie in [0, 1], got {self.xa_frac}.")

    @property
    def length(self) -> float:
        """Roundtrip length L = c/nu_fsr with c = 1."""
        return 1.0 / self.nu_fsr


@dataclass(frozen=True)
class ProbeSpec:
    delta0: float = 0.0
    delta_a: float = 0.0
    amp_in: complex = 1.0

    def __post_init__(self):
        if self.amp_in == 0:
            raise DomainError("Probe amplitude amp_in must be non-zero.")


@dataclass(frozen=True)
class SystemSpec:
    mirror1: MirrorSpec
    mirror2: MirrorSpec
    emitter: EmitterSpec
    cavity: CavitySpec
    probe: ProbeSpec = field(default_factory=ProbeSpec)
    geometry: Geometry = Geometry.FABRY_PEROT

    def __post_init__(self):
        object.__setattr__(self, "geometry", Geometry.parse(self.geometry))
        if self.geometry is Geometry.CHIRAL_RING and self.emitter.beta2 != 0.0:
            raise DomainError("A chirally coupled ring emitter requires beta2 = 0.")

    @classmethod
    def build(
        cls,
        beta: float,
        nu_fsr: float,
        t1_sq: float = 1e-4,
        t2_sq: float = 1e-4,
        alpha0: float = math.pi,
        xa_frac: float = 0.5,
        delta0: float = 0.0,
        delta_a: float = 0.0,
        gamma: float = 1.0,
        amp_in: complex = 1.0,
        geometry=Geometry.FABRY_PEROT,
    ) -> "SystemSpec":
        """Convenience constructor for lossless mirrors and the standard beta split of each geometry."""
        geometry = Geometry.parse(geometry)
        emitter = (
            EmitterSpec.chiral(beta, gamma) if geometry is Geometry.CHIRAL_RING else EmitterSpec.symmetric(beta, gamma)
        )
        return cls(
            mirror1=MirrorSpec.lossless(t1_sq),
            mirror2=MirrorSpec.lossless(t2_sq),
            emitter=emitter,
            cavity=CavitySpec(nu_fsr=nu_fsr, alpha0=alpha0, xa_frac=xa_frac),
            probe=ProbeSpec(delta0=delta0, delta_a=delta_a, amp_in=amp_in),
            geometry=geometry,
        )

    # ------------------------------ derived quantities ------------------------------ #
    @property
    def beta(self) -> float:
        return self.emitter.beta

    @property
    def gamma(self) -> float:
        return self.emitter.gamma

    @property
    def gamma_l(self) -> float:
        return self.emitter.gamma_l

    @property
    def nu_fsr(self) -> float:
        return self.cavity.nu_fsr

    @property
    def kappa1(self) -> float:
        return kappa_from_transmission(self.mirror1.t, self.nu_fsr)

    @property
    def kappa2(self) -> float:
        return kappa_from_transmission(self.mirror2.t, self.nu_fsr)

    @property
    def l0_sq(self) -> float:
        """Intrinsic roundtrip power loss, collected from both mirrors."""
        return self.mirror1.loss + self.mirror2.loss

    @property
    def kappa0(self) -> float:
        return kappa_from_transmission(math.sqrt(min(self.l0_sq, 1.0)), self.nu_fsr)

    @property
    def kappa_l(self) -> float:
        return self.kappa0 + self.kappa1 + self.kappa2

    @property
    def l_tot_sq(self) -> float:
        return self.l0_sq + self.mirror1.t ** 2 + self.mirror2.t ** 2

    @property
    def g(self) -> float:
        return coupling_g(self.beta, self.gamma, self.nu_fsr, self.cavity.alpha0, self.geometry)

    @property
    def is_lossless(self) -> bool:
        return self.mirror1.is_lossless and self.mirror2.is_lossless

    # ------------------------------ variations ------------------------------ #
    def with_probe(self, **changes) -> "SystemSpec":
        return replace(self, probe=replace(self.probe, **changes))

    def with_cavity(self, **changes) -> "SystemSpec":
        return replace(self, cavity=replace(self.cavity, **changes))

    def with_beta(self, beta: float) -> "SystemSpec":
        if self.geometry is Geometry.CHIRAL_RING:
            emitter = EmitterSpec.chiral(beta, self.gamma)
        else:
            emitter = EmitterSpec.symmetric(beta, self.gamma)
        return replace(self, emitter=emitter)

    def swapped(self) -> "SystemSpec":
        """Same system probed through mirror 2: mirrors exchanged, xa_frac -> 1 - xa_frac."""
        return replace(
            self,
            mirror1=self.mirror2,
            mirror2=self.mirror1,
            cavity=replace(self.cavity, xa_frac=1.0 - self.cavity.xa_frac),
        )

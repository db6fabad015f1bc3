"""
Physical parameters, unit conventions and the algebraic relations among them.
"""

from ._errors import (
    AccuracyError,
    CavityError,
    ConfigError,
    DivergenceError,
    DomainError,
    SingularityError,
)
from ._geometry import Geometry
from ._params import CavitySpec, EmitterSpec, MirrorSpec, ProbeSpec, SystemSpec
from ._relations import (
    alpha_of_detuning,
    cooperativity,
    cooperativity_from_rates,
    coupling_g,
    effective_coupling,
    effective_rates,
    finesse_from,
    jc_breakdown_margin,
    kappa_from_transmission,
    tilde_beta,
    transmission_from_kappa,
)

ComplexAmp = complex

__all__ = [
    "AccuracyError",
    "CavityError",
    "ConfigError",
    "DivergenceError",
    "DomainError",
    "SingularityError",
    "Geometry",
    "ComplexAmp",
    "CavitySpec",
    "EmitterSpec",
    "MirrorSpec",
    "ProbeSpec",
    "SystemSpec",
    "alpha_of_detuning",
    "cooperativity",
    "cooperativity_from_rates",
    "coupling_g",
    "effective_coupling",
    "effective_rates",
    "finesse_from",
    "jc_breakdown_margin",
    "kappa_from_transmission",
    "tilde_beta",
    "transmission_from_kappa",
]

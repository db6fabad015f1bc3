"""
Numerical scattering-network solver used to cross-check the closed forms.
"""

from ._emitter import EmitterScatterCoeffs, emitter_scatter, isolated_emitter
from ._network import NetworkSystem, build_network, mirror_matrix, oracle_solve

__all__ = [
    "EmitterScatterCoeffs",
    "NetworkSystem",
    "build_network",
    "emitter_scatter",
    "isolated_emitter",
    "mirror_matrix",
    "oracle_solve",
]

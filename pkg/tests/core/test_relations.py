"""
Tests for the algebraic relations between resonator, emitter and coupling parameters.
"""

import math

import pytest

from src.main.core import (
    DivergenceError,
    DomainError,
    Geometry,
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

pytestmark = pytest.mark.unit


class TestDecayRates:
    """Mirror transmission and decay rate conversions."""

    def test_kappa_from_transmission(self):
        assert kappa_from_transmission(0.01, 250.0) == pytest.approx(0.0125, rel=1e-15)

    @pytest.mark.parametrize("t, nu_fsr", [(0.0, 10.0), (0.01, 250.0), (0.3, 50.0), (1.0, 2.0)])
    def test_transmission_inverts_kappa(self, t, nu_fsr):
        assert transmission_from_kappa(kappa_from_transmission(t, nu_fsr), nu_fsr) == pytest.approx(t, abs=1e-15)

    @pytest.mark.parametrize("t, nu_fsr", [(-0.1, 250.0), (1.5, 250.0), (0.1, 0.0), (0.1, -5.0)])
    def test_invalid_inputs_raise(self, t, nu_fsr):
        with pytest.raises(DomainError):
            kappa_from_transmission(t, nu_fsr)

    def test_kappa_above_single_pass_limit_raises(self):
        with pytest.raises(DomainError, match="single-pass"):
            transmission_from_kappa(200.0, 250.0)

    def test_finesse(self):
        assert finesse_from(0.025, 250.0) == pytest.approx(math.pi * 1e4)

    def test_finesse_diverges_without_loss(self):
        with pytest.raises(DivergenceError):
            finesse_from(0.0, 250.0)


class TestCoupling:
    """Coupling constant and effective rates."""

    def test_fp_coupling_at_antinode(self):
        assert coupling_g(1.0, 1.0, 250.0, math.pi) == pytest.approx(2.0 * math.sqrt(250.0))

    def test_fp_coupling_vanishes_at_node(self):
        assert coupling_g(0.5, 1.0, 250.0, 0.0) == 0.0

    def test_fp_coupling_symmetric_in_alpha0(self):
        assert coupling_g(0.4, 1.0, 50.0, math.pi / 2) == pytest.approx(coupling_g(0.4, 1.0, 50.0, -math.pi / 2))

    @pytest.mark.parametrize("alpha0", [0.0, 1.0, math.pi])
    def test_ring_coupling_ignores_alpha0(self, alpha0):
        assert coupling_g(0.5, 1.0, 250.0, alpha0, Geometry.CHIRAL_RING) == pytest.approx(math.sqrt(250.0))

    @pytest.mark.parametrize("beta", [-0.1, 1.1])
    def test_beta_out_of_range(self, beta):
        with pytest.raises(DomainError):
            coupling_g(beta, 1.0, 250.0, math.pi)

    def test_effective_coupling_at_antinode(self):
        assert effective_coupling(0.25, 1.0, math.pi) == pytest.approx(1.0 + 0j)

    def test_effective_rates(self):
        big_gamma, big_k = effective_rates(10.0, 0.5, 2.0)
        assert big_gamma == pytest.approx(200.0)
        assert big_k == pytest.approx(50.0)

    @pytest.mark.parametrize("gamma_l, kappa_l", [(0.0, 1.0), (1.0, 0.0)])
    def test_effective_rates_diverge(self, gamma_l, kappa_l):
        with pytest.raises(DivergenceError):
            effective_rates(1.0, gamma_l, kappa_l)


class TestBreakdownMargin:
    """Gamma/nu_fsr from beta and alpha0."""

    def test_boundary_is_exactly_one(self):
        assert jc_breakdown_margin(0.2, math.pi) == pytest.approx(1.0, rel=1e-15)

    def test_boundary_brackets(self):
        assert jc_breakdown_margin(0.15, math.pi) < 1.0 < jc_breakdown_margin(0.25, math.pi)

    def test_node_has_no_margin(self):
        assert jc_breakdown_margin(0.9, 0.0) == 0.0

    def test_diverges_at_full_channeling(self):
        with pytest.raises(DivergenceError):
            jc_breakdown_margin(1.0, math.pi)

    def test_matches_rate_definition(self, fp_spec):
        spec = fp_spec
        margin = spec.g ** 2 / (spec.gamma_l * spec.nu_fsr)
        assert jc_breakdown_margin(spec.beta, spec.cavity.alpha0) == pytest.approx(margin, rel=1e-12)


class TestCooperativity:

    def test_rate_and_finesse_forms_agree(self, fp_spec):
        spec = fp_spec
        finesse = finesse_from(spec.kappa_l, spec.nu_fsr)
        from_rates = cooperativity_from_rates(spec.g, spec.kappa_l, spec.gamma_l)
        # the finesse form assumes alpha0 = pi
        assert cooperativity(spec.beta, finesse) == pytest.approx(from_rates, rel=1e-12)

    def test_diverges_without_free_space_loss(self):
        with pytest.raises(DivergenceError):
            cooperativity_from_rates(1.0, 0.1, 0.0)


class TestDetuningDependence:

    def test_tilde_beta_on_resonance(self):
        assert tilde_beta(0.3, 0.0, 1.0) == 0.3

    def test_tilde_beta_at_one_linewidth(self):
        assert tilde_beta(1.0, 1.0, 1.0) == pytest.approx(0.5 - 0.5j)

    @pytest.mark.parametrize("xa_frac, expected", [(0.0, math.pi - 0.1), (0.5, math.pi - 0.05), (1.0, math.pi)])
    def test_alpha_of_detuning(self, xa_frac, expected):
        assert alpha_of_detuning(math.pi, 5.0, 50.0, xa_frac) == pytest.approx(expected, rel=1e-14)

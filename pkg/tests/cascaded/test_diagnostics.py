"""
Tests for the Rabi-shift predictor and the measured spectral shifts it describes.
"""

import math
from unittest.mock import patch

import pytest

from src.main.cascaded import RabiShift, rabi_shift, steady_state
from src.main.cli import find_extrema
from src.main.core import DomainError, SystemSpec

pytestmark = pytest.mark.unit


def _phi1_along_deltap(spec):
    def magnitude(deltap):
        return abs(steady_state(spec.with_probe(delta0=-deltap, delta_a=-deltap)).phi1)
    return magnitude


def _doublet_centre(spec):
    """Mean position of the two highest |phi1| maxima along omega_p - omega_0."""
    report = find_extrema(_phi1_along_deltap(spec), -15.0, 15.0, points=3001, kind="max")
    highest = sorted(report.maxima(), key=lambda e: e.height)[-2:]
    assert len(highest) == 2
    low, high = sorted(e.position for e in highest)
    assert low == pytest.approx(-spec.g, abs=1.0)
    assert high == pytest.approx(spec.g, abs=1.0)
    return 0.5 * (low + high)


def _deepest_minimum(spec):
    report = find_extrema(_phi1_along_deltap(spec), -3.0, 3.0, points=601, kind="min")
    return min(report.minima(), key=lambda e: e.height).position


class TestRabiShiftPredictor:

    @pytest.mark.parametrize("xa_frac, expected", [(0.0, 0.5), (0.5, 0.0), (1.0, -0.5)])
    def test_shift_follows_emitter_position(self, rabi_spec, xa_frac, expected):
        result = rabi_shift(rabi_spec.with_cavity(xa_frac=xa_frac))
        assert isinstance(result, RabiShift)
        assert result.shift == pytest.approx(expected, abs=1e-15)
        g = rabi_spec.g
        assert result.peak_positions == pytest.approx((-g + expected, g + expected))

    def test_mirror_swap_reverses_shift(self, rabi_spec):
        assert rabi_shift(rabi_spec.swapped()).shift == pytest.approx(-rabi_shift(rabi_spec).shift)

    def test_ring_has_no_shift(self):
        with pytest.raises(DomainError):
            rabi_shift(SystemSpec.build(beta=1.0, nu_fsr=50.0, geometry="ring"))

    def test_weak_coupling_warns(self):
        spec = SystemSpec.build(beta=0.01, nu_fsr=50.0, alpha0=math.pi / 2)
        with patch("src.main.cascaded._diagnostics.log") as mock_log:
            rabi_shift(spec)
        mock_log.warning.assert_called_once()


class TestMeasuredDoublet:
    """Peak positions of |phi1| measured on the closed forms."""

    def test_shift_magnitude_at_mirror(self, rabi_spec):
        centre = _doublet_centre(rabi_spec)
        assert abs(centre) == pytest.approx(0.5, rel=0.15)
        assert centre == pytest.approx(rabi_shift(rabi_spec).shift, abs=0.075)

    def test_no_shift_at_centre(self, rabi_spec):
        assert abs(_doublet_centre(rabi_spec.with_cavity(xa_frac=0.5))) <= 0.02

    def test_shift_reverses_at_far_mirror(self, rabi_spec):
        near = _doublet_centre(rabi_spec)
        far = _doublet_centre(rabi_spec.with_cavity(xa_frac=1.0))
        assert far * near < 0
        assert abs(far) == pytest.approx(0.5, rel=0.15)

    def test_probing_through_mirror_two_reverses_shift(self, rabi_spec):
        near = _doublet_centre(rabi_spec)
        swapped = _doublet_centre(rabi_spec.swapped())
        assert swapped * near < 0
        assert swapped == pytest.approx(-near, abs=0.05)


class TestMinimumShift:
    """The |phi1| minimum between the Rabi peaks moves by beta gamma."""

    @pytest.mark.parametrize("xa_frac", [0.0, 0.5, 1.0])
    def test_minimum_position(self, rabi_spec, xa_frac):
        spec = rabi_spec.with_cavity(xa_frac=xa_frac)
        position = _deepest_minimum(spec)
        assert abs(position) == pytest.approx(1.0, rel=0.05)

        mirrored = _deepest_minimum(spec.with_cavity(alpha0=-math.pi / 2))
        assert abs(mirrored) == pytest.approx(1.0, rel=0.05)
        assert position * mirrored < 0

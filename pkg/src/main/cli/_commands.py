"""
Subcommand implementations. Each takes resolved settings and returns the
result object that ``main`` renders.
"""

import math
from types import SimpleNamespace
from typing import Any

from loguru import logger

from ..cascaded import flux_residual, rabi_shift
from ..core import (
    CavityError,
    DivergenceError,
    DomainError,
    Geometry,
    SystemSpec,
    cooperativity_from_rates,
    finesse_from,
)
from ..jc import validity_margin
from ..oracle import build_network
from ..overlap import OverlapConfig, beta_analytic, beta_numeric
from ._compare import compare_models
from ._peaks import PeakReport, find_extrema
from ._settings import DEFAULT_POINTS, build_spec
from ._sweep import (
    JC_FIELDS,
    SweepResult,
    check_combination,
    evaluate,
    point_spec,
    quiet_solvers,
    run_sweep,
    sweep_grid,
)

log = logger.bind(logger_name="cli")


def _or_none(func, *args) -> Any:
    try:
        return func(*args)
    except DivergenceError:
        return None


def parameters(spec: SystemSpec) -> dict:
    return {
        "geometry": spec.geometry.value,
        "beta": spec.beta,
        "gamma": spec.gamma,
        "alpha0": spec.cavity.alpha0,
        "xa_frac": spec.cavity.xa_frac,
        "nu_fsr": spec.nu_fsr,
        "r1": spec.mirror1.r,
        "t1": spec.mirror1.t,
        "r2": spec.mirror2.r,
        "t2": spec.mirror2.t,
        "delta0": spec.probe.delta0,
        "delta_a": spec.probe.delta_a,
        "amp_in": abs(spec.probe.amp_in),
    }


def derived(spec: SystemSpec) -> dict:
    return {
        "g": spec.g,
        "kappa1": spec.kappa1,
        "kappa2": spec.kappa2,
        "kappa_l": spec.kappa_l,
        "gamma_l": spec.gamma_l,
        "cooperativity": _or_none(cooperativity_from_rates, spec.g, spec.kappa_l, spec.gamma_l),
        "finesse": _or_none(finesse_from, spec.kappa_l, spec.nu_fsr),
        "jc_validity_margin": validity_margin(spec),
    }


def _half_span(spec: SystemSpec) -> float:
    return 3.0 * spec.g if spec.g > 0.0 else 5.0


def _grid_bounds(settings: dict, lo: float, hi: float) -> tuple[float, float]:
    start = settings["start"] if settings["start"] is not None else lo
    stop = settings["stop"] if settings["stop"] is not None else hi
    return start, stop


def _points(settings: dict, command: str) -> int:
    return settings["points"] if settings["points"] is not None else DEFAULT_POINTS[command]


def _warn_beta_b(settings: dict) -> None:
    if settings["probe"] == "emitter" and settings["beta_b"] > 0.01:
        log.warning(f"beta_b = {settings['beta_b']} > 0.01: the emitter probe perturbs the emitter linewidth.")


def cmd_solve(settings: dict) -> dict:
    """Amplitudes, derived rates and the inputs of a single configuration."""
    spec = build_spec(settings)
    model, engine = settings["model"], settings["engine"]
    amplitudes = evaluate(spec, model, engine, settings["probe"], settings["beta_b"])

    document = {
        "command": "solve",
        "model": model,
        "engine": engine,
        "probe": settings["probe"],
        "parameters": parameters(spec),
        "derived": derived(spec),
        "amplitudes": {
            name: {"abs": abs(value), "re": complex(value).real, "im": complex(value).imag}
            for name, value in amplitudes.items()
        },
    }
    if model != "jc":
        if spec.is_lossless:
            document["flux_residual"] = flux_residual(SimpleNamespace(**{k: amplitudes[k] for k in ("phi0", "phi_ref", "phi_trans")}), spec)
        if engine == "oracle":
            document["condition"] = build_network(spec).condition
    return document


_SWEEP_RANGES = {"beta": (0.0, 1.0), "alpha0": (0.0, 2.0 * math.pi), "xafrac": (0.0, 1.0)}


def cmd_sweep(settings: dict) -> SweepResult:
    """Grid evaluation along ``var``; failed points become ``error`` rows."""
    spec = build_spec(settings)
    variable = settings["var"]
    check_combination(settings["model"], settings["engine"], settings["probe"])
    _warn_beta_b(settings)
    if variable == "deltap":
        span = _half_span(spec)
        lo, hi = -span, span
    else:
        lo, hi = _SWEEP_RANGES[variable]
    start, stop = _grid_bounds(settings, lo, hi)
    grid = sweep_grid(start, stop, _points(settings, "sweep"))
    return run_sweep(
        spec,
        variable,
        grid,
        model=settings["model"],
        engine=settings["engine"],
        probe=settings["probe"],
        beta_b=settings["beta_b"],
        emitter_cavity_detuning=settings["emitter_cavity_detuning"],
    )


def cmd_peaks(settings: dict) -> dict:
    """Refined extrema of |field| along ``deltap``, with the predicted Rabi shift where defined."""
    spec = build_spec(settings)
    field_name = settings["field"]
    model = "jc" if field_name in JC_FIELDS else "cascaded"
    engine, probe, beta_b = settings["engine"], settings["probe"], settings["beta_b"]
    if model == "cascaded" and probe == "emitter":
        probe = "mirror"
    check_combination(model, engine, probe)
    _warn_beta_b(settings)
    detuning = settings["emitter_cavity_detuning"]

    def magnitude(x: float) -> float:
        try:
            return abs(evaluate(point_spec(spec, "deltap", x, detuning), model, engine, probe, beta_b)[field_name])
        except CavityError:
            return math.nan

    span = _half_span(spec)
    start, stop = _grid_bounds(settings, -span, span)
    with quiet_solvers():
        report: PeakReport = find_extrema(magnitude, start, stop, _points(settings, "peaks"),
                                          kind=settings["kind"], field_name=field_name)

    document = {"command": "peaks", "variable": "deltap", "parameters": parameters(spec), "g": spec.g}
    document.update(report.as_dict())
    if spec.geometry is Geometry.FABRY_PEROT and spec.beta > 0.0:
        shift = rabi_shift(spec)
        document["predicted_rabi_shift"] = {"shift": shift.shift, "peak_positions": list(shift.peak_positions)}
    return document


def cmd_compare(settings: dict) -> dict:
    """Cascaded-versus-JC deviation metrics along ``deltap`` (default +-3g)."""
    spec = build_spec(settings)
    if settings["engine"] == "oracle":
        raise DomainError("compare evaluates the closed forms; drop --engine oracle.")
    span = _half_span(spec)
    start, stop = _grid_bounds(settings, -span, span)
    grid = sweep_grid(start, stop, _points(settings, "compare"))
    document = {"command": "compare", "parameters": parameters(spec), "g": spec.g}
    document.update(compare_models(spec, grid, settings["emitter_cavity_detuning"]))
    return document


def cmd_beta_waist(settings: dict) -> dict:
    """Analytic and quadrature channeling efficiency for a waist in wavelengths."""
    w0 = settings["w0"] if settings["w0"] is not None else settings["waist"]
    if w0 is None:
        raise DomainError("beta-waist needs a waist: pass --w0.")
    config = OverlapConfig(w0=w0, theta_points=settings["theta_points"], phi_points=settings["phi_points"])
    analytic = beta_analytic(w0)
    numeric = beta_numeric(config)
    fine = config.doubled()
    return {
        "command": "beta-waist",
        "w0": w0,
        "wavelength": config.wavelength,
        "theta0": config.theta0,
        "beta_analytic": analytic,
        "beta_numeric": numeric,
        "relative_difference": abs(numeric - analytic) / analytic,
        "quadrature": {
            "theta_points": config.theta_points,
            "phi_points": config.phi_points,
            "theta_points_used": fine.theta_points,
            "phi_points_used": fine.phi_points,
        },
    }


COMMANDS = {
    "solve": cmd_solve,
    "sweep": cmd_sweep,
    "peaks": cmd_peaks,
    "compare": cmd_compare,
    "beta-waist": cmd_beta_waist,
}

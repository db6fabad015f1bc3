"""
Point evaluation under the selected model/engine and grid sweeps.
"""

import math
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np
from loguru import logger
from pandas import DataFrame

from .. import cascaded, jc
from ..cascaded import REGIONS, steady_state
from ..core import CavityError, DomainError, SystemSpec
from ..jc import jc_emitter_probe, jc_mirror_probe, validity_margin
from ..oracle import oracle_solve

log = logger.bind(logger_name="cli")

CASCADED_FIELDS = REGIONS + ("phi0", "phi_ref", "phi_trans")
JC_FIELDS = ("phi_jc", "phi_a_jc", "phi0_jc", "phi_ref_jc", "phi_trans_jc")

UNITS = {"beta": "1", "deltap": "gamma", "alpha0": "rad", "xafrac": "1"}


def model_fields(model: str) -> tuple[str, ...]:
    if model == "jc":
        return JC_FIELDS
    if model == "cascaded":
        return CASCADED_FIELDS
    return CASCADED_FIELDS + JC_FIELDS


def check_combination(model: str, engine: str, probe: str) -> None:
    """
    Raises:
        DomainError: For the JC model on the oracle engine, or an emitter probe of the cascaded model.
    """
    if model == "jc" and engine == "oracle":
        raise DomainError("The oracle engine solves the cascaded model only; use --model cascaded or both.")
    if probe == "emitter" and model != "jc":
        raise DomainError("Emitter probing is available for the JC model only; use --model jc.")


def evaluate(spec: SystemSpec, model: str, engine: str = "closed_form", probe: str = "mirror", beta_b: float = 0.01) -> dict[str, complex]:
    """
    Steady-state amplitudes of ``spec`` keyed by output field name.

    Cascaded fields are ``phi1``..``phi4``, ``phi0``, ``phi_ref`` and
    ``phi_trans``; JC fields carry a ``_jc`` suffix, with ``phi_jc`` the
    intracavity field in roundtrip-normalized units.
    """
    check_combination(model, engine, probe)
    amplitudes: dict[str, complex] = {}
    if model in ("cascaded", "both"):
        state = oracle_solve(spec) if engine == "oracle" else steady_state(spec)
        amplitudes.update(state.as_dict())
        amplitudes.pop("denom_N", None)
    if model in ("jc", "both"):
        state = jc_emitter_probe(spec, beta_b) if probe == "emitter" else jc_mirror_probe(spec)
        amplitudes.update(
            phi_jc=state.phi_a_local,
            phi_a_jc=state.phi_a,
            phi0_jc=state.phi0,
            phi_ref_jc=state.phi_ref,
            phi_trans_jc=state.phi_trans,
        )
    return amplitudes


def amplitude_columns(fields: tuple[str, ...]) -> list[str]:
    return [f"{part}_{name}" for name in fields for part in ("abs", "re", "im")]


def flatten(amplitudes: dict[str, complex], fields: tuple[str, ...]) -> dict[str, float]:
    row = {}
    for name in fields:
        value = complex(amplitudes.get(name, complex(math.nan, math.nan)))
        row[f"abs_{name}"] = abs(value)
        row[f"re_{name}"] = value.real
        row[f"im_{name}"] = value.imag
    return row


def point_spec(spec: SystemSpec, variable: str, value: float, emitter_cavity_detuning: float = 0.0) -> SystemSpec:
    """
    ``spec`` with the sweep variable set to ``value``.

    ``deltap`` is omega_p - omega_0: Delta0 = -deltap and
    Delta_a = Delta0 - emitter_cavity_detuning.
    """
    if variable == "beta":
        return spec.with_beta(value)
    if variable == "deltap":
        return spec.with_probe(delta0=-value, delta_a=-value - emitter_cavity_detuning)
    if variable == "alpha0":
        return spec.with_cavity(alpha0=value)
    if variable == "xafrac":
        return spec.with_cavity(xa_frac=value)
    raise DomainError(f"Unknown sweep variable {variable!r}; expected one of {', '.join(UNITS)}.")


def sweep_grid(start: float, stop: float, points: int) -> np.ndarray:
    """
    Raises:
        DomainError: If the grid would not be strictly monotonic.
    """
    if points < 1:
        raise DomainError(f"A sweep needs at least one point, got {points}.")
    if not (math.isfinite(start) and math.isfinite(stop)):
        raise DomainError("Sweep bounds must be finite.")
    if points > 1 and start == stop:
        raise DomainError("Sweep bounds coincide; the grid would not be strictly monotonic.")
    return np.linspace(start, stop, points) if points > 1 else np.array([float(start)])


@contextmanager
def quiet_solvers() -> Iterator[None]:
    """Silence per-point solver logging while a grid is evaluated."""
    names = (jc.__name__, cascaded.__name__)
    for name in names:
        logger.disable(name)
    try:
        yield
    finally:
        for name in names:
            logger.enable(name)


@dataclass
class SweepResult:
    variable: str
    unit: str
    grid: np.ndarray
    rows: list[dict] = field(default_factory=list)
    engine: str = "closed_form"
    model: str = "cascaded"

    def __post_init__(self):
        if len(self.rows) != len(self.grid):
            raise ValueError(f"SweepResult has {len(self.rows)} rows for {len(self.grid)} grid points")

    @property
    def columns(self) -> list[str]:
        return [self.variable] + amplitude_columns(model_fields(self.model)) + ["status", "message"]

    @property
    def failed(self) -> int:
        return sum(row["status"] != "ok" for row in self.rows)

    def to_frame(self) -> DataFrame:
        return DataFrame(self.rows, columns=self.columns)


def run_sweep(
    spec: SystemSpec,
    variable: str,
    grid: np.ndarray,
    model: str = "cascaded",
    engine: str = "closed_form",
    probe: str = "mirror",
    beta_b: float = 0.01,
    emitter_cavity_detuning: float = 0.0,
) -> SweepResult:
    """
    Evaluate ``spec`` at every grid value in grid order.

    A point whose parameters or solver fail yields a row with status
    ``error``, NaN amplitudes and the error message; the sweep continues.
    """
    check_combination(model, engine, probe)
    fields = model_fields(model)
    rows = []
    invalid_jc = 0
    with quiet_solvers():
        for value in grid:
            value = float(value)
            row = {variable: value}
            try:
                pspec = point_spec(spec, variable, value, emitter_cavity_detuning)
                row.update(flatten(evaluate(pspec, model, engine, probe, beta_b), fields))
                row.update(status="ok", message="")
                if model != "cascaded" and validity_margin(pspec) >= 1.0:
                    invalid_jc += 1
            except CavityError as e:
                row.update(flatten({}, fields))
                row.update(status="error", message=str(e))
            rows.append(row)

    result = SweepResult(variable=variable, unit=UNITS[variable], grid=np.asarray(grid, dtype=float),
                         rows=rows, engine=engine, model=model)
    if invalid_jc:
        log.warning(f"JC validity margin Gamma/nu_fsr >= 1 at {invalid_jc} of {len(grid)} grid points.")
    if result.failed:
        log.warning(f"{result.failed} of {len(grid)} grid points failed; see the status column.")
    log.info(f"Swept {variable} over {len(grid)} points ({model}, {engine}).")
    return result

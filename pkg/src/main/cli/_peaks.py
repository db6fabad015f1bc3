"""
Local extrema of a sampled magnitude spectrum with iterative zoom refinement.
"""

import math
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np
from loguru import logger
from scipy.signal import find_peaks

log = logger.bind(logger_name="cli")

MIN_POINTS = 200
ZOOM_POINTS = 21
_TINY = 1e-300


@dataclass(frozen=True)
class Extremum:
    position: float
    height: float
    kind: str
    field: str


@dataclass
class PeakReport:
    field: str
    interval: tuple[float, float]
    extrema: list[Extremum] = field(default_factory=list)
    grid_step: float = math.nan
    points: int = 0
    refinement_iterations: int = 0
    tolerance: float = 1e-4

    def maxima(self) -> list[Extremum]:
        return [e for e in self.extrema if e.kind == "max"]

    def minima(self) -> list[Extremum]:
        return [e for e in self.extrema if e.kind == "min"]

    def as_dict(self) -> dict:
        return {
            "field": self.field,
            "interval": list(self.interval),
            "extrema": [asdict(e) for e in self.extrema],
            "method": {
                "grid_step": self.grid_step,
                "points": self.points,
                "refinement_iterations": self.refinement_iterations,
                "tolerance": self.tolerance,
            },
        }


def _vertex(xs: np.ndarray, ys: np.ndarray) -> float:
    """Vertex of the parabola through three equally spaced points, kept inside them."""
    curvature = ys[0] - 2.0 * ys[1] + ys[2]
    if not np.isfinite(curvature) or curvature >= 0.0:
        return float(xs[1])
    step = xs[1] - xs[0]
    x = xs[1] + 0.5 * step * (ys[0] - ys[2]) / curvature
    return float(min(max(x, xs[0]), xs[2]))


def refine(
    func: Callable[[float], float],
    x0: float,
    half_width: float,
    sign: float,
    tol: float = 1e-4,
    max_iter: int = 60,
) -> tuple[float, int]:
    """
    Zoom on the extremum of ``sign * log|func|`` near ``x0``.

    Each iteration resamples the bracket at 21 points, takes the best sample
    and its two neighbours as the new bracket and estimates the position by
    parabolic interpolation; it stops once the estimate moves by less than
    ``tol``.

    Returns:
        tuple[float, int]: Refined position and iterations used.
    """
    lo, hi = x0 - half_width, x0 + half_width
    best = x0
    for iteration in range(1, max_iter + 1):
        xs = np.linspace(lo, hi, ZOOM_POINTS)
        ys = sign * np.log(np.array([func(x) for x in xs]) + _TINY)
        ys = np.where(np.isfinite(ys), ys, -np.inf)
        j = int(np.argmax(ys))
        if j in (0, ZOOM_POINTS - 1):
            # extremum beyond the bracket: recentre without shrinking
            width = hi - lo
            lo, hi = xs[j] - width / 2.0, xs[j] + width / 2.0
            best = float(xs[j])
            continue
        estimate = _vertex(xs[j - 1:j + 2], ys[j - 1:j + 2])
        lo, hi = xs[j - 1], xs[j + 1]
        moved = abs(estimate - best)
        best = estimate
        if moved < tol and (hi - lo) < tol:
            return best, iteration
    log.warning(f"Extremum refinement near {x0:.6g} stopped after {max_iter} iterations.")
    return best, max_iter


def find_extrema(
    func: Callable[[float], float],
    start: float,
    stop: float,
    points: int = 2001,
    kind: str = "both",
    field_name: str = "phi1",
    tol: float = 1e-4,
) -> PeakReport:
    """
    Locate and refine the interior local extrema of ``func`` on [start, stop].

    Args:
        func (Callable[[float], float]): Non-negative magnitude; may return NaN where undefined.
        kind (str): ``max``, ``min`` or ``both``.

    Raises:
        ValueError: If fewer than 200 grid points are requested or the interval is empty.
    """
    if points < MIN_POINTS:
        raise ValueError(f"Peak search needs at least {MIN_POINTS} grid points, got {points}.")
    if not stop > start:
        raise ValueError(f"Empty scan interval [{start}, {stop}].")

    xs = np.linspace(start, stop, points)
    step = float(xs[1] - xs[0])
    ys = np.array([func(x) for x in xs], dtype=float)
    report = PeakReport(field=field_name, interval=(float(start), float(stop)), grid_step=step,
                        points=points, tolerance=tol)

    searches = []
    if kind in ("max", "both"):
        searches.append(("max", 1.0, np.where(np.isnan(ys), -np.inf, ys)))
    if kind in ("min", "both"):
        searches.append(("min", -1.0, np.where(np.isnan(ys), -np.inf, -ys)))

    extrema = []
    for label, sign, values in searches:
        indices, _ = find_peaks(values)
        for i in indices:
            position, iterations = refine(func, float(xs[i]), step, sign, tol)
            position = min(max(position, start), stop)
            report.refinement_iterations = max(report.refinement_iterations, iterations)
            extrema.append(Extremum(position=position, height=abs(float(func(position))), kind=label, field=field_name))

    report.extrema = sorted(extrema, key=lambda e: e.position)
    if not report.extrema:
        what = "extremum" if kind == "both" else ("maximum" if kind == "max" else "minimum")
        log.warning(f"No {what} of |{field_name}| found in [{start}, {stop}].")
    return report

"""
Run settings: defaults, sweep presets, config files and their conversion
into a :class:`SystemSpec`.

Settings are flat dicts keyed by the flag names with dashes replaced by
underscores (``--nu-fsr`` -> ``nu_fsr``; ``--from``/``--to`` -> ``start``/
``stop``). Layers are merged in the order defaults < preset < config file <
command-line flags.
"""

import math
import re
from io import BytesIO
from typing import Any, Callable, Optional

from ..core import (
    ConfigError,
    CavitySpec,
    DomainError,
    EmitterSpec,
    Geometry,
    MirrorSpec,
    ProbeSpec,
    SystemSpec,
)
from ..file_io import FileIOInterface, KeyValueFileIO
from ..overlap import beta_analytic
from .._aux import iter_update_dict

_ANGLE = re.compile(
    r"^(?P<sign>[+-]?)"
    r"(?:(?P<coef>\d*\.?\d+(?:e[+-]?\d+)?)\s*\*?\s*)?"
    r"(?P<pi>pi)?"
    r"(?:\s*/\s*(?P<den>\d*\.?\d+))?$"
)


def parse_angle(value: Any) -> float:
    """
    Parse an angle in radians: a number or a multiple of ``pi`` such as
    ``pi``, ``-pi/2``, ``2*pi/3`` or ``0.5pi``.

    Raises:
        ValueError: If the text is not a recognised angle.
    """
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return float(value)
    text = str(value).strip().lower().replace(" ", "")
    match = _ANGLE.match(text)
    if not text or match is None or (match["coef"] is None and match["pi"] is None):
        raise ValueError(f"not an angle: {value!r}")
    result = float(match["coef"]) if match["coef"] is not None else 1.0
    if match["pi"]:
        result *= math.pi
    if match["den"] is not None:
        den = float(match["den"])
        if den == 0.0:
            raise ValueError(f"division by zero in angle {value!r}")
        result /= den
    return -result if match["sign"] == "-" else result


def _parse_bool(value: Any) -> bool:
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in {"1", "true", "yes", "on"}:
        return True
    if text in {"0", "false", "no", "off"}:
        return False
    raise ValueError(f"not a boolean: {value!r}")


def _choice(*options: str) -> Callable[[Any], str]:
    def convert(value: Any) -> str:
        text = str(value).strip().lower()
        if text not in options:
            raise ValueError(f"expected one of {', '.join(options)}, got {value!r}")
        return text
    return convert


def _optional_float(value: Any) -> Optional[float]:
    if value is None or str(value).strip().lower() in {"", "none", "null"}:
        return None
    return float(value)


def _int(value: Any) -> int:
    if isinstance(value, float) and not value.is_integer():
        raise ValueError(f"not an integer: {value!r}")
    return int(value)


MODELS = ("jc", "cascaded", "both")
ENGINES = ("closed_form", "oracle")
PROBES = ("mirror", "emitter")
SWEEP_VARS = ("beta", "deltap", "alpha0", "xafrac")
FIELDS = ("phi1", "phi2", "phi3", "phi4", "phi0", "phi_ref", "phi_trans",
          "phi_jc", "phi_a_jc", "phi0_jc", "phi_ref_jc", "phi_trans_jc")

CONVERTERS: dict[str, Callable[[Any], Any]] = {
    "model": _choice(*MODELS),
    "engine": _choice(*ENGINES),
    "geometry": _choice(*(g.value for g in Geometry)),
    "beta": float,
    "alpha0": parse_angle,
    "t1sq": float,
    "t2sq": float,
    "r1": _optional_float,
    "r2": _optional_float,
    "lossless": _parse_bool,
    "nu_fsr": float,
    "xa_frac": float,
    "delta0": _optional_float,
    "deltaa": _optional_float,
    "amp_in": float,
    "emitter_cavity_detuning": float,
    "probe": _choice(*PROBES),
    "beta_b": float,
    "waist": _optional_float,
    "var": _choice(*SWEEP_VARS),
    "start": _optional_float,
    "stop": _optional_float,
    "points": _int,
    "preset": lambda value: None if value is None else str(value).strip(),
    "field": _choice(*FIELDS),
    "kind": _choice("max", "min", "both"),
    "w0": _optional_float,
    "theta_points": _int,
    "phi_points": _int,
    "out": lambda value: None if value is None else str(value),
}

_ALIASES = {"from": "start", "to": "stop"}

DEFAULTS: dict[str, Any] = {
    "model": "cascaded",
    "engine": "closed_form",
    "geometry": "fp",
    "beta": 0.0,
    "alpha0": math.pi,
    "t1sq": 1e-4,
    "t2sq": 1e-4,
    "r1": None,
    "r2": None,
    "lossless": False,
    "nu_fsr": 250.0,
    "xa_frac": 0.5,
    "delta0": None,
    "deltaa": None,
    "amp_in": 1.0,
    "emitter_cavity_detuning": 0.0,
    "probe": "mirror",
    "beta_b": 0.01,
    "waist": None,
    "var": "beta",
    "start": None,
    "stop": None,
    "points": None,
    "preset": None,
    "field": "phi1",
    "kind": "both",
    "w0": None,
    "theta_points": 48,
    "phi_points": 32,
    "out": None,
}

# grid size when --points is not given
DEFAULT_POINTS = {"sweep": 101, "peaks": 2001, "compare": 201}

_ANTINODE = {"geometry": "fp", "alpha0": math.pi, "t1sq": 1e-4, "t2sq": 1e-4, "nu_fsr": 250.0, "xa_frac": 0.5, "model": "both"}
_HALF_NODE = {"geometry": "fp", "alpha0": math.pi / 2.0, "t1sq": 1e-4, "t2sq": 1e-4, "nu_fsr": 50.0, "beta": 1.0, "model": "both"}
_RING = {"geometry": "ring", "t1sq": 1e-4, "t2sq": 1e-4, "nu_fsr": 250.0, "model": "both"}

PRESETS: dict[str, dict[str, Any]] = {
    "antinode-beta": {**_ANTINODE, "var": "beta", "start": 0.0, "stop": 1.0, "points": 201},
    "antinode-third": {**_ANTINODE, "var": "deltap", "beta": 1.0 / 3.0, "start": -30.0, "stop": 30.0, "points": 1201},
    "antinode-full": {**_ANTINODE, "var": "deltap", "beta": 1.0, "start": -50.0, "stop": 50.0, "points": 2001},
    "halfnode-beta": {**_HALF_NODE, "var": "beta", "start": 0.0, "stop": 1.0, "points": 201},
    "halfnode-xa0": {**_HALF_NODE, "var": "deltap", "xa_frac": 0.0, "start": -15.0, "stop": 15.0, "points": 1201},
    "halfnode-xa-mid": {**_HALF_NODE, "var": "deltap", "xa_frac": 0.5, "start": -15.0, "stop": 15.0, "points": 1201},
    "halfnode-xa1": {**_HALF_NODE, "var": "deltap", "xa_frac": 1.0, "start": -15.0, "stop": 15.0, "points": 1201},
    "ring-beta": {**_RING, "var": "beta", "start": 0.0, "stop": 1.0, "points": 201},
    "ring-half": {**_RING, "var": "deltap", "beta": 0.5, "start": -35.0, "stop": 35.0, "points": 1401},
    "ring-full": {**_RING, "var": "deltap", "beta": 1.0, "start": -35.0, "stop": 35.0, "points": 1401},
}


def normalize_key(key: str) -> str:
    """Map a flag or config key (``--nu-fsr``, ``nu_fsr``, ``from``) to its settings name."""
    name = str(key).strip().lstrip("-").replace("-", "_").lower()
    return _ALIASES.get(name, name)


def convert_value(key: str, value: Any, line: Optional[int] = None, path: Optional[str] = None) -> Any:
    """
    Raises:
        ConfigError: If the key is unknown or the value cannot be converted.
    """
    if key not in CONVERTERS:
        raise ConfigError(f"unknown key {key!r}", line=line, path=path)
    try:
        return CONVERTERS[key](value)
    except (TypeError, ValueError) as e:
        raise ConfigError(f"invalid value for {key!r}: {e}", line=line, path=path) from e


def parse_config(path: str) -> dict[str, Any]:
    """
    Read a run configuration file.

    ``.cfg``/``.conf`` files hold ``key=value`` lines; ``.yaml``/``.yml``
    files hold a flat mapping. Keys are flag names with or without leading
    dashes, with ``-`` and ``_`` interchangeable.

    Returns:
        dict[str, Any]: Converted settings present in the file.

    Raises:
        ConfigError: On unreadable files, unknown keys or invalid values,
            naming the line where known.
    """
    try:
        if not FileIOInterface.fexists(path):
            raise ConfigError("configuration file does not exist", path=path)
        content = FileIOInterface.fread(path)
    except ConfigError as e:
        if e.path is None:
            raise ConfigError(e.message, line=e.line, path=path) from e
        raise
    except ValueError as e:
        raise ConfigError(str(e), path=path) from e

    if content is None:
        return {}
    if isinstance(content, str):
        try:
            content = KeyValueFileIO._read(BytesIO(content.encode("utf-8")))
        except ConfigError as e:
            raise ConfigError(e.message, line=e.line, path=path) from e
    if isinstance(content, dict):
        entries = [(None, k, v) for k, v in content.items()]
    elif isinstance(content, list) and all(isinstance(item, tuple) for item in content):
        entries = content
    else:
        raise ConfigError("configuration must be a flat mapping of keys to values", path=path)

    settings: dict[str, Any] = {}
    for line, key, value in entries:
        if isinstance(value, (dict, list)):
            raise ConfigError(f"value of {key!r} must be a scalar", line=line, path=path)
        name = normalize_key(key)
        settings[name] = convert_value(name, value, line=line, path=path)
    return settings


def resolve_settings(
    flags: dict[str, Any],
    file_settings: Optional[dict[str, Any]] = None,
    preset: Optional[str] = None,
) -> dict[str, Any]:
    """
    Merge defaults < preset < config file < flags; ``None`` flags are unset.

    Raises:
        ConfigError: If the preset is unknown.
    """
    file_settings = dict(file_settings or {})
    flag_settings = {k: v for k, v in flags.items() if v is not None and k in CONVERTERS}
    preset = flag_settings.get("preset") or file_settings.get("preset") or preset
    if preset is not None and preset not in PRESETS:
        raise ConfigError(f"unknown preset {preset!r}; available: {', '.join(sorted(PRESETS))}")

    settings: dict[str, Any] = {}
    for layer in (DEFAULTS, PRESETS.get(preset, {}), file_settings, flag_settings):
        iter_update_dict(settings, dict(layer))
    return settings


def _mirror(t_sq: float, r: Optional[float], lossless: bool) -> MirrorSpec:
    if lossless or r is None:
        return MirrorSpec.lossless(t_sq)
    if not 0.0 <= t_sq <= 1.0:
        raise DomainError(f"Power transmission must lie in [0, 1], got {t_sq}.")
    return MirrorSpec(r=r, t=math.sqrt(t_sq))


def beta_from_settings(settings: dict[str, Any]) -> float:
    """``beta``, or the analytic waist value when ``waist`` is set."""
    if settings.get("waist") is not None:
        return beta_analytic(settings["waist"])
    return settings["beta"]


def build_spec(settings: dict[str, Any]) -> SystemSpec:
    """
    Build the system for resolved settings (gamma = 1).

    Without ``deltaa`` the cavity detuning follows the emitter detuning,
    Delta_a = Delta0 - emitter_cavity_detuning, where the latter is
    omega_0 - omega_a.

    Raises:
        DomainError: If any parameter is outside its domain.
    """
    geometry = Geometry.parse(settings["geometry"])
    beta = beta_from_settings(settings)
    emitter = EmitterSpec.chiral(beta) if geometry is Geometry.CHIRAL_RING else EmitterSpec.symmetric(beta)

    delta0 = settings["delta0"] if settings["delta0"] is not None else 0.0
    delta_a = settings["deltaa"]
    if delta_a is None:
        delta_a = delta0 - settings["emitter_cavity_detuning"]

    return SystemSpec(
        mirror1=_mirror(settings["t1sq"], settings["r1"], settings["lossless"]),
        mirror2=_mirror(settings["t2sq"], settings["r2"], settings["lossless"]),
        emitter=emitter,
        cavity=CavitySpec(nu_fsr=settings["nu_fsr"], alpha0=settings["alpha0"], xa_frac=settings["xa_frac"]),
        probe=ProbeSpec(delta0=delta0, delta_a=delta_a, amp_in=settings["amp_in"]),
        geometry=geometry,
    )

"""
Argument parser for the ``cavity-cascade`` command.

Options are parsed with ``argparse.SUPPRESS`` defaults so that only flags
given on the command line reach the settings layer; the documented defaults
live in :data:`DEFAULTS`.
"""

import argparse
from typing import Sequence

from ._settings import DEFAULTS, DEFAULT_POINTS, ENGINES, FIELDS, MODELS, PRESETS, PROBES, SWEEP_VARS, parse_angle


def _d(key: str) -> str:
    return f" (default: {DEFAULTS[key]})"


def _system_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)

    run = parent.add_argument_group("run")
    run.add_argument("--config", help="key=value (.cfg/.conf/.txt) or YAML run configuration")
    run.add_argument("--log-config", dest="log_config", help="YAML logging configuration")
    run.add_argument("--out", help="write the result to this path or fsspec URL instead of stdout")

    model = parent.add_argument_group("model")
    model.add_argument("--model", choices=MODELS, help="model to evaluate" + _d("model"))
    model.add_argument("--engine", choices=ENGINES, help="solver for the cascaded model" + _d("engine"))
    model.add_argument("--geometry", choices=("fp", "ring"), help="Fabry-Perot or chiral ring" + _d("geometry"))
    model.add_argument("--probe", choices=PROBES, help="JC drive through mirror 1 or the emitter" + _d("probe"))
    model.add_argument("--beta-b", dest="beta_b", type=float, help="emitter-probe channeling efficiency" + _d("beta_b"))

    system = parent.add_argument_group("system (rates in units of gamma)")
    system.add_argument("--beta", type=float, help="channeling efficiency into the cavity mode" + _d("beta"))
    system.add_argument("--waist", type=float, help="set beta from a Gaussian waist in wavelengths")
    system.add_argument("--alpha0", type=parse_angle, help="emitter roundtrip phase, e.g. pi or -pi/2 (default: pi)")
    system.add_argument("--t1sq", type=float, help="power transmission of mirror 1" + _d("t1sq"))
    system.add_argument("--t2sq", type=float, help="power transmission of mirror 2" + _d("t2sq"))
    system.add_argument("--r1", type=float, help="amplitude reflectivity of mirror 1 (lossy mirrors)")
    system.add_argument("--r2", type=float, help="amplitude reflectivity of mirror 2 (lossy mirrors)")
    system.add_argument("--lossless", action="store_true", help="r = sqrt(1 - t^2) for both mirrors")
    system.add_argument("--nu-fsr", dest="nu_fsr", type=float, help="free spectral range" + _d("nu_fsr"))
    system.add_argument("--xa-frac", dest="xa_frac", type=float, help="emitter position as a fraction of the length" + _d("xa_frac"))
    system.add_argument("--delta0", type=float, help="omega_0 - omega_p (default: 0)")
    system.add_argument("--deltaa", type=float, help="omega_a - omega_p (default: delta0 - emitter-cavity detuning)")
    system.add_argument("--amp-in", dest="amp_in", type=float, help="input amplitude" + _d("amp_in"))
    system.add_argument("--emitter-cavity-detuning", dest="emitter_cavity_detuning", type=float,
                        help="omega_0 - omega_a, held fixed in detuning sweeps" + _d("emitter_cavity_detuning"))
    return parent


def _grid_options(parser: argparse.ArgumentParser, points: int) -> None:
    parser.add_argument("--from", dest="start", type=float, help="first grid value")
    parser.add_argument("--to", dest="stop", type=float, help="last grid value")
    parser.add_argument("--points", type=int, help=f"grid points (default: {points})")


def build_parser() -> argparse.ArgumentParser:
    parent = _system_options()
    parser = argparse.ArgumentParser(
        prog="cavity-cascade",
        description="Steady states of a single emitter in a Fabry-Perot or chiral ring resonator: "
                    "Jaynes-Cummings versus cascaded model.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    commands.add_parser("solve", parents=[parent], argument_default=argparse.SUPPRESS,
                        help="solve one configuration and print JSON")

    sweep = commands.add_parser("sweep", parents=[parent], argument_default=argparse.SUPPRESS,
                                help="sweep one parameter and print CSV")
    sweep.add_argument("--var", choices=SWEEP_VARS, help="swept variable; deltap is omega_p - omega_0" + _d("var"))
    sweep.add_argument("--preset", choices=sorted(PRESETS), help="named parameter set (overridden by config and flags)")
    _grid_options(sweep, DEFAULT_POINTS["sweep"])

    peaks = commands.add_parser("peaks", parents=[parent], argument_default=argparse.SUPPRESS,
                                help="find extrema of a field magnitude along deltap")
    peaks.add_argument("--field", choices=FIELDS, help="field whose magnitude is scanned" + _d("field"))
    peaks.add_argument("--kind", choices=("max", "min", "both"), help="extrema to report" + _d("kind"))
    _grid_options(peaks, DEFAULT_POINTS["peaks"])

    compare = commands.add_parser("compare", parents=[parent], argument_default=argparse.SUPPRESS,
                                  help="deviation of the cascaded model from the JC model along deltap")
    _grid_options(compare, DEFAULT_POINTS["compare"])

    waist = commands.add_parser("beta-waist", parents=[parent], argument_default=argparse.SUPPRESS,
                                help="analytic and numeric beta for a Gaussian waist")
    waist.add_argument("--w0", type=float, help="waist in wavelengths")
    waist.add_argument("--theta-points", dest="theta_points", type=int, help="Gauss-Legendre order per theta panel" + _d("theta_points"))
    waist.add_argument("--phi-points", dest="phi_points", type=int, help="azimuthal trapezoid nodes" + _d("phi_points"))
    return parser


def _value_options(parser: argparse.ArgumentParser) -> set[str]:
    options: set[str] = set()
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            for sub in action.choices.values():
                options |= _value_options(sub)
        elif action.option_strings and action.nargs is None:
            options.update(action.option_strings)
    return options


def join_dash_values(parser: argparse.ArgumentParser, argv: Sequence[str]) -> list[str]:
    """
    Rewrite ``--option -value`` as ``--option=-value`` for options taking a value.

    argparse reads tokens such as ``-pi/2`` as flags, so ``--alpha0 -pi/2``
    would otherwise fail with "expected one argument".
    """
    options = _value_options(parser)
    tokens = list(argv)
    joined: list[str] = []
    i = 0
    while i < len(tokens):
        token = tokens[i]
        if (token in options and i + 1 < len(tokens)
                and tokens[i + 1].startswith("-") and not tokens[i + 1].startswith("--")):
            joined.append(f"{token}={tokens[i + 1]}")
            i += 2
            continue
        joined.append(token)
        i += 1
    return joined

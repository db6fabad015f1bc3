"""
``cavity-cascade`` command-line entry point.

Exit codes: 0 on success, 2 for usage, configuration and parameter-domain
errors, 3 for solver failures (divergence, singular systems, quadrature
non-convergence).
"""

import sys
from typing import Any, Optional, Sequence

from loguru import logger

from ..core import ConfigError
from ..file_io import CSVFileIO, FileIOInterface, JsonFileIO
from ..logging import LoggingManager
from ._commands import COMMANDS, cmd_beta_waist, cmd_compare, cmd_peaks, cmd_solve, cmd_sweep
from ._compare import compare_models
from ._parser import build_parser, join_dash_values
from ._peaks import Extremum, PeakReport, find_extrema
from ._settings import DEFAULTS, PRESETS, build_spec, parse_angle, parse_config, resolve_settings
from ._sweep import SweepResult, evaluate, run_sweep, sweep_grid

log = logger.bind(logger_name="cli")

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_SOLVER = 3


def _emit(result: Any, out: Optional[str], warnings: list[str]) -> None:
    if isinstance(result, SweepResult):
        frame = result.to_frame()
        if out:
            FileIOInterface.fwrite(out, frame)
        else:
            sys.stdout.write(CSVFileIO.render(frame))
        return
    document = dict(result, warnings=list(warnings))
    if out:
        FileIOInterface.fwrite(out, document)
    else:
        sys.stdout.write(JsonFileIO.render(document))


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one subcommand.

    Args:
        argv (Optional[Sequence[str]]): Arguments without the program name; defaults to ``sys.argv[1:]``.

    Returns:
        int: Process exit code.
    """
    parser = build_parser()
    try:
        flags = vars(parser.parse_args(join_dash_values(parser, sys.argv[1:] if argv is None else argv)))
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    command = flags.pop("command")

    try:
        manager = LoggingManager(flags.pop("log_config", None))
    except ConfigError as e:
        sys.stderr.write(f"cavity-cascade: {e}\n")
        return EXIT_USAGE

    try:
        with manager.capture() as warnings:
            file_settings = parse_config(flags["config"]) if flags.get("config") else {}
            settings = resolve_settings(flags, file_settings)
            result = COMMANDS[command](settings)
        _emit(result, settings["out"], warnings)
    except (ValueError, TypeError, OSError) as e:
        log.error(f"{command}: {e}")
        return EXIT_USAGE
    except ArithmeticError as e:
        log.error(f"{command}: {e}")
        return EXIT_SOLVER
    finally:
        manager.cleanup()
    return EXIT_OK


__all__ = [
    "COMMANDS",
    "DEFAULTS",
    "EXIT_OK",
    "EXIT_SOLVER",
    "EXIT_USAGE",
    "Extremum",
    "PRESETS",
    "PeakReport",
    "SweepResult",
    "build_parser",
    "build_spec",
    "cmd_beta_waist",
    "cmd_compare",
    "cmd_peaks",
    "cmd_solve",
    "cmd_sweep",
    "compare_models",
    "evaluate",
    "find_extrema",
    "join_dash_values",
    "main",
    "parse_angle",
    "parse_config",
    "resolve_settings",
    "run_sweep",
    "sweep_grid",
]

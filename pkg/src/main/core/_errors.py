"""
Exception hierarchy shared by all solvers and the CLI.

Every exception derives from a built-in base so callers that only know
about ``ValueError`` or ``ArithmeticError`` keep working.
"""

from typing import Optional


class CavityError(Exception):
    """Root of all errors raised by this package."""


class DomainError(CavityError, ValueError):
    """A parameter lies outside its physical domain or a precondition is violated."""


class DivergenceError(CavityError, ArithmeticError):
    """A rate or ratio diverges (vanishing loss channel)."""


class SingularityError(CavityError, ArithmeticError):
    """A steady-state denominator vanishes or a network matrix is ill-conditioned."""


class AccuracyError(CavityError, ArithmeticError):
    """A numerical quadrature did not converge to the requested tolerance."""


class ConfigError(CavityError, ValueError):
    """
    A configuration file could not be parsed.

    Args:
        message (str): Description of the problem.
        line (Optional[int]): 1-based line number in the offending file, if known.
        path (Optional[str]): Path of the offending file, if known.
    """

    def __init__(self, message: str, line: Optional[int] = None, path: Optional[str] = None):
        self.message = message
        self.line = line
        self.path = path
        location = ""
        if path is not None:
            location += f"{path}"
        if line is not None:
            location += f":{line}" if location else f"line {line}"
        super().__init__(f"{location}: {message}" if location else message)

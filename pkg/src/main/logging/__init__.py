"""
Logging configuration for the command-line tools.
"""

from ._logging_manager import LoggingManager

__all__ = ["LoggingManager"]

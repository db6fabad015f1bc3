"""
LoggingManager - YAML-configured Loguru handlers and named loggers.

Library modules bind a named logger once (``logger.bind(logger_name=...)``)
and never add sinks. The command-line entry point creates a LoggingManager,
which routes each named logger to its handlers with an effective threshold
of max(handler level, logger level).
"""

import sys
from collections import defaultdict
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Optional

from loguru import logger

from ..core import ConfigError
from ..file_io import FileIOInterface

_STREAMS = {"sys.stdout": sys.stdout, "sys.stderr": sys.stderr}


class LoggingManager:
    """
    Manage Loguru handlers and named loggers from a YAML configuration.

    The configuration has three sections: ``formats`` (name -> format string),
    ``handlers`` (name -> keyword arguments for ``logger.add`` with a named
    format) and ``loggers`` (name -> list of ``{handler, level}``).
    """

    DEFAULT_CONFIG_PATH = Path(__file__).parent / "_default_logger_config.yaml"

    def __init__(self, config_path: Optional[str] = None):
        """
        Args:
            config_path (Optional[str]): YAML configuration. Defaults to the packaged configuration.

        Raises:
            ConfigError: If the given file does not exist or is not a mapping.
        """
        self._handlers_map = defaultdict(dict)  # handler_name -> {id, base_level, loggers: {logger_name: {level}}}
        self._loggers_map = defaultdict(list)   # logger_name -> [{handler, level}, ...]

        logger.remove()
        self._config_path = str(config_path) if config_path else str(self.DEFAULT_CONFIG_PATH)
        self.config = {}
        self._setup_logger()

    def _setup_logger(self):
        if not FileIOInterface.fexists(self._config_path):
            raise ConfigError("logging configuration file does not exist", path=self._config_path)
        try:
            conf = FileIOInterface.fread(self._config_path)
        except ValueError as e:
            raise ConfigError(f"cannot read logging configuration: {e}", path=self._config_path) from e
        if not isinstance(conf, dict):
            raise ConfigError("logging configuration must be a mapping", path=self._config_path)
        self.config = conf
        self._load_handlers(self.config)

    def _load_handlers(self, conf: dict):
        self._handlers_map.clear()
        self._loggers_map.clear()

        for _handler_name, _handler_conf in (conf.get("handlers") or {}).items():
            self.add_handler(_handler_name, dict(_handler_conf))

        for _logger_name, _handlers in (conf.get("loggers") or {}).items():
            self.add_logger(_logger_name, _handlers)

    ## ------------------------------ HANDLER MANAGEMENT ------------------------------ ##
    def add_handler(self, handler_name: str, handler_conf: dict):
        """
        Configure and add a new handler.

        Raises:
            AssertionError: If the handler already exists or lacks a 'level'.
        """
        assert handler_name not in self._handlers_map, f"Handler {handler_name} already exists. Please use update_handler to modify it."
        assert "level" in handler_conf, f"Handler {handler_name} must have a 'level' key."
        handler_conf = self._modify_handler_conf(handler_name, handler_conf, self.config.get("formats", {}))
        self._handlers_map[handler_name]["base_level"] = handler_conf["level"]
        self._handlers_map[handler_name]["id"] = logger.add(**handler_conf)

    def update_handler(self, handler_name: str, handler_conf: dict):
        """
        Replace the sink of an existing handler, keeping its logger mappings.

        Raises:
            AssertionError: If the handler does not exist or lacks a 'level'.
        """
        assert handler_name in self._handlers_map, f"Handler {handler_name} does not exist. Please use add_handler to create it."
        assert "level" in handler_conf, f"Handler {handler_name} must have a 'level' key."
        logger.remove(self._handlers_map[handler_name]["id"])
        self._handlers_map[handler_name]["base_level"] = handler_conf["level"].upper()
        handler_conf = self._modify_handler_conf(handler_name, handler_conf, self.config.get("formats", {}))
        self._handlers_map[handler_name]["id"] = logger.add(**handler_conf)

    def remove_handler(self, handler_name: str):
        """Remove a handler and drop it from every logger that references it."""
        assert handler_name in self._handlers_map, f"Handler {handler_name} does not exist."
        logger.remove(self._handlers_map[handler_name]["id"])
        loggers = self._handlers_map.pop(handler_name).get("loggers", {})
        for logger_name in loggers:
            if logger_name in self._loggers_map:
                self._loggers_map[logger_name] = [
                    h for h in self._loggers_map[logger_name] if h["handler"] != handler_name
                ]

    def _modify_handler_conf(self, handler_name: str, handler_conf: dict, format_conf: dict) -> dict:
        """
        Resolve the named format, map stream sinks and attach the logger filter.

        Raises:
            AssertionError: If 'sink', 'level' or 'format' is missing.
        """
        for key in ("sink", "level", "format"):
            if key not in handler_conf:
                raise AssertionError(f"Handler {handler_name} must have a '{key}' key.")

        handler_conf = dict(handler_conf)
        format_str = handler_conf["format"]
        if format_str in format_conf:
            handler_conf["format"] = format_conf[format_str]
        else:
            sys.stderr.write(
                f"Format '{format_str}' of handler '{handler_name}' is not defined in 'formats'; using it verbatim.\n"
            )

        sink = handler_conf["sink"]
        if isinstance(sink, str) and sink in _STREAMS:
            handler_conf["sink"] = _STREAMS[sink]

        handler_conf["level"] = handler_conf["level"].upper()
        handler_conf["filter"] = self._make_handler_filter(handler_name)
        return handler_conf

    def _make_handler_filter(self, handler_name: str):
        """
        Filter passing records of loggers mapped to ``handler_name`` whose level
        reaches max(handler base level, logger level).
        """

        def filter_func(record):
            logger_name = record["extra"].get("logger_name")
            handler = self._handlers_map.get(handler_name, {})
            if logger_name not in handler.get("loggers", {}):
                return False
            handler_base_level = logger.level(handler["base_level"]).no
            logger_level = logger.level(handler["loggers"][logger_name]["level"]).no
            return record["level"].no >= max(handler_base_level, logger_level)

        return filter_func

    ## ------------------------------ LOGGER MANAGEMENT ------------------------------ ##
    def get_logger(self, logger_name: str):
        """
        Return the Loguru logger bound to ``logger_name``.

        Raises:
            AssertionError: If the logger has not been added.
        """
        assert logger_name in self._loggers_map, f"Logger {logger_name} does not exist. Please add it first."
        return logger.bind(logger_name=logger_name)

    def add_logger(self, logger_name: str, handlers: list[dict]):
        """
        Route ``logger_name`` to the given handlers.

        Args:
            logger_name (str): Name used in ``logger.bind(logger_name=...)``.
            handlers (list[dict]): Entries ``{"handler": name, "level": level}``.

        Raises:
            AssertionError: If the logger already exists.
            KeyError: If a referenced handler does not exist.
        """
        assert logger_name not in self._loggers_map, f"Logger {logger_name} already exists. Please use update_logger to modify it."
        for _handler in handlers:
            handler_name = _handler["handler"]
            if handler_name not in self._handlers_map:
                raise KeyError(f"Handler '{handler_name}' does not exist. Please add the handler before referencing it in a logger.")
            self._handlers_map[handler_name].setdefault("loggers", {})[logger_name] = {"level": _handler["level"].upper()}
        self._loggers_map[logger_name] = list(handlers)

    def update_logger(self, logger_name: str, handlers: list[dict]):
        assert logger_name in self._loggers_map, f"Logger {logger_name} does not exist. Please use add_logger to create it."
        self.remove_logger(logger_name)
        self.add_logger(logger_name, handlers)

    def remove_logger(self, logger_name: str):
        assert logger_name in self._loggers_map, f"Logger {logger_name} does not exist."
        for _handler in self._loggers_map.pop(logger_name):
            if _handler["handler"] in self._handlers_map:
                self._handlers_map[_handler["handler"]].get("loggers", {}).pop(logger_name, None)

    ## ------------------------------ CAPTURE ------------------------------ ##
    @contextmanager
    def capture(self, level: str = "WARNING") -> Iterator[list[str]]:
        """
        Collect the messages of all named loggers at ``level`` or above.

        Yields:
            list[str]: Messages in emission order, filled while the block runs.
        """
        messages: list[str] = []
        handler_id = logger.add(
            lambda message: messages.append(message.record["message"]),
            level=level.upper(),
            format="{message}",
            filter=lambda record: "logger_name" in record["extra"],
        )
        try:
            yield messages
        finally:
            logger.remove(handler_id)

    ## ------------------------------ CLEANUP ------------------------------ ##
    def cleanup(self):
        """Remove all handlers and clear the mappings. Safe to call repeatedly."""
        logger.remove()
        self._handlers_map.clear()
        self._loggers_map.clear()

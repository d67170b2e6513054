"""Logging utilities."""

import logging
import sys
from pathlib import Path
from typing import IO, Optional, Union

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


def resolve_level(level: Union[int, str]) -> int:
    """Accept a logging constant or a level name such as ``"debug"``."""
    if isinstance(level, int):
        return level
    value = logging.getLevelName(str(level).upper())
    if not isinstance(value, int):
        raise ValueError(f"unknown log level {level!r}")
    return value


def setup_logger(
    name: str = 'schroeder',
    log_file: Optional[str] = None,
    level: Union[int, str] = logging.INFO,
    stream: Optional[IO] = None
) -> logging.Logger:
    """
    Set up the package logger with a console handler and an optional file handler.

    The CLI passes ``sys.stderr`` as the stream so that stdout carries only
    the JSON result.

    Args:
        name: Logger name
        log_file: Optional log file path (parent directories are created)
        level: Logging level, as a constant or a name
        stream: Console stream, stdout by default

    Returns:
        Configured logger
    """
    level = resolve_level(level)
    logger = logging.getLogger(name)
    logger.setLevel(level)

    # Remove existing handlers
    logger.handlers = []

    formatter = logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT)
    handlers = [logging.StreamHandler(stream or sys.stdout)]
    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_file))

    for handler in handlers:
        handler.setLevel(level)
        handler.setFormatter(formatter)
        logger.addHandler(handler)

    return logger
